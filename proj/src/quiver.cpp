#include "phall/quiver.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace phall {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows) : n_(vertex_count), arrows_(std::move(arrows)) {
  if (n_ < 1) throw std::invalid_argument("quiver needs at least one vertex");
  for (const Arrow& a : arrows_) {
    if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_) {
      throw std::invalid_argument("arrow endpoint out of range");
    }
  }
  // Kahn's algorithm doubles as the acyclicity check.
  std::vector<int> indegree(static_cast<std::size_t>(n_), 0);
  for (const Arrow& a : arrows_) ++indegree[a.target];
  std::vector<int> ready;
  for (int v = 0; v < n_; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++seen;
    for (const Arrow& a : arrows_) {
      if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
    }
  }
  if (seen != n_) throw std::invalid_argument("quiver has an oriented cycle");

  paths_.resize(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) {
    std::vector<int> current;
    std::function<void(int)> walk = [&](int at) {
      paths_[v].push_back(current);
      for (std::size_t a = 0; a < arrows_.size(); ++a) {
        if (arrows_[a].source != at) continue;
        current.push_back(static_cast<int>(a));
        walk(arrows_[a].target);
        current.pop_back();
      }
    };
    walk(v);
  }
}

Quiver Quiver::parse(const std::string& text) {
  if (text == "A1" || text == "a1") return a1();
  if (text == "A2" || text == "a2" || text == "1->2") return a2();
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) return Quiver(std::stoi(text), {});
    int n = std::stoi(text.substr(0, colon));
    std::vector<Arrow> arrows;
    std::stringstream in(text.substr(colon + 1));
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      auto dash = item.find('-');
      if (dash == std::string::npos) throw std::invalid_argument("arrow '" + item + "' lacks '-'");
      arrows.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
    }
    return Quiver(n, std::move(arrows));
  } catch (const std::logic_error& e) {
    throw std::invalid_argument("malformed quiver '" + text + "': " + e.what());
  }
}

int Quiver::path_target(int source, const std::vector<int>& path) const {
  return path.empty() ? source : arrows_[path.back()].target;
}

std::string Quiver::name() const {
  if (*this == a1()) return "A1";
  if (*this == a2()) return "1->2";
  std::string s = std::to_string(n_) + ":";
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(arrows_[i].source) + "-" + std::to_string(arrows_[i].target);
  }
  return s;
}

void DimTag::check(const std::vector<int>& c) {
  for (int x : c) {
    if (x < 0) throw std::invalid_argument("dimension vector with negative entry");
  }
}

KClass to_k(const DimVector& d) { return KClass(d.values()); }

KClass operator+(const KClass& a, const KClass& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return KClass(std::move(c));
}

KClass operator-(const KClass& a, const KClass& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return KClass(std::move(c));
}

KClass operator-(const KClass& a) { return KClass::zero(static_cast<int>(a.size())) - a; }

DimVector operator+(const DimVector& a, const DimVector& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return DimVector(std::move(c));
}

bool fits_within(const DimVector& a, const DimVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

DimVector dim_difference(const DimVector& b, const DimVector& a) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = b[i] - a[i];
  return DimVector(std::move(c));
}

namespace {
std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}
}  // namespace

std::string to_string(const DimVector& d) { return join(d.values()); }
std::string to_string(const KClass& k) { return join(k.values()); }

std::vector<DimVector> dims_within(const DimVector& bound) {
  std::vector<DimVector> out;
  std::vector<int> cur(bound.size(), 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = cur.size();
    while (i-- > 0) {
      if (cur[i] < bound[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

std::string IsoClassId::label() const { return "d" + to_string(dim) + "#" + std::to_string(index); }

IsoClassId IsoClassId::parse_label(const std::string& text, int n) {
  auto fail = [&](const std::string& why) { return std::invalid_argument("bad class label '" + text + "': " + why); };
  if (text.size() < 5 || text[0] != 'd' || text[1] != '(') throw fail("expected d(...)#k");
  auto close = text.find(')');
  if (close == std::string::npos || close + 1 >= text.size() || text[close + 1] != '#') throw fail("expected )#");
  std::vector<int> dims;
  std::stringstream in(text.substr(2, close - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) throw fail("bad dimension");
    dims.push_back(std::stoi(item));
  }
  if (static_cast<int>(dims.size()) != n) throw fail("dimension vector length differs from vertex count");
  std::string idx = text.substr(close + 2);
  if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos) throw fail("bad index");
  return {DimVector(dims), static_cast<std::uint32_t>(std::stoul(idx))};
}

Rep Rep::zero(const Quiver& q) {
  Rep r{DimVector::zero(q.vertex_count()), {}};
  r.arrows.assign(q.arrows().size(), Matrix(0, 0));
  return r;
}

void Rep::validate(const Quiver& q) const {
  if (static_cast<int>(dim.size()) != q.vertex_count()) throw std::invalid_argument("rep dimension length mismatch");
  if (arrows.size() != q.arrows().size()) throw std::invalid_argument("rep arrow count mismatch");
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const Arrow& ar = q.arrows()[a];
    if (arrows[a].rows != static_cast<std::size_t>(dim[ar.target]) ||
        arrows[a].cols != static_cast<std::size_t>(dim[ar.source])) {
      throw std::invalid_argument("arrow matrix shape mismatch");
    }
  }
}

Rep direct_sum(const Rep& x, const Rep& y, const Quiver& q) {
  Rep r{x.dim + y.dim, {}};
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Matrix& mx = x.arrows[a];
    const Matrix& my = y.arrows[a];
    Matrix m(mx.rows + my.rows, mx.cols + my.cols);
    for (std::size_t i = 0; i < mx.rows; ++i) {
      for (std::size_t j = 0; j < mx.cols; ++j) m(i, j) = mx(i, j);
    }
    for (std::size_t i = 0; i < my.rows; ++i) {
      for (std::size_t j = 0; j < my.cols; ++j) m(mx.rows + i, mx.cols + j) = my(i, j);
    }
    r.arrows.push_back(std::move(m));
  }
  return r;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f, const FieldOrder& field) {
  RepMorphism h;
  for (std::size_t v = 0; v < f.components.size(); ++v) h.components.push_back(multiply(g.components[v], f.components[v], field));
  return h;
}

bool is_morphism(const RepMorphism& f, const Rep& x, const Rep& y, const Quiver& q, const FieldOrder& field) {
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrows()[a];
    Matrix lhs = multiply(f.components[ar.target], x.arrows[a], field);
    Matrix rhs = multiply(y.arrows[a], f.components[ar.source], field);
    if (lhs != rhs) return false;
  }
  return true;
}

bool is_isomorphism(const RepMorphism& f, const FieldOrder& field) {
  return std::all_of(f.components.begin(), f.components.end(), [&](const Matrix& m) { return is_invertible(m, field); });
}

Rep subquotient(const Rep& r, const std::vector<Matrix>& u, const std::vector<Matrix>& w, const Quiver& q,
                const FieldOrder& field) {
  const int n = q.vertex_count();
  std::vector<Matrix> u_coords(static_cast<std::size_t>(n));
  std::vector<Matrix> comp(static_cast<std::size_t>(n));
  std::vector<Matrix> split(static_cast<std::size_t>(n));
  std::vector<int> dims(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    u_coords[v] = coordinates_in(w[v], u[v], field);
    comp[v] = complement_basis(u_coords[v], w[v].cols, field);
    split[v] = hstack(u_coords[v], comp[v]);
    dims[v] = static_cast<int>(comp[v].cols);
  }
  Rep out{DimVector(dims), {}};
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrows()[a];
    Matrix image = multiply(r.arrows[a], multiply(w[ar.source], comp[ar.source], field), field);
    Matrix in_w = coordinates_in(w[ar.target], image, field);
    Matrix both = coordinates_in(split[ar.target], in_w, field);
    Matrix m(comp[ar.target].cols, comp[ar.source].cols);
    std::size_t offset = u_coords[ar.target].cols;
    for (std::size_t i = 0; i < m.rows; ++i) {
      for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = both(offset + i, j);
    }
    out.arrows.push_back(std::move(m));
  }
  return out;
}

Matrix path_matrix(const Rep& r, const std::vector<int>& path, int source, const FieldOrder& field) {
  Matrix m = Matrix::identity(static_cast<std::size_t>(r.dim[source]));
  for (int a : path) m = multiply(r.arrows[a], m, field);
  return m;
}

}  // namespace phall
