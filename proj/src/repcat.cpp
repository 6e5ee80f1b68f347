#include "phall/repcat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace phall {

Matrix intertwiner_matrix(const Rep& m, const Rep& n, const Quiver& q, const FieldOrder& field) {
  const int nv = q.vertex_count();
  std::vector<std::size_t> var_off(static_cast<std::size_t>(nv) + 1, 0);
  for (int v = 0; v < nv; ++v) var_off[v + 1] = var_off[v] + static_cast<std::size_t>(n.dim[v] * m.dim[v]);
  std::vector<std::size_t> eq_off(q.arrows().size() + 1, 0);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrows()[a];
    eq_off[a + 1] = eq_off[a] + static_cast<std::size_t>(n.dim[ar.target] * m.dim[ar.source]);
  }
  Matrix phi(eq_off.back(), var_off.back());
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& ar = q.arrows()[a];
    const Matrix& ma = m.arrows[a];
    const Matrix& na = n.arrows[a];
    const std::size_t rows = static_cast<std::size_t>(n.dim[ar.target]);
    const std::size_t cols = static_cast<std::size_t>(m.dim[ar.source]);
    const std::size_t mt = static_cast<std::size_t>(m.dim[ar.target]);
    const std::size_t ns = static_cast<std::size_t>(n.dim[ar.source]);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        std::size_t eq = eq_off[a] + r * cols + c;
        for (std::size_t k = 0; k < mt; ++k) {
          std::size_t var = var_off[ar.target] + r * mt + k;
          phi(eq, var) = field.add(phi(eq, var), ma(k, c));
        }
        for (std::size_t k = 0; k < ns; ++k) {
          std::size_t var = var_off[ar.source] + k * cols + c;
          phi(eq, var) = field.sub(phi(eq, var), na(r, k));
        }
      }
    }
  }
  return phi;
}

RepMorphism unpack_morphism(const std::vector<int>& x, const Rep& m, const Rep& n, const Quiver& q) {
  RepMorphism f;
  std::size_t off = 0;
  for (int v = 0; v < q.vertex_count(); ++v) {
    Matrix c(static_cast<std::size_t>(n.dim[v]), static_cast<std::size_t>(m.dim[v]));
    std::copy(x.begin() + static_cast<std::ptrdiff_t>(off),
              x.begin() + static_cast<std::ptrdiff_t>(off + c.entries.size()), c.entries.begin());
    off += c.entries.size();
    f.components.push_back(std::move(c));
  }
  return f;
}

RepCategory::RepCategory(Quiver quiver, int q, std::uint64_t budget)
    : quiver_(std::move(quiver)), field_(q), budget_(budget) {}

std::uint64_t RepCategory::encode(const Rep& r) const {
  std::uint64_t code = 0;
  const auto q = static_cast<std::uint64_t>(field_.q());
  for (const Matrix& m : r.arrows) {
    for (int x : m.entries) code = code * q + static_cast<std::uint64_t>(x);
  }
  return code;
}

Rep RepCategory::decode(const DimVector& d, std::uint64_t code) const {
  Rep r{d, {}};
  for (const Arrow& a : quiver_.arrows()) {
    r.arrows.emplace_back(static_cast<std::size_t>(d[a.target]), static_cast<std::size_t>(d[a.source]));
  }
  const auto q = static_cast<std::uint64_t>(field_.q());
  for (std::size_t a = r.arrows.size(); a-- > 0;) {
    auto& e = r.arrows[a].entries;
    for (std::size_t i = e.size(); i-- > 0;) {
      e[i] = static_cast<int>(code % q);
      code /= q;
    }
  }
  return r;
}

namespace {

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

const RepCategory::ClassTable& RepCategory::table(const DimVector& d) {
  if (static_cast<int>(d.size()) != n()) throw std::invalid_argument("dimension vector length mismatch");
  auto it = tables_.find(d);
  if (it != tables_.end()) return *it->second;

  std::uint64_t cells = 0;
  for (const Arrow& a : quiver_.arrows()) cells += static_cast<std::uint64_t>(d[a.source] * d[a.target]);
  std::uint64_t total = 0;
  try {
    total = checked_pow(static_cast<std::uint64_t>(q()), cells);
  } catch (const std::overflow_error&) {
    throw BudgetExceeded("class table for " + to_string(d));
  }
  if (total > budget_) throw BudgetExceeded("class table for " + to_string(d) + " needs " + std::to_string(total) + " tuples");

  // Generators of GL(d): transvections I + E_ij and diag(g, 1, ..., 1) at
  // each vertex. Acting on a tuple, g_v multiplies arrows into v on the left
  // and arrows out of v on the right by its inverse.
  struct Gen {
    int vertex;
    int i;
    int j;  // j < 0 marks the diagonal generator
  };
  std::vector<Gen> gens;
  for (int v = 0; v < n(); ++v) {
    for (int i = 0; i < d[v]; ++i) {
      for (int j = 0; j < d[v]; ++j) {
        if (i != j) gens.push_back({v, i, j});
      }
    }
    if (d[v] > 0 && q() > 2) gens.push_back({v, 0, -1});
  }
  const int g = field_.primitive_root();
  const int g_inv = field_.inv(g);

  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0U);
  for (std::uint64_t code = 0; code < total; ++code) {
    const Rep base = decode(d, code);
    for (const Gen& gen : gens) {
      Rep r = base;
      for (std::size_t a = 0; a < r.arrows.size(); ++a) {
        const Arrow& ar = quiver_.arrows()[a];
        Matrix& m = r.arrows[a];
        if (ar.target == gen.vertex) {
          for (std::size_t c = 0; c < m.cols; ++c) {
            if (gen.j < 0) {
              m(gen.i, c) = field_.mul(m(gen.i, c), g);
            } else {
              m(gen.i, c) = field_.add(m(gen.i, c), m(gen.j, c));
            }
          }
        }
        if (ar.source == gen.vertex) {
          for (std::size_t row = 0; row < m.rows; ++row) {
            if (gen.j < 0) {
              m(row, gen.i) = field_.mul(m(row, gen.i), g_inv);
            } else {
              m(row, gen.j) = field_.sub(m(row, gen.j), m(row, gen.i));
            }
          }
        }
      }
      std::uint32_t x = find_root(parent, static_cast<std::uint32_t>(code));
      std::uint32_t y = find_root(parent, static_cast<std::uint32_t>(encode(r)));
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }

  // Roots are the minimal codes of their components since unions always
  // keep the smaller root.
  auto t = std::make_unique<ClassTable>();
  t->class_of_code.assign(total, 0);
  std::vector<std::uint32_t> index_of_root(total, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint32_t root = find_root(parent, static_cast<std::uint32_t>(code));
    if (root == code) {
      index_of_root[code] = static_cast<std::uint32_t>(t->canonical_codes.size());
      t->canonical_codes.push_back(code);
      t->orbit_sizes.push_back(0);
      t->representatives.push_back(decode(d, code));
    }
    std::uint32_t idx = index_of_root[root];
    t->class_of_code[code] = idx;
    ++t->orbit_sizes[idx];
  }
  auto [pos, inserted] = tables_.emplace(d, std::move(t));
  return *pos->second;
}

std::vector<IsoClassId> RepCategory::enumerate_classes(const DimVector& d) {
  const ClassTable& t = table(d);
  std::vector<IsoClassId> out;
  for (std::uint32_t i = 0; i < t.canonical_codes.size(); ++i) out.push_back({d, i});
  return out;
}

std::size_t RepCategory::class_count(const DimVector& d) { return table(d).canonical_codes.size(); }

std::vector<IsoClassId> RepCategory::classes_within(const DimVector& bound) {
  std::vector<IsoClassId> out;
  for (const DimVector& d : dims_within(bound)) {
    auto cls = enumerate_classes(d);
    out.insert(out.end(), cls.begin(), cls.end());
  }
  return out;
}

const Rep& RepCategory::representative(const IsoClassId& id) {
  const ClassTable& t = table(id.dim);
  if (id.index >= t.representatives.size()) throw std::invalid_argument("no class " + id.label());
  return t.representatives[id.index];
}

IsoClassId RepCategory::canonical_id(const Rep& r) {
  r.validate(quiver_);
  const ClassTable& t = table(r.dim);
  return {r.dim, t.class_of_code[encode(r)]};
}

std::uint64_t RepCategory::orbit_size(const IsoClassId& id) {
  representative(id);
  return table(id.dim).orbit_sizes[id.index];
}

void RepCategory::hom_ext(const IsoClassId& m, const IsoClassId& n, int& hom, int& ext) {
  auto key = std::make_pair(m, n);
  auto it = hom_ext_.find(key);
  if (it == hom_ext_.end()) {
    Matrix phi = intertwiner_matrix(representative(m), representative(n), quiver_, field_);
    int r = static_cast<int>(rank(phi, field_));
    it = hom_ext_.emplace(key, std::make_pair(static_cast<int>(phi.cols) - r, static_cast<int>(phi.rows) - r)).first;
  }
  hom = it->second.first;
  ext = it->second.second;
}

int RepCategory::hom_dim(const IsoClassId& m, const IsoClassId& n) {
  int h = 0;
  int e = 0;
  hom_ext(m, n, h, e);
  return h;
}

int RepCategory::ext1_dim(const IsoClassId& m, const IsoClassId& n) {
  int h = 0;
  int e = 0;
  hom_ext(m, n, h, e);
  return e;
}

int RepCategory::euler_form(const KClass& a, const KClass& b) const {
  int s = 0;
  for (int v = 0; v < n(); ++v) s += a[v] * b[v];
  for (const Arrow& ar : quiver_.arrows()) s -= a[ar.source] * b[ar.target];
  return s;
}

int RepCategory::symmetric_form(const KClass& a, const KClass& b) const { return euler_form(a, b) + euler_form(b, a); }

std::uint64_t RepCategory::aut_order(const IsoClassId& m) {
  auto it = aut_.find(m);
  if (it != aut_.end()) return it->second;
  std::uint64_t group = 1;
  for (int v = 0; v < n(); ++v) group *= gl_order(static_cast<unsigned>(m.dim[v]), field_);
  std::uint64_t orbit = orbit_size(m);
  if (group % orbit != 0) throw std::logic_error("orbit size does not divide |GL(d)|");
  return aut_.emplace(m, group / orbit).first->second;
}

std::uint64_t RepCategory::aut_order_enumerated(const IsoClassId& m) {
  const Rep& r = representative(m);
  Matrix k = kernel_basis(intertwiner_matrix(r, r, quiver_, field_), field_);
  std::uint64_t count = 0;
  for (const Matrix& coeffs : enumerate_matrices(k.cols, 1, field_, budget_)) {
    Matrix x = multiply(k, coeffs, field_);
    if (is_isomorphism(unpack_morphism(x.entries, r, r, quiver_), field_)) ++count;
  }
  return count;
}

const RepCategory::SubTally& RepCategory::sub_tally(const IsoClassId& l, const DimVector& sub_dim) {
  auto key = std::make_pair(l, sub_dim);
  auto it = sub_tallies_.find(key);
  if (it != sub_tallies_.end()) return it->second;

  const Rep& r = representative(l);
  std::vector<std::vector<Matrix>> choices(static_cast<std::size_t>(n()));
  std::uint64_t combos = 1;
  for (int v = 0; v < n(); ++v) {
    choices[v] = enumerate_subspaces(static_cast<std::size_t>(l.dim[v]), static_cast<std::size_t>(sub_dim[v]), field_, budget_);
    combos *= choices[v].size();
    if (combos > budget_) throw BudgetExceeded("subrepresentation search in " + l.label());
  }
  std::vector<Matrix> zero_basis;
  std::vector<Matrix> whole;
  for (int v = 0; v < n(); ++v) {
    zero_basis.emplace_back(static_cast<std::size_t>(l.dim[v]), 0);
    whole.push_back(Matrix::identity(static_cast<std::size_t>(l.dim[v])));
  }
  SubTally tally;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n()), 0);
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::uint64_t rest = c;
    for (int v = n(); v-- > 0;) {
      pick[v] = rest % choices[v].size();
      rest /= choices[v].size();
    }
    std::vector<Matrix> x;
    for (int v = 0; v < n(); ++v) x.push_back(choices[v][pick[v]]);
    bool closed = true;
    for (std::size_t a = 0; a < quiver_.arrows().size() && closed; ++a) {
      const Arrow& ar = quiver_.arrows()[a];
      Matrix image = multiply(r.arrows[a], x[ar.source], field_);
      closed = rank(hstack(x[ar.target], image), field_) == x[ar.target].cols;
    }
    if (!closed) continue;
    IsoClassId sub = canonical_id(subquotient(r, zero_basis, x, quiver_, field_));
    IsoClassId quot = canonical_id(subquotient(r, x, whole, quiver_, field_));
    ++tally[{quot, sub}];
  }
  return sub_tallies_.emplace(key, std::move(tally)).first->second;
}

std::uint64_t RepCategory::hall_number(const IsoClassId& l, const IsoClassId& m, const IsoClassId& n) {
  if (m.dim + n.dim != l.dim) return 0;
  const SubTally& t = sub_tally(l, n.dim);
  auto it = t.find({m, n});
  return it == t.end() ? 0 : it->second;
}

const Matrix& RepCategory::ext_basis(const IsoClassId& m, const IsoClassId& n) {
  auto key = std::make_pair(m, n);
  auto it = ext_bases_.find(key);
  if (it != ext_bases_.end()) return it->second;
  Matrix phi = intertwiner_matrix(representative(m), representative(n), quiver_, field_);
  Matrix image = image_basis(phi, field_);
  return ext_bases_.emplace(key, complement_basis(image, phi.rows, field_)).first->second;
}

Rep RepCategory::extension_rep(const Rep& m, const Rep& n, const Matrix& cocycle) const {
  Rep l{m.dim + n.dim, {}};
  std::size_t off = 0;
  for (std::size_t a = 0; a < quiver_.arrows().size(); ++a) {
    const Arrow& ar = quiver_.arrows()[a];
    const Matrix& na = n.arrows[a];
    const Matrix& ma = m.arrows[a];
    Matrix block(na.rows + ma.rows, na.cols + ma.cols);
    for (std::size_t i = 0; i < na.rows; ++i) {
      for (std::size_t j = 0; j < na.cols; ++j) block(i, j) = na(i, j);
    }
    for (std::size_t i = 0; i < ma.rows; ++i) {
      for (std::size_t j = 0; j < ma.cols; ++j) block(na.rows + i, na.cols + j) = ma(i, j);
    }
    const std::size_t er = static_cast<std::size_t>(n.dim[ar.target]);
    const std::size_t ec = static_cast<std::size_t>(m.dim[ar.source]);
    for (std::size_t i = 0; i < er; ++i) {
      for (std::size_t j = 0; j < ec; ++j) block(i, na.cols + j) = cocycle(off + i * ec + j, 0);
    }
    off += er * ec;
    l.arrows.push_back(std::move(block));
  }
  return l;
}

IsoClassId RepCategory::ext_middle(const IsoClassId& m, const IsoClassId& n, const std::vector<int>& cocycle) {
  const Matrix& basis = ext_basis(m, n);
  if (cocycle.size() != basis.cols) throw std::invalid_argument("cocycle length differs from Ext dimension");
  Matrix coeffs(basis.cols, 1);
  for (std::size_t i = 0; i < cocycle.size(); ++i) coeffs(i, 0) = field_.reduce(cocycle[i]);
  Matrix e = multiply(basis, coeffs, field_);
  return canonical_id(extension_rep(representative(m), representative(n), e));
}

const std::map<IsoClassId, std::uint64_t>& RepCategory::ext_fibers(const IsoClassId& m, const IsoClassId& n) {
  auto key = std::make_pair(m, n);
  auto it = ext_fibers_.find(key);
  if (it != ext_fibers_.end()) return it->second;
  const Matrix basis = ext_basis(m, n);
  const Rep& rm = representative(m);
  const Rep& rn = representative(n);
  std::map<IsoClassId, std::uint64_t> fibers;
  for (const Matrix& coeffs : enumerate_matrices(basis.cols, 1, field_, budget_)) {
    Matrix e = multiply(basis, coeffs, field_);
    ++fibers[canonical_id(extension_rep(rm, rn, e))];
  }
  return ext_fibers_.emplace(key, std::move(fibers)).first->second;
}

std::uint64_t RepCategory::ext_class_count(const IsoClassId& m, const IsoClassId& n, const IsoClassId& l) {
  if (m.dim + n.dim != l.dim) return 0;
  const auto& f = ext_fibers(m, n);
  auto it = f.find(l);
  return it == f.end() ? 0 : it->second;
}

}  // namespace phall
