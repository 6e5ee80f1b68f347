#include "phall/periodic.hpp"

#include <algorithm>
#include <set>

namespace phall {

namespace {

int wrap(int i, int m) { return ((i % m) + m) % m; }

/// Calls visit(tuple) for every tuple in the product of the candidate lists.
template <class Visit>
void for_each_tuple(const std::vector<std::vector<IsoClassId>>& candidates, Visit visit) {
  const std::size_t m = candidates.size();
  for (const auto& c : candidates) {
    if (c.empty()) return;
  }
  std::vector<std::size_t> idx(m, 0);
  Graded tuple(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) tuple[i] = candidates[i][idx[i]];
    visit(tuple);
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++idx[i] < candidates[i].size()) break;
      idx[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

int total_dim(const Graded& g) {
  int s = 0;
  for (const IsoClassId& c : g) {
    for (int d : c.dim) s += d;
  }
  return s;
}

std::string periodic_label(const PeriodicBasisElt& b) {
  std::string s;
  for (std::size_t i = 0; i < b.classes.size(); ++i) {
    if (b.classes[i].is_zero()) continue;
    if (!s.empty()) s += " * ";
    s += b.classes[i].label() + "@" + std::to_string(i);
  }
  for (std::size_t i = 0; i < b.kappa.size(); ++i) {
    if (b.kappa[i].is_zero()) continue;
    if (!s.empty()) s += " * ";
    s += "K" + to_string(b.kappa[i]) + "@" + std::to_string(i);
  }
  return s.empty() ? "1" : s;
}

const std::vector<CyclicTerm>& CyclicSums::terms(const Graded& a, const Graded& b) {
  auto& row = memo_[a];
  auto it = row.find(b);
  if (it != row.end()) return it->second;
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("class tuples of different periods");
  const int m = static_cast<int>(a.size());
  RepCategory& cat = dn_.category();

  // I_i embeds into B_i and is a quotient of A_{i+1}.
  std::vector<std::vector<IsoClassId>> candidates;
  for (int i = 0; i < m; ++i) candidates.push_back(dn_.classes_within(dim_min(b[i].dim, a[wrap(i + 1, m)].dim)));

  std::vector<CyclicTerm> out;
  for_each_tuple(candidates, [&](const Graded& images) {
    std::vector<const std::vector<std::pair<IsoClassId, Rational>>*> rows;
    Rational base = 1;
    for (int i = 0; i < m; ++i) {
      const auto& row = dn_.derived_H_row(images[i], a[i], b[i], images[wrap(i - 1, m)]);
      if (row.empty()) return;
      rows.push_back(&row);
      base /= cat.aut_order(images[i]);
    }
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    while (true) {
      CyclicTerm t{images, Graded(static_cast<std::size_t>(m)), base};
      for (int i = 0; i < m; ++i) {
        t.middle[i] = (*rows[i])[idx[i]].first;
        t.weight *= (*rows[i])[idx[i]].second;
      }
      out.push_back(std::move(t));
      int i = m;
      while (i > 0) {
        --i;
        if (++idx[i] < rows[i]->size()) break;
        idx[i] = 0;
        if (i == 0) return;
      }
    }
  });
  return row.emplace(b, std::move(out)).first->second;
}

int cyclic_pairing(const RepCategory& cat, const std::vector<KClass>& x, const std::vector<KClass>& y) {
  const int m = static_cast<int>(x.size());
  if (m == 1) return 0;
  int e = -cat.symmetric_form(x[m - 1], y[0]);
  for (int i = 1; i < m; ++i) e += cat.symmetric_form(x[i], y[i - 1]);
  return e;
}

PeriodicHallAlgebra::PeriodicHallAlgebra(DerivedNumbers& dn, int m)
    : dn_(dn), cat_(dn.category()), sums_(dn), m_(m) {
  if (m < 1) throw std::invalid_argument("period must be positive");
}

PeriodicBasisElt PeriodicHallAlgebra::unit_basis() const {
  return {Graded(static_cast<std::size_t>(m_), cat_.zero()), std::vector<KClass>(static_cast<std::size_t>(m_), cat_.zero_k())};
}

PeriodicBasisElt PeriodicHallAlgebra::u(const Graded& classes) const {
  if (static_cast<int>(classes.size()) != m_) throw std::invalid_argument("class tuple length differs from the period");
  PeriodicBasisElt b = unit_basis();
  b.classes = classes;
  return b;
}

PeriodicBasisElt PeriodicHallAlgebra::u(const IsoClassId& m, int i) const {
  PeriodicBasisElt b = unit_basis();
  b.classes[wrap(i, m_)] = m;
  return b;
}

PeriodicBasisElt PeriodicHallAlgebra::k(const std::vector<KClass>& kappa) const {
  if (static_cast<int>(kappa.size()) != m_) throw std::invalid_argument("K tuple length differs from the period");
  PeriodicBasisElt b = unit_basis();
  b.kappa = kappa;
  return b;
}

PeriodicBasisElt PeriodicHallAlgebra::k(const KClass& alpha, int i) const {
  PeriodicBasisElt b = unit_basis();
  b.kappa[wrap(i, m_)] = alpha;
  return b;
}

const std::vector<PeriodicHallAlgebra::UTerm>& PeriodicHallAlgebra::u_terms(const Graded& a, const Graded& b) {
  auto& row = u_memo_[a];
  auto it = row.find(b);
  if (it != row.end()) return it->second;
  int base = 0;
  for (int i = 0; i < m_; ++i) base += cat_.euler_form(a[i], b[i]);
  std::vector<UTerm> out;
  for (const CyclicTerm& t : sums_.terms(a, b)) {
    std::vector<KClass> ik;
    std::vector<KClass> mk;
    for (int i = 0; i < m_; ++i) {
      ik.push_back(to_k(t.images[i].dim));
      mk.push_back(to_k(t.middle[i].dim));
    }
    int e = base;
    for (int i = 0; i < m_; ++i) e += cat_.euler_form(mk[i] - mk[wrap(i + 1, m_)], ik[i]);
    if (m_ == 1) {
      e += cat_.euler_form(ik[0], ik[0]);
    } else {
      for (int i = 1; i < m_; ++i) e += cat_.euler_form(ik[i - 1], ik[i]);
    }
    e -= cat_.euler_form(ik[0], ik[m_ - 1]);
    out.push_back({t.middle, std::move(ik), v_pow(cat_.q(), e) * Scalar(t.weight)});
  }
  return row.emplace(b, std::move(out)).first->second;
}

PeriodicElt PeriodicHallAlgebra::product(const PeriodicBasisElt& x, const PeriodicBasisElt& y) {
  PeriodicElt out;
  add_product(out, x, y, Scalar(1));
  return out;
}

void PeriodicHallAlgebra::add_product(PeriodicElt& out, const PeriodicBasisElt& x, const PeriodicBasisElt& y,
                                      const Scalar& scale) {
  const auto& alpha = x.kappa;
  const auto& beta = y.kappa;
  std::vector<KClass> sum;
  std::vector<KClass> bk;
  sum.reserve(m_);
  bk.reserve(m_);
  for (int i = 0; i < m_; ++i) {
    sum.push_back(alpha[i] + beta[i]);
    bk.push_back(to_k(y.classes[i].dim));
  }
  int e = cyclic_pairing(cat_, alpha, beta);
  for (int i = 0; i < m_; ++i) e += cat_.symmetric_form(alpha[i], bk[i] - bk[wrap(i + 1, m_)]);
  for (const UTerm& t : u_terms(x.classes, y.classes)) {
    PeriodicBasisElt b{t.middle, {}};
    b.kappa.reserve(m_);
    for (int i = 0; i < m_; ++i) b.kappa.push_back(t.images[i] + sum[i]);
    const int ek = e + cyclic_pairing(cat_, t.images, sum);
    Scalar c = t.weight;
    c *= Scalar::v_power(cat_.q(), ek);
    if (!scale.is_one()) c *= scale;
    out.add_term(b, c);
  }
}

PeriodicElt PeriodicHallAlgebra::product(const PeriodicElt& x, const PeriodicElt& y) {
  PeriodicElt out;
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) add_product(out, bx, by, cx * cy);
  }
  return out;
}

int PeriodicHallAlgebra::k_exchange_exponent(const std::vector<KClass>& alpha, const std::vector<KClass>& beta) const {
  return cyclic_pairing(cat_, alpha, beta) - cyclic_pairing(cat_, beta, alpha);
}

int PeriodicHallAlgebra::delta(const PeriodicBasisElt& b) {
  const IsoClassId& a0 = b.classes[0];
  const IsoClassId& al = b.classes[m_ - 1];
  return cat_.hom_dim(a0, al) + cat_.ext1_dim(a0, a0) + cat_.ext1_dim(al, al);
}

PeriodicElt PeriodicHallAlgebra::ordered_product(const PeriodicBasisElt& b) {
  auto it = ordered_memo_.find(b);
  if (it != ordered_memo_.end()) return it->second;
  PeriodicElt r = unit();
  for (int i = 0; i < m_; ++i) {
    if (!b.classes[i].is_zero()) r = product(r, PeriodicElt::basis(u(b.classes[i], i)));
  }
  r = product(r, PeriodicElt::basis(k(b.kappa)));
  return ordered_memo_.emplace(b, r).first->second;
}

const PeriodicElt& PeriodicHallAlgebra::straighten_basis(const PeriodicBasisElt& b) {
  auto it = straight_memo_.find(b);
  if (it != straight_memo_.end()) return it->second;
  const PeriodicElt p = ordered_product(b);
  if (!(p.coefficient(b) == Scalar(1))) throw std::logic_error("ordered product lacks its leading term: " + periodic_label(b));
  const int d = delta(b);
  PeriodicElt r = PeriodicElt::basis(b);
  for (const auto& [c, coef] : p.terms()) {
    if (c == b) continue;
    if (delta(c) >= d) throw std::logic_error("straightening degree did not decrease at " + periodic_label(b));
    r -= straighten_basis(c).scaled(coef);
  }
  return straight_memo_.emplace(b, std::move(r)).first->second;
}

std::vector<std::pair<int, int>> PeriodicHallAlgebra::straightening_steps(const PeriodicBasisElt& b) {
  std::vector<std::pair<int, int>> steps;
  const int d = delta(b);
  const auto product_terms = ordered_product(b);
  for (const auto& [c, coef] : product_terms.terms()) {
    if (c != b) steps.emplace_back(d, delta(c));
  }
  return steps;
}

PeriodicElt PeriodicHallAlgebra::straighten(const PeriodicElt& x) {
  if (m_ <= 2) return straighten_by_solving(x);
  PeriodicElt r;
  for (const auto& [b, c] : x.terms()) r += straighten_basis(b).scaled(c);
  return r;
}

PeriodicElt PeriodicHallAlgebra::straighten_by_solving(const PeriodicElt& x) {
  // The span of the ordered products reachable from the support of x is
  // closed, so x has exact coordinates inside it.
  std::set<PeriodicBasisElt> closure;
  std::vector<PeriodicBasisElt> queue;
  for (const auto& [b, c] : x.terms()) {
    if (closure.insert(b).second) queue.push_back(b);
  }
  while (!queue.empty()) {
    PeriodicBasisElt b = queue.back();
    queue.pop_back();
    const auto product_terms = ordered_product(b);
    for (const auto& [c, coef] : product_terms.terms()) {
      if (closure.insert(c).second) queue.push_back(c);
    }
  }
  std::vector<PeriodicBasisElt> keys(closure.begin(), closure.end());
  std::map<PeriodicBasisElt, std::size_t> row_of;
  for (std::size_t i = 0; i < keys.size(); ++i) row_of[keys[i]] = i;
  std::vector<std::vector<Scalar>> a(keys.size(), std::vector<Scalar>(keys.size()));
  for (std::size_t j = 0; j < keys.size(); ++j) {
    const auto product_terms = ordered_product(keys[j]);
    for (const auto& [c, coef] : product_terms.terms()) a[row_of[c]][j] = coef;
  }
  std::vector<Scalar> rhs(keys.size());
  for (const auto& [b, c] : x.terms()) rhs[row_of[b]] = c;
  auto sol = scalar_solve(std::move(a), std::move(rhs));
  if (!sol) throw std::logic_error("element outside the span of ordered products");
  PeriodicElt r;
  for (std::size_t j = 0; j < keys.size(); ++j) r.add_term(keys[j], (*sol)[j]);
  return r;
}

PeriodicElt PeriodicHallAlgebra::expand(const PeriodicElt& coords) {
  PeriodicElt r;
  for (const auto& [b, c] : coords.terms()) r += ordered_product(b).scaled(c);
  return r;
}

PeriodicElt PeriodicHallAlgebra::lambda(int i, const ExtHallElt& x) const {
  PeriodicElt r;
  for (const auto& [b, c] : x.terms()) {
    PeriodicBasisElt p = unit_basis();
    p.classes[wrap(i, m_)] = b.cls;
    p.kappa[wrap(i, m_)] = b.kappa;
    r.add_term(p, c);
  }
  return r;
}

PeriodicElt PeriodicHallAlgebra::mu(const std::vector<ExtHallElt>& xs) {
  if (static_cast<int>(xs.size()) != m_) throw std::invalid_argument("tensor length differs from the period");
  PeriodicElt r = unit();
  for (int i = 0; i < m_; ++i) r = product(r, lambda(i, xs[i]));
  return r;
}

OddPeriodicHallAlgebra::OddPeriodicHallAlgebra(DerivedNumbers& dn, int m, bool allow_even)
    : dn_(dn), cat_(dn.category()), sums_(dn), m_(m) {
  if (m < 1) throw std::invalid_argument("period must be positive");
  if (m % 2 == 0 && !allow_even) throw std::invalid_argument("odd period required");
}

OddPeriodicElt OddPeriodicHallAlgebra::unit() const {
  return OddPeriodicElt::basis(Graded(static_cast<std::size_t>(m_), cat_.zero()));
}

int OddPeriodicHallAlgebra::twist_exponent(const Graded& a, const Graded& b) const {
  int e = 0;
  for (int i = 0; i < m_; ++i) {
    KClass alt = cat_.zero_k();
    for (int k = 0; k < m_; ++k) {
      KClass ak = to_k(a[wrap(i + k, m_)].dim);
      alt = (k % 2 == 0) ? alt + ak : alt - ak;
    }
    e += cat_.euler_form(alt, to_k(b[i].dim));
  }
  return e;
}

OddPeriodicElt OddPeriodicHallAlgebra::product(const Graded& a, const Graded& b) {
  auto& row = memo_[a];
  auto it = row.find(b);
  if (it != row.end()) return it->second;
  const Scalar twist = v_pow(cat_.q(), twist_exponent(a, b));
  OddPeriodicElt r;
  for (const CyclicTerm& t : sums_.terms(a, b)) r.add_term(t.middle, twist * Scalar(t.weight));
  return row.emplace(b, r).first->second;
}

OddPeriodicElt OddPeriodicHallAlgebra::product(const OddPeriodicElt& x, const OddPeriodicElt& y) {
  OddPeriodicElt out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) out += product(a, b).scaled(ca * cb);
  }
  return out;
}

std::map<Graded, std::pair<Rational, Rational>> associativity_sides(CyclicSums& sums, const Graded& a,
                                                                    const Graded& b, const Graded& c) {
  RepCategory& cat = sums.numbers().category();
  const int m = static_cast<int>(a.size());
  std::map<Graded, std::pair<Rational, Rational>> out;
  for (const CyclicTerm& ab : sums.terms(a, b)) {
    int e = 0;
    for (int i = 0; i < m; ++i) e -= cat.euler_form(ab.images[wrap(i - 1, m)], c[i]);
    const Rational w = q_pow(cat.q(), e) * ab.weight;
    for (const CyclicTerm& xc : sums.terms(ab.middle, c)) out[xc.middle].first += w * xc.weight;
  }
  for (const CyclicTerm& bc : sums.terms(b, c)) {
    int e = 0;
    for (int i = 0; i < m; ++i) e -= cat.euler_form(a[i], bc.images[i]);
    const Rational w = q_pow(cat.q(), e) * bc.weight;
    for (const CyclicTerm& ay : sums.terms(a, bc.middle)) out[ay.middle].second += w * ay.weight;
  }
  return out;
}

std::pair<Scalar, Scalar> corollary44_sides(CyclicSums& sums, const Graded& a, const Graded& b, const Graded& c,
                                            const Graded& m) {
  const auto all = associativity_sides(sums, a, b, c);
  auto it = all.find(m);
  if (it == all.end()) return {Scalar(0), Scalar(0)};
  return {Scalar(it->second.first), Scalar(it->second.second)};
}

namespace {

/// Reduces rows in place to row echelon form; returns the pivot columns.
std::vector<std::size_t> eliminate(std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Scalar inv = rows[r][c].inverse();
    for (Scalar& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t scalar_rank(std::vector<std::vector<Scalar>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  return eliminate(rows, cols).size();
}

std::optional<std::vector<Scalar>> scalar_solve(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  const auto pivots = eliminate(a, n + 1);
  std::vector<Scalar> x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == n) return std::nullopt;
    x[pivots[r]] = a[r][n];
  }
  return x;
}

}  // namespace phall
