#include "phall/derived.hpp"

namespace phall {

StalkSum StalkSum::stalk(const IsoClassId& m, int shift) {
  StalkSum s;
  s.set(shift, m);
  return s;
}

StalkSum& StalkSum::set(int shift, const IsoClassId& m) {
  if (m.is_zero()) {
    s_.erase(shift);
    return *this;
  }
  s_[shift] = m;
  return *this;
}

StalkSum StalkSum::shifted(int k) const {
  StalkSum r;
  for (const auto& [i, m] : s_) r.s_[i + k] = m;
  return r;
}

IsoClassId StalkSum::at(int shift, int n) const {
  auto it = s_.find(shift);
  return it == s_.end() ? IsoClassId::zero(n) : it->second;
}

std::string StalkSum::label() const {
  if (s_.empty()) return "0";
  std::string out;
  for (auto it = s_.rbegin(); it != s_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.label() + "[" + std::to_string(it->first) + "]";
  }
  return out;
}

IsoClassId class_direct_sum(RepCategory& cat, const IsoClassId& a, const IsoClassId& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return cat.canonical_id(direct_sum(cat.representative(a), cat.representative(b), cat.quiver()));
}

StalkSum stalk_direct_sum(RepCategory& cat, const StalkSum& x, const StalkSum& y) {
  StalkSum r = x;
  for (const auto& [i, m] : y.summands()) r.set(i, class_direct_sum(cat, x.at(i, cat.n()), m));
  return r;
}

long long DerivedNumbers::brace_exponent(const StalkSum& x, const StalkSum& y) {
  long long e = 0;
  for (const auto& [a, ma] : x.summands()) {
    for (const auto& [b, mb] : y.summands()) {
      const int d = b - a;
      if (d > 0) e += (d % 2 == 0 ? 1 : -1) * cat_.hom_dim(ma, mb);
      if (d - 1 > 0) e += ((d - 1) % 2 == 0 ? 1 : -1) * cat_.ext1_dim(ma, mb);
    }
  }
  return e;
}

Rational DerivedNumbers::brace(const StalkSum& x, const StalkSum& y) { return q_pow(cat_.q(), brace_exponent(x, y)); }

const std::vector<IsoClassId>& DerivedNumbers::classes_within(const DimVector& bound) {
  auto it = within_.find(bound);
  if (it == within_.end()) it = within_.emplace(bound, cat_.classes_within(bound)).first;
  return it->second;
}

const std::map<IsoClassId, Rational>& DerivedNumbers::weighted_sum(const IsoClassId& m1, const IsoClassId& j,
                                                                   const IsoClassId& i, const IsoClassId& m2) {
  Key4 key{m1, j, i, m2};
  auto it = sums_.find(key);
  if (it != sums_.end()) return it->second;
  std::map<IsoClassId, Rational> out;
  if (fits_within(j.dim, m1.dim) && fits_within(i.dim, m2.dim)) {
    DimVector dn = dim_difference(m1.dim, j.dim);
    DimVector dl = dim_difference(m2.dim, i.dim);
    for (const IsoClassId& n : cat_.enumerate_classes(dn)) {
      const std::uint64_t g1 = cat_.hall_number(m1, j, n);
      if (g1 == 0) continue;
      for (const IsoClassId& l : cat_.enumerate_classes(dl)) {
        const std::uint64_t g2 = cat_.hall_number(m2, l, i);
        if (g2 == 0) continue;
        Rational w = Rational(cat_.aut_order(n)) * cat_.aut_order(l) * g1 * g2;
        // The middle terms M with g^M_{N,L} ≠ 0 are exactly those carrying
        // extension classes of N by L.
        for (const auto& [m, count] : cat_.ext_fibers(n, l)) {
          (void)count;
          out[m] += w * cat_.hall_number(m, n, l);
        }
      }
    }
  }
  return sums_.emplace(key, std::move(out)).first->second;
}

Rational DerivedNumbers::four_term_F(const IsoClassId& m1, const IsoClassId& j, const IsoClassId& i,
                                     const IsoClassId& m2, const IsoClassId& m) {
  const auto& s = weighted_sum(m1, j, i, m2);
  auto it = s.find(m);
  if (it == s.end()) return 0;
  return it->second / (Rational(cat_.aut_order(m1)) * cat_.aut_order(m2));
}

const std::vector<std::pair<IsoClassId, Rational>>& DerivedNumbers::derived_H_row(const IsoClassId& i,
                                                                                 const IsoClassId& a,
                                                                                 const IsoClassId& b,
                                                                                 const IsoClassId& j) {
  Key4 key{i, a, b, j};
  auto it = rows_.find(key);
  if (it != rows_.end()) return it->second;
  std::vector<std::pair<IsoClassId, Rational>> row;
  const int e = cat_.euler_form(j, i) - cat_.euler_form(a, i) - cat_.euler_form(j, b);
  const Rational factor = q_pow(cat_.q(), e) * cat_.aut_order(i) * cat_.aut_order(j);
  // F(A, J, I, B) carries 1/(a_A a_B), which cancels against the prefactor.
  for (const auto& [m, s] : weighted_sum(a, j, i, b)) {
    if (s == 0) continue;
    row.emplace_back(m, factor * s / cat_.aut_order(m));
  }
  return rows_.emplace(key, std::move(row)).first->second;
}

Rational DerivedNumbers::derived_H(const IsoClassId& i, const IsoClassId& a, const IsoClassId& b,
                                   const IsoClassId& j, const IsoClassId& m) {
  for (const auto& [cls, value] : derived_H_row(i, a, b, j)) {
    if (cls == m) return value;
  }
  return 0;
}

Rational DerivedNumbers::derived_H(const StalkSum& x, const StalkSum& y, const IsoClassId& m) {
  for (const auto& [s, c] : x.summands()) {
    if (s != 0 && s != 1) throw UnsupportedShape("first argument must be I[1] + A, got " + x.label());
  }
  for (const auto& [s, c] : y.summands()) {
    if (s != 0 && s != -1) throw UnsupportedShape("second argument must be B + J[-1], got " + y.label());
  }
  const int n = cat_.n();
  return derived_H(x.at(1, n), x.at(0, n), y.at(0, n), y.at(-1, n), m);
}

Rational DerivedNumbers::lemma25_F(const IsoClassId& m, const IsoClassId& n, const IsoClassId& x,
                                   const IsoClassId& y) {
  if (!fits_within(x.dim, m.dim) || !fits_within(y.dim, n.dim)) return 0;
  DimVector dl = dim_difference(m.dim, x.dim);
  if (dim_difference(n.dim, y.dim) != dl) return 0;
  Rational sum = 0;
  for (const IsoClassId& l : cat_.enumerate_classes(dl)) {
    const std::uint64_t g1 = cat_.hall_number(m, l, x);
    if (g1 == 0) continue;
    sum += Rational(cat_.aut_order(l)) * g1 * cat_.hall_number(n, y, l);
  }
  if (sum == 0) return 0;
  return sum * q_pow(cat_.q(), -cat_.euler_form(y, x)) * cat_.aut_order(x) * cat_.aut_order(y) /
         (Rational(cat_.aut_order(m)) * cat_.aut_order(n));
}

}  // namespace phall
