#pragma once

#include "phall/repcat.hpp"
#include "phall/scalars.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace phall {

class UnsupportedShape : public std::invalid_argument {
 public:
  explicit UnsupportedShape(const std::string& what) : std::invalid_argument("unsupported derived shape: " + what) {}
};

/// Graded object ⊕_{i∈Z_m} M_i[i] of the m-periodic derived category,
/// indexed by the shift i.
using Graded = std::vector<IsoClassId>;

/// ⊕_i M_i[i] in D^b: shift i ↦ class M_i. Zero classes are never stored.
class StalkSum {
 public:
  StalkSum() = default;
  static StalkSum stalk(const IsoClassId& m, int shift = 0);

  /// Adds M[shift]; the summand must not collide with an existing one
  /// (use with_summand for a genuine direct sum).
  StalkSum& set(int shift, const IsoClassId& m);
  const std::map<int, IsoClassId>& summands() const noexcept { return s_; }
  bool is_zero() const noexcept { return s_.empty(); }
  StalkSum shifted(int k) const;
  /// The summand in a given shift, or the zero class.
  IsoClassId at(int shift, int n) const;
  std::string label() const;

  auto operator<=>(const StalkSum&) const = default;

 private:
  std::map<int, IsoClassId> s_;
};

/// X ⊕ Y, computing direct-sum classes where shifts coincide.
StalkSum stalk_direct_sum(RepCategory& cat, const StalkSum& x, const StalkSum& y);
IsoClassId class_direct_sum(RepCategory& cat, const IsoClassId& a, const IsoClassId& b);

/// Derived Hall numbers for stalk objects, with memoization.
class DerivedNumbers {
 public:
  explicit DerivedNumbers(RepCategory& cat) : cat_(cat) {}
  RepCategory& category() noexcept { return cat_; }

  /// Exponent e with {X,Y} = q^e.
  long long brace_exponent(const StalkSum& x, const StalkSum& y);
  Rational brace(const StalkSum& x, const StalkSum& y);

  /// F^M_{M1, J[-1], I[1], M2} via the closed sum over abelian Hall numbers.
  Rational four_term_F(const IsoClassId& m1, const IsoClassId& j, const IsoClassId& i, const IsoClassId& m2,
                       const IsoClassId& m);
  /// H^M_{I[1]⊕A, B⊕J[-1]}.
  Rational derived_H(const IsoClassId& i, const IsoClassId& a, const IsoClassId& b, const IsoClassId& j,
                     const IsoClassId& m);
  /// Same, for stalk sums of the shapes I[1]⊕A and B⊕J[-1].
  Rational derived_H(const StalkSum& x, const StalkSum& y, const IsoClassId& m);
  /// Every M with H^M_{I[1]⊕A, B⊕J[-1]} ≠ 0, with its value.
  const std::vector<std::pair<IsoClassId, Rational>>& derived_H_row(const IsoClassId& i, const IsoClassId& a,
                                                                      const IsoClassId& b, const IsoClassId& j);
  /// Right side of the formula for F^{X[1]⊕Y}_{M[1],N}.
  Rational lemma25_F(const IsoClassId& m, const IsoClassId& n, const IsoClassId& x, const IsoClassId& y);

  /// Classes with dimension vector ≤ bound (cached).
  const std::vector<IsoClassId>& classes_within(const DimVector& bound);

 private:
  using Key4 = std::tuple<IsoClassId, IsoClassId, IsoClassId, IsoClassId>;
  /// Σ_{N,L} a_N a_L g^{M1}_{J,N} g^{M2}_{L,I} g^M_{N,L}, for all M at once.
  const std::map<IsoClassId, Rational>& weighted_sum(const IsoClassId& m1, const IsoClassId& j, const IsoClassId& i,
                                                    const IsoClassId& m2);

  RepCategory& cat_;
  std::map<Key4, std::map<IsoClassId, Rational>> sums_;
  std::map<Key4, std::vector<std::pair<IsoClassId, Rational>>> rows_;
  std::map<DimVector, std::vector<IsoClassId>> within_;
};

}  // namespace phall
