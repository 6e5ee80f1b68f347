#pragma once

#include "phall/derived.hpp"
#include "phall/hall.hpp"
#include "phall/linear.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace phall {

/// u_{⊕M_i[i]} ∏ K_{α_i,i}.
struct PeriodicBasisElt {
  Graded classes;
  std::vector<KClass> kappa;
  auto operator<=>(const PeriodicBasisElt&) const = default;
};
using PeriodicElt = LinearCombination<PeriodicBasisElt>;
using OddPeriodicElt = LinearCombination<Graded>;

std::string periodic_label(const PeriodicBasisElt& b);

/// One summand of the cyclic sum shared by the periodic products: the
/// images I_i, the middle terms M_i and ∏_i H^{M_i}_{I_i[1]⊕A_i, B_i⊕I_{i-1}[-1]} / a_{I_i}.
struct CyclicTerm {
  Graded images;
  Graded middle;
  Rational weight;
};

/// Memoized enumeration of the cyclic exact sequences
/// 0 → I_i → B_i → M_i → A_i → I_{i-1} → 0 for i ∈ Z_m.
class CyclicSums {
 public:
  explicit CyclicSums(DerivedNumbers& dn) : dn_(dn) {}
  DerivedNumbers& numbers() noexcept { return dn_; }
  const std::vector<CyclicTerm>& terms(const Graded& a, const Graded& b);

 private:
  DerivedNumbers& dn_;
  std::map<Graded, std::map<Graded, std::vector<CyclicTerm>>> memo_;
};

/// c(x, y) = -(x_{m-1}, y_0) + Σ_{i=1}^{m-1} (x_i, y_{i-1}), the index 1 read
/// modulo m when m = 1.
int cyclic_pairing(const RepCategory& cat, const std::vector<KClass>& x, const std::vector<KClass>& y);

/// The m-periodic extended derived Hall algebra.
class PeriodicHallAlgebra {
 public:
  PeriodicHallAlgebra(DerivedNumbers& dn, int m);

  int m() const noexcept { return m_; }
  RepCategory& category() noexcept { return cat_; }
  CyclicSums& sums() noexcept { return sums_; }

  PeriodicBasisElt unit_basis() const;
  PeriodicElt unit() const { return PeriodicElt::basis(unit_basis()); }
  /// u_{⊕M_i[i]} with trivial K-part.
  PeriodicBasisElt u(const Graded& classes) const;
  /// u_{M[i]}.
  PeriodicBasisElt u(const IsoClassId& m, int i) const;
  /// ∏ K_{α_i,i}.
  PeriodicBasisElt k(const std::vector<KClass>& kappa) const;
  /// K_{α,i}.
  PeriodicBasisElt k(const KClass& alpha, int i) const;

  PeriodicElt product(const PeriodicBasisElt& x, const PeriodicBasisElt& y);
  PeriodicElt product(const PeriodicElt& x, const PeriodicElt& y);
  /// out += scale · (x·y), without building the product separately.
  void add_product(PeriodicElt& out, const PeriodicBasisElt& x, const PeriodicBasisElt& y, const Scalar& scale);

  /// Exponent e with K_α K_β = v^e K_β K_α.
  int k_exchange_exponent(const std::vector<KClass>& alpha, const std::vector<KClass>& beta) const;

  /// dim Hom(A_0, A_{m-1}) + dim Ext¹(A_0, A_0) + dim Ext¹(A_{m-1}, A_{m-1}).
  int delta(const PeriodicBasisElt& b);

  /// ∏_i u_{A_i[i]} ∏_i K_{α_i,i}, evaluated left to right.
  PeriodicElt ordered_product(const PeriodicBasisElt& b);
  /// Coordinates over the ordered-product basis: a key b stands for
  /// ordered_product(b).
  PeriodicElt straighten(const PeriodicElt& x);
  /// Σ c_b ordered_product(b): the inverse of straighten.
  PeriodicElt expand(const PeriodicElt& coords);
  /// Every correction term of one recursion step, with δ of parent and child.
  std::vector<std::pair<int, int>> straightening_steps(const PeriodicBasisElt& b);

  /// λ_i : u_M K_α ↦ u_{M[i]} K_{α,i}.
  PeriodicElt lambda(int i, const ExtHallElt& x) const;
  /// μ(x_0 ⊗ … ⊗ x_{m-1}) = ∏_i λ_i(x_i).
  PeriodicElt mu(const std::vector<ExtHallElt>& xs);

 private:
  /// u-part summands of u_A u_B with their K-classes Î and weights.
  struct UTerm {
    Graded middle;
    std::vector<KClass> images;
    Scalar weight;
  };
  const std::vector<UTerm>& u_terms(const Graded& a, const Graded& b);
  const PeriodicElt& straighten_basis(const PeriodicBasisElt& b);
  PeriodicElt straighten_by_solving(const PeriodicElt& x);

  DerivedNumbers& dn_;
  RepCategory& cat_;
  CyclicSums sums_;
  int m_;
  std::map<Graded, std::map<Graded, std::vector<UTerm>>> u_memo_;
  std::map<PeriodicBasisElt, PeriodicElt> ordered_memo_;
  std::map<PeriodicBasisElt, PeriodicElt> straight_memo_;
};

/// The odd m-periodic derived Hall algebra.
class OddPeriodicHallAlgebra {
 public:
  /// allow_even only exists to exhibit the failure of associativity for even m.
  OddPeriodicHallAlgebra(DerivedNumbers& dn, int m, bool allow_even = false);

  int m() const noexcept { return m_; }
  RepCategory& category() noexcept { return cat_; }
  CyclicSums& sums() noexcept { return sums_; }
  OddPeriodicElt unit() const;

  /// Σ_i ⟨Σ_k (-1)^k Â_{i+k}, B̂_i⟩.
  int twist_exponent(const Graded& a, const Graded& b) const;
  OddPeriodicElt product(const Graded& a, const Graded& b);
  OddPeriodicElt product(const OddPeriodicElt& x, const OddPeriodicElt& y);

 private:
  DerivedNumbers& dn_;
  RepCategory& cat_;
  CyclicSums sums_;
  int m_;
  std::map<Graded, std::map<Graded, OddPeriodicElt>> memo_;
};

/// Both sides of the identity relating the two bracketings of a triple
/// product with weights q^{-Σ⟨Î_{i-1},Ĉ_i⟩} and q^{-Σ⟨Â_i,Ĵ_i⟩}, for every
/// target M at once.
std::map<Graded, std::pair<Rational, Rational>> associativity_sides(CyclicSums& sums, const Graded& a,
                                                                    const Graded& b, const Graded& c);
std::pair<Scalar, Scalar> corollary44_sides(CyclicSums& sums, const Graded& a, const Graded& b, const Graded& c,
                                            const Graded& m);

/// Rank of a matrix over Scalars by exact elimination.
std::size_t scalar_rank(std::vector<std::vector<Scalar>> rows);
/// Solves a x = b exactly; nullopt if inconsistent. Free variables are zero.
std::optional<std::vector<Scalar>> scalar_solve(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b);

/// Total dimension of a class tuple.
int total_dim(const Graded& g);

}  // namespace phall
