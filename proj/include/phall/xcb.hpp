#pragma once

#include "phall/oracle.hpp"
#include "phall/periodic.hpp"

#include <string>
#include <variant>
#include <vector>

namespace phall {

/// Exponent E with [X, Y] = q^E in the m-periodic derived category.
long long bracket_exponent(RepCategory& cat, const Graded& x, const Graded& y);
/// [X, Y] = ∏_{i=1}^m |Hom(X[i], Y)|^{(-1)^i}; m must be odd.
Scalar bracket(RepCategory& cat, const Graded& x, const Graded& y);

/// Structure constants of the odd-periodic derived Hall algebra of D_m.
class XuChen {
 public:
  XuChen(oracle::Oracle& oracle, OddPeriodicHallAlgebra& odd);

  int m() const noexcept { return m_; }

  /// 𝓗^L_{X,Y} by the closed cyclic sum.
  Scalar curly_H(const Graded& x, const Graded& y, const Graded& l);
  /// 𝓗^L_{X,Y} = |Hom(X, Y[1])_{L[1]}| / (|Hom(X, Y)| √[X,Y]) from oracle counts.
  Scalar curly_H_direct(const Graded& x, const Graded& y, const Graded& l);
  /// 𝓕^L_{X,Y} = 𝓗^L_{X,Y} |Aut L| √[L,L] / (|Aut X| |Aut Y| √([X,X][Y,Y])).
  Scalar curly_F(const Graded& x, const Graded& y, const Graded& l);
  /// 𝓕^L_{X,Y} = |Hom(Y, L)_X| / |Aut Y| · √([Y,L]/[Y,Y]).
  Scalar curly_F_toen(const Graded& x, const Graded& y, const Graded& l);
  /// 𝓕^L_{X,Y} = |Hom(L, X)_{Y[1]}| / |Aut X| · √([L,X]/[X,X]).
  Scalar curly_F_toen_dual(const Graded& x, const Graded& y, const Graded& l);

 private:
  Scalar sqrt_bracket(const Graded& x, const Graded& y);

  oracle::Oracle& oracle_;
  OddPeriodicHallAlgebra& odd_;
  RepCategory& cat_;
  int m_;
};

/// γ^{MN}_{AB} = (a_M a_N / (a_A a_B)) Σ_I a_I g^A_{I,M} g^B_{N,I}.
Rational gamma(RepCategory& cat, const IsoClassId& a, const IsoClassId& b, const IsoClassId& m, const IsoClassId& n);

/// Generators e_{A,i} and K_{α,i} of the periodic-complex Hall algebra.
struct EGen {
  IsoClassId cls;
  int degree;
};
struct KGen {
  KClass alpha;
  int degree;
};
using BridgelandGen = std::variant<EGen, KGen>;
using BridgelandWord = std::vector<BridgelandGen>;

/// φ(w), with e_{M,i} ↦ u_{M[i]}/a_M and K_{α,i} ↦ K_{α,i}, evaluated left to right.
PeriodicElt phi_image(PeriodicHallAlgebra& alg, const BridgelandWord& w);
/// φ applied to a formal combination of words.
PeriodicElt phi_image(PeriodicHallAlgebra& alg, const std::vector<std::pair<Scalar, BridgelandWord>>& combo);

struct RelationInstance {
  std::string relation;
  std::string instance;
  PeriodicElt lhs;
  PeriodicElt rhs;
  bool equal() const { return lhs == rhs; }
};

/// Every instance of the defining relations for generators e_{A,i} with
/// dim A ≤ bound and K_{α,i} with α drawn from `kappas`, evaluated under φ.
std::vector<RelationInstance> check_bridgeland_relations(PeriodicHallAlgebra& alg, const DimVector& bound,
                                                         const std::vector<KClass>& kappas);

}  // namespace phall
