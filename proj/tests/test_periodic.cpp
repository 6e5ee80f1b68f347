#include "phall/periodic.hpp"

#include <gtest/gtest.h>

using namespace phall;

namespace {

const IsoClassId kF{DimVector({1}), 0};
const IsoClassId kF2{DimVector({2}), 0};
const KClass kOne(std::vector<int>{1});

struct Fixture {
  RepCategory cat;
  DerivedNumbers dn;
  PeriodicHallAlgebra alg;
  Fixture(const Quiver& quiver, int q, int m) : cat(quiver, q), dn(cat), alg(dn, m) {}
};

Scalar half_v(int q) { return v_pow(q, 1) * Scalar(Rational(1, 2)); }

}  // namespace

TEST(PeriodicExt, UnitIsTwoSided) {
  Fixture s(Quiver::a2(), 2, 3);
  for (const IsoClassId& c : s.cat.classes_within(DimVector({1, 1}))) {
    for (int i = 0; i < 3; ++i) {
      const PeriodicElt x = PeriodicElt::basis(s.alg.u(c, i));
      EXPECT_EQ(s.alg.product(s.alg.unit(), x), x);
      EXPECT_EQ(s.alg.product(x, s.alg.unit()), x);
    }
  }
}

TEST(PeriodicExt, SpecProducts) {
  Fixture one(Quiver::a1(), 2, 1);
  PeriodicElt expected = PeriodicElt::basis(one.alg.u(kF2, 0), half_v(2)) +
                         PeriodicElt::basis(one.alg.k(kOne, 0), half_v(2));
  EXPECT_EQ(one.alg.product(one.alg.u(kF, 0), one.alg.u(kF, 0)), expected);

  Fixture three(Quiver::a1(), 2, 3);
  const IsoClassId z = three.cat.zero();
  expected = PeriodicElt::basis(three.alg.u(Graded{kF, z, kF})) + PeriodicElt::basis(three.alg.k(kOne, 2));
  EXPECT_EQ(three.alg.product(three.alg.u(kF, 0), three.alg.u(kF, 2)), expected);
}

TEST(PeriodicExt, KExchange) {
  Fixture s(Quiver::a2(), 3, 3);
  const KClass a(std::vector<int>{1, 0}), b(std::vector<int>{0, 1});
  // K_{α,1} K_{β,0} = v^{(α,β)} K_{β,0} K_{α,1}
  const PeriodicElt lhs = s.alg.product(s.alg.k(a, 1), s.alg.k(b, 0));
  const PeriodicElt rhs = s.alg.product(s.alg.k(b, 0), s.alg.k(a, 1)).scaled(v_pow(3, s.cat.symmetric_form(a, b)));
  EXPECT_EQ(lhs, rhs);
  EXPECT_FALSE(lhs == s.alg.product(s.alg.k(b, 0), s.alg.k(a, 1)));
}

TEST(PeriodicExt, Delta) {
  Fixture a1(Quiver::a1(), 2, 3);
  const IsoClassId z = a1.cat.zero();
  EXPECT_EQ(a1.alg.delta(a1.alg.u(Graded{kF, z, kF})), 1);
  EXPECT_EQ(a1.alg.delta(a1.alg.u(Graded{kF, z, z})), 0);
  Fixture a2(Quiver::a2(), 2, 3);
  const IsoClassId s1 = a2.cat.enumerate_classes(DimVector({1, 0}))[0];
  const IsoClassId s2 = a2.cat.enumerate_classes(DimVector({0, 1}))[0];
  EXPECT_EQ(a2.alg.delta(a2.alg.u(Graded{s1, a2.cat.zero(), s2})), 0);
}

TEST(PeriodicExt, Straightening) {
  Fixture s(Quiver::a1(), 2, 3);
  const IsoClassId z = s.cat.zero();
  const PeriodicBasisElt b = s.alg.u(Graded{kF, z, kF});
  // u_{F[0]⊕F[2]} = u_{F[0]} u_{F[2]} − K_{(1),2}
  const PeriodicElt coords = s.alg.straighten(PeriodicElt::basis(b));
  const PeriodicElt expected = PeriodicElt::basis(b) - PeriodicElt::basis(s.alg.k(kOne, 2));
  EXPECT_EQ(coords, expected);
  EXPECT_EQ(s.alg.expand(coords), PeriodicElt::basis(b));
  const PeriodicBasisElt flat = s.alg.u(Graded{kF, z, z});
  EXPECT_EQ(s.alg.ordered_product(flat), PeriodicElt::basis(flat));
  for (const auto& [parent, child] : s.alg.straightening_steps(b)) EXPECT_LT(child, parent);
}

TEST(PeriodicExt, StraighteningAtSmallPeriods) {
  for (int m : {1, 2}) {
    Fixture s(Quiver::a1(), 3, m);
    Graded g(static_cast<std::size_t>(m), kF);
    const PeriodicElt x = PeriodicElt::basis(s.alg.u(g));
    EXPECT_EQ(s.alg.expand(s.alg.straighten(x)), x) << "m=" << m;
  }
}

TEST(PeriodicExt, LambdaAndMu) {
  Fixture s(Quiver::a2(), 2, 3);
  const IsoClassId s1 = s.cat.enumerate_classes(DimVector({1, 0}))[0];
  const IsoClassId s2 = s.cat.enumerate_classes(DimVector({0, 1}))[0];
  const ExtHallElt one = ext_unit(s.cat);
  EXPECT_EQ(s.alg.lambda(1, one), s.alg.unit());
  const ExtHallElt x = ExtHallElt::basis({s1, s.cat.zero_k()}), y = ExtHallElt::basis({s2, s.cat.zero_k()});
  EXPECT_EQ(s.alg.lambda(0, product_extended(s.cat, x, y)),
            s.alg.product(s.alg.lambda(0, x), s.alg.lambda(0, y)));
  const KClass a(std::vector<int>{1, -1});
  PeriodicBasisElt want = s.alg.u(s1, 2);
  want.kappa[2] = a;
  EXPECT_EQ(s.alg.lambda(2, ExtHallElt::basis({s1, a})), PeriodicElt::basis(want));
  EXPECT_EQ(s.alg.mu({one, one, one}), s.alg.unit());

  Fixture t(Quiver::a1(), 2, 3);
  const ExtHallElt uf = ExtHallElt::basis({kF, t.cat.zero_k()});
  const ExtHallElt u1 = ext_unit(t.cat);
  EXPECT_EQ(t.alg.mu({uf, u1, uf}), t.alg.product(t.alg.u(kF, 0), t.alg.u(kF, 2)));
}

TEST(PeriodicOdd, SpecProducts) {
  RepCategory cat(Quiver::a1(), 2);
  DerivedNumbers dn(cat);
  OddPeriodicHallAlgebra odd(dn, 3);
  const IsoClassId z = cat.zero();
  const Graded f0{kF, z, z}, f1{z, kF, z};
  EXPECT_EQ(odd.product(f0, f0), OddPeriodicElt::basis(Graded{kF2, z, z}, half_v(2)));
  EXPECT_EQ(odd.product(f0, f1), OddPeriodicElt::basis(Graded{kF, kF, z}, v_pow(2, 1)));
  EXPECT_EQ(odd.product(odd.unit(), OddPeriodicElt::basis(f1)), OddPeriodicElt::basis(f1));
  EXPECT_THROW(OddPeriodicHallAlgebra(dn, 2), std::invalid_argument);
  EXPECT_NO_THROW(OddPeriodicHallAlgebra(dn, 2, true));
}

TEST(PeriodicOdd, Corollary44Trivial) {
  RepCategory cat(Quiver::a1(), 2);
  DerivedNumbers dn(cat);
  CyclicSums sums(dn);
  const IsoClassId z = cat.zero();
  const Graded zero{z, z, z}, f0{kF, z, z};
  auto s = corollary44_sides(sums, zero, zero, zero, zero);
  EXPECT_EQ(s.first, Scalar(1));
  EXPECT_EQ(s.second, Scalar(1));
  auto mismatch = corollary44_sides(sums, f0, f0, f0, zero);
  EXPECT_EQ(mismatch.first, Scalar(0));
  EXPECT_EQ(mismatch.second, Scalar(0));
  for (const auto& [m, sides] : associativity_sides(sums, f0, f0, f0)) EXPECT_EQ(sides.first, sides.second);
}

TEST(ScalarAlgebra, RankAndSolve) {
  const Scalar v = v_pow(2, 1);
  EXPECT_EQ(scalar_rank({{1, v}, {v, 2}}), 1u);
  EXPECT_EQ(scalar_rank({{1, v}, {v, 1}}), 2u);
  auto x = scalar_solve({{1, v}, {0, 1}}, {v, 1});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[1], Scalar(1));
  EXPECT_EQ((*x)[0], Scalar(0));
  EXPECT_FALSE(scalar_solve({{1}, {1}}, {0, 1}).has_value());
}
