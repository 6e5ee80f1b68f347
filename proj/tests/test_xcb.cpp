#include "phall/xcb.hpp"

#include <gtest/gtest.h>

using namespace phall;

namespace {

const IsoClassId kF{DimVector({1}), 0};
const IsoClassId kF2{DimVector({2}), 0};

}  // namespace

TEST(Bracket, SpecValues) {
  RepCategory cat(Quiver::a1(), 2);
  const IsoClassId z = cat.zero();
  const Graded f0{kF, z, z}, zero{z, z, z};
  EXPECT_EQ(bracket(cat, f0, f0), Scalar(Rational(1, 2)));
  EXPECT_EQ(bracket(cat, zero, f0), Scalar(1));
  const Graded x{kF, kF2, z}, y{z, kF, kF};
  EXPECT_EQ(bracket(cat, oracle::shift(x, 1), oracle::shift(y, 1)), bracket(cat, x, y));
  EXPECT_THROW(bracket(cat, Graded{kF, z}, Graded{kF, z}), std::invalid_argument);
}

TEST(XuChen, SpecValues) {
  RepCategory cat(Quiver::a1(), 2);
  DerivedNumbers dn(cat);
  oracle::Oracle o(cat);
  OddPeriodicHallAlgebra odd(dn, 3);
  XuChen xc(o, odd);
  const IsoClassId z = cat.zero();
  const Graded f0{kF, z, z}, f1{z, kF, z}, f2_0{kF2, z, z}, zero{z, z, z};
  const Scalar half_v = v_pow(2, 1) * Scalar(Rational(1, 2));
  EXPECT_EQ(xc.curly_H(f0, f0, f2_0), half_v);
  EXPECT_EQ(xc.curly_H_direct(f0, f0, f2_0), half_v);
  EXPECT_EQ(xc.curly_H(f0, f1, Graded{kF, kF, z}), v_pow(2, 1));
  EXPECT_EQ(xc.curly_H_direct(f0, f1, Graded{kF, kF, z}), v_pow(2, 1));
  EXPECT_EQ(xc.curly_H(f0, f0, f0), Scalar(0));
  EXPECT_EQ(xc.curly_F(f0, zero, f0), Scalar(1));
  EXPECT_EQ(xc.curly_F_toen(f0, zero, f0), Scalar(1));
  // |Aut F²| = 6 and √[F²,F²] = v^{-4}: 𝓕 = (v/2)·6·v^{-4}/(v^{-1}v^{-1}) = 3v/2.
  const Scalar f = xc.curly_F(f0, f0, f2_0);
  EXPECT_EQ(f, v_pow(2, 1) * Scalar(Rational(3, 2)));
  EXPECT_EQ(xc.curly_F_toen(f0, f0, f2_0), f);
  EXPECT_EQ(xc.curly_F_toen_dual(f0, f0, f2_0), f);
  OddPeriodicHallAlgebra even(dn, 2, true);
  EXPECT_THROW(XuChen(o, even), std::invalid_argument);
}

TEST(Gamma, SpecValues) {
  RepCategory cat(Quiver::a1(), 2);
  const IsoClassId z = cat.zero();
  EXPECT_EQ(gamma(cat, kF, kF, kF, kF), 1);
  EXPECT_EQ(gamma(cat, kF, kF, z, z), 1);
  EXPECT_EQ(gamma(cat, kF, kF2, kF, z), 0);
  RepCategory cat3(Quiver::a1(), 3);
  EXPECT_EQ(gamma(cat3, kF, kF, z, z), Rational(1, 2));
}

TEST(Phi, SpecValues) {
  RepCategory cat(Quiver::a1(), 2);
  DerivedNumbers dn(cat);
  PeriodicHallAlgebra alg(dn, 3);
  const IsoClassId z = cat.zero();
  const KClass one(std::vector<int>{1});
  EXPECT_EQ(phi_image(alg, BridgelandWord{EGen{kF, 1}}), PeriodicElt::basis(alg.u(kF, 1)));
  EXPECT_EQ(phi_image(alg, BridgelandWord{KGen{one, 2}}), PeriodicElt::basis(alg.k(one, 2)));
  const PeriodicElt expected = PeriodicElt::basis(alg.u(Graded{kF, z, kF})) + PeriodicElt::basis(alg.k(one, 2));
  EXPECT_EQ(phi_image(alg, BridgelandWord{EGen{kF, 0}, EGen{kF, 2}}), expected);

  PeriodicHallAlgebra five(dn, 5);
  const Graded g{kF, z, kF, z, z};
  EXPECT_EQ(five.product(five.u(kF, 2), five.u(kF, 0)), PeriodicElt::basis(five.u(g)));
  EXPECT_EQ(five.product(five.u(kF, 0), five.u(kF, 2)), PeriodicElt::basis(five.u(g)));
}

TEST(Bridgeland, AllRelationsHoldOnSmallGrid) {
  for (int q : {2, 3}) {
    RepCategory cat(Quiver::a2(), q);
    DerivedNumbers dn(cat);
    PeriodicHallAlgebra alg(dn, 3);
    std::vector<KClass> kappas{KClass(std::vector<int>{1, 0}), KClass(std::vector<int>{0, -1})};
    const auto insts = check_bridgeland_relations(alg, DimVector({1, 1}), kappas);
    EXPECT_GT(insts.size(), 100u);
    for (const RelationInstance& r : insts) EXPECT_TRUE(r.equal()) << r.relation << " " << r.instance;
  }
}

TEST(Bridgeland, NeedsPeriodAboveTwo) {
  RepCategory cat(Quiver::a1(), 2);
  DerivedNumbers dn(cat);
  PeriodicHallAlgebra alg(dn, 2);
  EXPECT_THROW(check_bridgeland_relations(alg, DimVector({1}), {}), std::invalid_argument);
}
