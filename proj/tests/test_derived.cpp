#include "phall/derived.hpp"
#include "phall/oracle.hpp"

#include <gtest/gtest.h>

using namespace phall;

namespace {

const IsoClassId kF{DimVector({1}), 0};
const IsoClassId kF2{DimVector({2}), 0};

StalkSum pair_of(const IsoClassId& top, int ts, const IsoClassId& bottom, int bs) {
  StalkSum s;
  s.set(ts, top);
  s.set(bs, bottom);
  return s;
}

}  // namespace

TEST(StalkSum, ShiftAndLabels) {
  const StalkSum x = pair_of(kF, 1, kF2, 0);
  EXPECT_EQ(x.shifted(2).at(3, 1), kF);
  EXPECT_EQ(x.shifted(2).at(2, 1), kF2);
  EXPECT_TRUE(x.at(5, 1).is_zero());
  EXPECT_TRUE(StalkSum::stalk(IsoClassId::zero(1), 3).is_zero());
  RepCategory cat(Quiver::a1(), 2);
  const StalkSum y = stalk_direct_sum(cat, StalkSum::stalk(kF, 0), StalkSum::stalk(kF, 0));
  EXPECT_EQ(y, StalkSum::stalk(kF2, 0));
}

TEST(Brace, SpecValues) {
  for (int q : {2, 3}) {
    RepCategory cat(Quiver::a1(), q);
    DerivedNumbers dn(cat);
    EXPECT_EQ(dn.brace(StalkSum::stalk(kF), StalkSum::stalk(kF2)), 1);
    EXPECT_EQ(dn.brace(StalkSum::stalk(kF), StalkSum::stalk(kF, 1)), Rational(1, q));
    const StalkSum x = pair_of(kF, 1, kF2, -1), y = pair_of(kF2, 2, kF, 0);
    EXPECT_EQ(dn.brace(x.shifted(3), y.shifted(3)), dn.brace(x, y));
  }
}

TEST(FourTerm, SpecValues) {
  RepCategory cat(Quiver::a1(), 2);
  DerivedNumbers dn(cat);
  const IsoClassId z = cat.zero();
  EXPECT_EQ(dn.four_term_F(kF, z, z, kF, kF2), 3);
  EXPECT_EQ(dn.four_term_F(z, z, kF, kF, z), 1);
  EXPECT_EQ(dn.four_term_F(kF, kF, z, z, kF), 0);
}

TEST(DerivedH, SpecValues) {
  for (int q : {2, 3}) {
    RepCategory cat(Quiver::a1(), q);
    DerivedNumbers dn(cat);
    const IsoClassId z = cat.zero();
    EXPECT_EQ(dn.derived_H(z, kF, kF, z, kF2), Rational(1, q));
    EXPECT_EQ(dn.derived_H(kF, z, kF, z, z), Rational(q - 1));
    EXPECT_EQ(dn.derived_H(kF, z, kF, z, kF), 0);
    EXPECT_EQ(dn.derived_H(z, kF, z, z, kF2), 0);
  }
}

TEST(DerivedH, ReducesToAbelianWhenImagesVanish) {
  for (int q : {2, 3}) {
    RepCategory cat(Quiver::a2(), q);
    DerivedNumbers dn(cat);
    const auto classes = cat.classes_within(DimVector({1, 1}));
    for (const IsoClassId& a : classes) {
      for (const IsoClassId& b : classes) {
        for (const IsoClassId& m : cat.enumerate_classes(a.dim + b.dim)) {
          const Rational expected = Rational(cat.ext_class_count(a, b, m)) / q_pow(q, cat.hom_dim(a, b));
          EXPECT_EQ(dn.derived_H(cat.zero(), a, b, cat.zero(), m), expected);
        }
      }
    }
  }
}

TEST(Lemma25, SpecValues) {
  RepCategory cat(Quiver::a1(), 2);
  DerivedNumbers dn(cat);
  const IsoClassId z = cat.zero();
  EXPECT_EQ(dn.lemma25_F(kF, kF, z, z), 1);
  EXPECT_EQ(dn.lemma25_F(z, z, z, z), 1);
  EXPECT_EQ(dn.lemma25_F(z, z, kF, z), 0);
  EXPECT_EQ(dn.lemma25_F(kF, kF, kF, kF), Rational(1, 2));
}

TEST(Lemma25, AgreesWithOracleOnA2) {
  // F^{X[1]⊕Y}_{M[1],N} = |Hom(N, X[1]⊕Y)_{M[1]}| / |Aut N| · {N, X[1]⊕Y} / {N, N}.
  RepCategory cat(Quiver::a2(), 2);
  DerivedNumbers dn(cat);
  oracle::Oracle o(cat);
  const auto classes = cat.classes_within(DimVector({1, 1}));
  for (const IsoClassId& m : classes) {
    for (const IsoClassId& n : classes) {
      for (const IsoClassId& x : classes) {
        for (const IsoClassId& y : classes) {
          const StalkSum l = pair_of(x, 1, y, 0);
          const StalkSum sn = StalkSum::stalk(n, 0);
          const Rational f = Rational(o.db_cone_count(sn, l, StalkSum::stalk(m, 1))) / o.db_aut_count(sn) *
                             dn.brace(sn, l) / dn.brace(sn, sn);
          EXPECT_EQ(dn.lemma25_F(m, n, x, y), f) << m.label() << n.label() << x.label() << y.label();
        }
      }
    }
  }
}
