#include "phall/repcat.hpp"
#include "phall/scalars.hpp"

#include <gtest/gtest.h>

using namespace phall;

namespace {

const IsoClassId kF{DimVector({1}), 0};
const IsoClassId kF2{DimVector({2}), 0};

/// Classes of 1→2 by Krull–Schmidt: S1^x ⊕ S2^y ⊕ P^z.
std::size_t a2_class_count(int d1, int d2) {
  std::size_t n = 0;
  for (int z = 0; z <= std::min(d1, d2); ++z) ++n;
  return n;
}

struct A2 {
  RepCategory cat;
  IsoClassId s1, s2, p, split;
  explicit A2(int q) : cat(Quiver::parse("1->2"), q) {
    s1 = cat.enumerate_classes(DimVector({1, 0}))[0];
    s2 = cat.enumerate_classes(DimVector({0, 1}))[0];
    for (const IsoClassId& c : cat.enumerate_classes(DimVector({1, 1}))) {
      if (cat.hom_dim(c, c) == 1) p = c;
      else split = c;
    }
  }
};

}  // namespace

TEST(Quiver, Parsing) {
  EXPECT_EQ(Quiver::parse("A1"), Quiver::a1());
  EXPECT_EQ(Quiver::parse("1->2"), Quiver::a2());
  EXPECT_EQ(Quiver::parse("A2"), Quiver::a2());
  EXPECT_EQ(Quiver::parse("3:0-1,2-1").arrows().size(), 2u);
  EXPECT_THROW(Quiver::parse("2:0-1,1-0"), std::invalid_argument);
  EXPECT_THROW(Quiver::parse("bogus"), std::invalid_argument);
}

TEST(Classes, CountsMatchKrullSchmidt) {
  for (int q : {2, 3}) {
    RepCategory a1(Quiver::a1(), q);
    for (int d = 0; d <= 3; ++d) EXPECT_EQ(a1.class_count(DimVector({d})), 1u);
    RepCategory a2(Quiver::a2(), q);
    for (int d1 = 0; d1 <= 3; ++d1) {
      for (int d2 = 0; d2 <= 3; ++d2) {
        EXPECT_EQ(a2.class_count(DimVector({d1, d2})), a2_class_count(d1, d2)) << d1 << "," << d2;
      }
    }
  }
}

TEST(Classes, OrbitsPartitionTheRepresentationSpace) {
  for (int q : {2, 3}) {
    RepCategory cat(Quiver::a2(), q);
    for (const DimVector& d : dims_within(DimVector({2, 2}))) {
      std::uint64_t total = 0;
      std::uint64_t gl = gl_order(d[0], cat.field()) * gl_order(d[1], cat.field());
      for (const IsoClassId& c : cat.enumerate_classes(d)) {
        total += cat.orbit_size(c);
        EXPECT_EQ(cat.aut_order(c) * cat.orbit_size(c), gl);
      }
      EXPECT_EQ(total, checked_pow(q, d[0] * d[1]));
    }
  }
}

TEST(Classes, CanonicalFormIsStable) {
  RepCategory cat(Quiver::a2(), 3);
  for (const IsoClassId& c : cat.classes_within(DimVector({2, 2}))) {
    EXPECT_EQ(cat.canonical_id(cat.representative(c)), c);
  }
  EXPECT_EQ(cat.canonical_id(Rep::zero(cat.quiver())), cat.zero());
}

TEST(Classes, LabelsRoundTrip) {
  RepCategory cat(Quiver::a2(), 2);
  for (const IsoClassId& c : cat.classes_within(DimVector({2, 1}))) {
    EXPECT_EQ(IsoClassId::parse_label(c.label(), 2), c);
  }
  EXPECT_EQ(kF.label(), "d(1)#0");
  EXPECT_THROW(IsoClassId::parse_label("d(1#0", 1), std::invalid_argument);
  EXPECT_THROW(IsoClassId::parse_label("d(1,0)#0", 1), std::invalid_argument);
}

TEST(HomExt, SpecValues) {
  for (int q : {2, 3}) {
    A2 a(q);
    EXPECT_EQ(a.cat.hom_dim(a.s1, a.s1), 1);
    EXPECT_EQ(a.cat.hom_dim(a.s2, a.s2), 1);
    EXPECT_EQ(a.cat.ext1_dim(a.s1, a.s2), 1);
    EXPECT_EQ(a.cat.ext1_dim(a.s2, a.s1), 0);
    EXPECT_EQ(a.cat.hom_dim(a.s1, a.s2), 0);
    EXPECT_EQ(a.cat.hom_dim(a.s2, a.p), 1);
    EXPECT_EQ(a.cat.hom_dim(a.p, a.s1), 1);
    EXPECT_EQ(a.cat.euler_form(to_k(DimVector({1, 0})), to_k(DimVector({0, 1}))), -1);
    EXPECT_EQ(a.cat.symmetric_form(to_k(DimVector({1, 0})), to_k(DimVector({0, 1}))), -1);
    EXPECT_EQ(a.cat.euler_form(to_k(DimVector({1, 1})), a.cat.zero_k()), 0);
    RepCategory a1(Quiver::a1(), q);
    for (const IsoClassId& m : a1.classes_within(DimVector({3}))) {
      for (const IsoClassId& n : a1.classes_within(DimVector({3}))) EXPECT_EQ(a1.ext1_dim(m, n), 0);
    }
  }
}

TEST(HomExt, EulerFormIdentity) {
  for (int q : {2, 3}) {
    RepCategory cat(Quiver::parse("3:0-1,1-2"), q);
    const auto classes = cat.classes_within(DimVector({1, 1, 1}));
    for (const IsoClassId& m : classes) {
      for (const IsoClassId& n : classes) {
        EXPECT_EQ(cat.hom_dim(m, n) - cat.ext1_dim(m, n), cat.euler_form(m, n));
      }
    }
  }
}

TEST(Aut, SpecValuesAndEnumeration) {
  RepCategory a1(Quiver::a1(), 2);
  EXPECT_EQ(a1.aut_order(a1.zero()), 1u);
  EXPECT_EQ(a1.aut_order(kF2), 6u);
  A2 a(2);
  EXPECT_EQ(a.cat.aut_order(a.p), 1u);
  EXPECT_EQ(a.cat.aut_order_enumerated(a.p), 1u);
  EXPECT_EQ(a.cat.aut_order(a.split), 1u);
  A2 b(3);
  EXPECT_EQ(b.cat.aut_order(b.p), 2u);
  EXPECT_EQ(b.cat.aut_order(b.split), 4u);
  for (const IsoClassId& c : b.cat.classes_within(DimVector({2, 2}))) {
    EXPECT_EQ(b.cat.aut_order(c), b.cat.aut_order_enumerated(c)) << c.label();
  }
}

TEST(HallNumbers, SpecValues) {
  for (int q : {2, 3}) {
    RepCategory a1(Quiver::a1(), q);
    EXPECT_EQ(a1.hall_number(kF2, kF, kF), static_cast<std::uint64_t>(q + 1));
    EXPECT_EQ(a1.hall_number(kF, kF, a1.zero()), 1u);
    EXPECT_EQ(a1.hall_number(kF2, kF2, a1.zero()), 1u);
    EXPECT_EQ(a1.hall_number(kF2, kF, a1.zero()), 0u);
    A2 a(q);
    EXPECT_EQ(a.cat.hall_number(a.p, a.s1, a.s2), 1u);
    EXPECT_EQ(a.cat.hall_number(a.p, a.s2, a.s1), 0u);
    EXPECT_EQ(a.cat.hall_number(a.split, a.s2, a.s1), 1u);
  }
}

TEST(HallNumbers, SubspaceCountOnA1) {
  // g^{F^n}_{F^k, F^{n-k}} is the Gaussian binomial.
  for (int q : {2, 3}) {
    RepCategory a1(Quiver::a1(), q);
    for (int n = 0; n <= 3; ++n) {
      for (int k = 0; k <= n; ++k) {
        const IsoClassId l{DimVector({n}), 0}, m{DimVector({k}), 0}, s{DimVector({n - k}), 0};
        EXPECT_EQ(a1.hall_number(l, m, s), enumerate_subspaces(n, n - k, a1.field()).size());
      }
    }
  }
}

TEST(Extensions, SpecValuesAndFiberTotals) {
  RepCategory a1(Quiver::a1(), 2);
  EXPECT_EQ(a1.ext_class_count(kF, kF, kF2), 1u);
  for (int q : {2, 3}) {
    A2 a(q);
    EXPECT_EQ(a.cat.ext_class_count(a.s1, a.s2, a.split), 1u);
    EXPECT_EQ(a.cat.ext_class_count(a.s1, a.s2, a.p), static_cast<std::uint64_t>(q - 1));
    const auto classes = a.cat.classes_within(DimVector({1, 2}));
    for (const IsoClassId& m : classes) {
      for (const IsoClassId& n : classes) {
        std::uint64_t total = 0;
        for (const auto& [l, c] : a.cat.ext_fibers(m, n)) total += c;
        EXPECT_EQ(total, checked_pow(q, a.cat.ext1_dim(m, n)));
      }
    }
  }
}

TEST(Extensions, RiedtmannPengOnRandomTriples) {
  RepCategory cat(Quiver::parse("3:0-1,2-1"), 2);
  const auto classes = cat.classes_within(DimVector({1, 1, 1}));
  for (const IsoClassId& l : classes) {
    for (const DimVector& d : dims_within(l.dim)) {
      for (const IsoClassId& m : cat.enumerate_classes(dim_difference(l.dim, d))) {
        for (const IsoClassId& n : cat.enumerate_classes(d)) {
          const Rational lhs(cat.hall_number(l, m, n));
          const Rational rhs = Rational(cat.ext_class_count(m, n, l)) * cat.aut_order(l) /
                               (q_pow(2, cat.hom_dim(m, n)) * cat.aut_order(m) * cat.aut_order(n));
          EXPECT_EQ(lhs, rhs);
        }
      }
    }
  }
}

TEST(Budget, LargeTablesAreRefused) {
  RepCategory cat(Quiver::a2(), 3, 1000);
  EXPECT_THROW(cat.class_count(DimVector({3, 3})), BudgetExceeded);
}
