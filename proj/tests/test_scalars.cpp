#include "phall/scalars.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace phall;

TEST(Scalar, DefiningRelations) {
  for (int q : {2, 3, 5}) {
    const Scalar v = v_pow(q, 1);
    EXPECT_EQ(v * v, Scalar(q));
    EXPECT_EQ(v.inverse(), v / Scalar(q));
    EXPECT_EQ(v * v.inverse(), Scalar(1));
    EXPECT_EQ(v_pow(q, 0), Scalar(1));
    EXPECT_EQ(v_pow(q, 2), Scalar(q));
    EXPECT_EQ(v_pow(q, -2), Scalar(Rational(1, q)));
    EXPECT_EQ(Scalar(1) * v, v);
  }
}

TEST(Scalar, PowersAgree) {
  for (int q : {2, 3}) {
    Scalar acc = 1;
    for (int k = 0; k < 9; ++k) {
      EXPECT_EQ(v_pow(q, k), acc);
      EXPECT_EQ(v_pow(q, -k), acc.inverse());
      acc *= v_pow(q, 1);
    }
    EXPECT_EQ(q_pow(q, -3), Rational(1, q * q * q));
  }
}

TEST(Scalar, FieldAxiomsOnRandomElements) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-6, 6);
  auto draw = [&](int q) {
    return Scalar(Rational(d(rng), 1 + (rng() % 5)), Rational(d(rng), 1 + (rng() % 5)), q);
  };
  for (int q : {2, 3}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Scalar x = draw(q), y = draw(q), z = draw(q);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x - x, Scalar(0));
      if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), Scalar(1));
    }
  }
}

TEST(Scalar, MixingFieldsIsAnError) {
  EXPECT_THROW(v_pow(2, 1) + v_pow(3, 1), std::invalid_argument);
  // Plain rationals combine with any q.
  EXPECT_EQ((Scalar(Rational(1, 2)) * v_pow(3, 1)).b(), Rational(1, 2));
}

TEST(Scalar, Printing) {
  EXPECT_EQ(Scalar(Rational(1, 2)).to_string(), "1/2");
  EXPECT_EQ(v_pow(2, 1).to_string(), "v");
  EXPECT_EQ((v_pow(2, 1) * Scalar(Rational(1, 2))).to_string(), "1/2 v");
  EXPECT_EQ((Scalar(1) - v_pow(2, 1)).to_string(), "1 - v");
  EXPECT_EQ(rational_fraction(Rational(3)), "3/1");
  EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
}
