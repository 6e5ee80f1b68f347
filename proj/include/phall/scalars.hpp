#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace phall {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// q^k for any integer k, as an exact rational.
Rational q_pow(int q, long long k);

/// An element a + b·v of Q(v) with v² = q.
///
/// A scalar with q() == 0 is a plain rational (b is zero) and combines with
/// scalars of any q. Mixing two different nonzero q values is an error.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& a, const Rational& b, int q);

  static Scalar v_pow(int q, long long k);
  /// Memoized v^k; the reference stays valid for the calling thread.
  static const Scalar& v_power(int q, long long k);
  bool is_one() const noexcept { return a_ == 1 && b_ == 0; }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  int q() const noexcept { return q_; }
  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
  bool is_rational() const noexcept { return b_ == 0; }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  /// "a", "b v" or "a + b v" with rationals in p/r form.
  std::string to_string() const;

 private:
  static Scalar v_pow_uncached(int q, long long k);
  int merged_q(const Scalar& o) const;

  Rational a_{0};
  Rational b_{0};
  int q_ = 0;
};

Scalar v_pow(int q, long long k);

std::string rational_string(const Rational& r);
/// Always "p/r", also for integers.
std::string rational_fraction(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace phall
