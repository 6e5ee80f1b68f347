#include "phall/scalars.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace phall {

Rational q_pow(int q, long long k) {
  Integer base(q);
  Integer p = boost::multiprecision::pow(base, static_cast<unsigned>(k < 0 ? -k : k));
  if (k >= 0) return Rational(p);
  return Rational(Integer(1), p);
}

Scalar::Scalar(const Rational& a, const Rational& b, int q) : a_(a), b_(b), q_(q) {
  if (b_ != 0 && q_ == 0) throw std::invalid_argument("irrational scalar needs a field order");
}

Scalar Scalar::v_pow(int q, long long k) { return v_power(q, k); }

const Scalar& Scalar::v_power(int q, long long k) {
  thread_local std::map<std::pair<int, long long>, Scalar> memo;
  const auto key = std::make_pair(q, k);
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, v_pow_uncached(q, k)).first;
  return it->second;
}

Scalar Scalar::v_pow_uncached(int q, long long k) {
  long long half = k >= 0 ? k / 2 : -((-k + 1) / 2);
  Rational c = q_pow(q, half);
  if (k - 2 * half == 0) return Scalar(c, 0, q);
  return Scalar(0, c, q);
}

Scalar v_pow(int q, long long k) { return Scalar::v_pow(q, k); }

int Scalar::merged_q(const Scalar& o) const {
  if (q_ != 0 && o.q_ != 0 && q_ != o.q_) {
    throw std::invalid_argument("scalars over different field orders");
  }
  return q_ != 0 ? q_ : o.q_;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  q_ = merged_q(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  q_ = merged_q(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  int q = merged_q(o);
  q_ = q;
  // Powers of v are pure rational or pure multiples of v; skip the cross terms.
  if (o.b_ == 0) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  if (o.a_ == 0) {
    Rational a = b_ * o.b_;
    a *= q;
    b_ = a_ * o.b_;
    a_ = std::move(a);
    return *this;
  }
  Rational a = a_ * o.a_;
  if (b_ != 0 && o.b_ != 0) a += b_ * o.b_ * q;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  q_ = q;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("zero scalar inverse");
  Rational norm = a_ * a_ - b_ * b_ * q_;
  // q is prime, so v is irrational and the norm of a nonzero element is nonzero.
  Scalar r;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.q_ = q_;
  return r;
}

std::string rational_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string rational_fraction(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer p(text.substr(0, slash));
    Integer r(text.substr(slash + 1));
    if (r == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, r);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

std::string Scalar::to_string() const {
  if (b_ == 0) return rational_string(a_);
  std::string bv = (b_ == 1 ? std::string() : b_ == -1 ? std::string("-") : rational_string(b_) + " ") + "v";
  if (a_ == 0) return bv;
  if (b_ < 0) {
    Rational nb = -b_;
    return rational_string(a_) + " - " + (nb == 1 ? std::string() : rational_string(nb) + " ") + "v";
  }
  return rational_string(a_) + " + " + bv;
}

}  // namespace phall
