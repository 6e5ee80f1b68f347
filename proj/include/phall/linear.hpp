#pragma once

#include "phall/scalars.hpp"

#include <map>

namespace phall {

/// Finite formal sum of basis keys with Scalar coefficients; zero
/// coefficients are never stored.
template <class Key>
class LinearCombination {
 public:
  using Map = std::map<Key, Scalar>;

  LinearCombination() = default;
  static LinearCombination basis(const Key& k, const Scalar& c = Scalar(1)) {
    LinearCombination x;
    x.add_term(k, c);
    return x;
  }

  void add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Scalar coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  LinearCombination scaled(const Scalar& s) const {
    LinearCombination r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

}  // namespace phall
