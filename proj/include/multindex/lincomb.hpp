#pragma once

#include <functional>
#include <map>
#include <utility>

#include "multindex/rational.hpp"

namespace multindex {

/// Finite linear combination of basis keys with exact rational coefficients.
/// Zero coefficients are never stored, so structural equality is equality of
/// vectors.
template <class Key, class Compare = std::less<Key>>
class LinComb {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Rational, Compare>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(const Key& key, const Rational& coeff = 1) { add(key, coeff); }

  void add(const Key& key, const Rational& coeff) {
    if (multindex::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (multindex::is_zero(it->second)) terms_.erase(it);
    }
  }
  void add(Key&& key, const Rational& coeff) {
    if (multindex::is_zero(coeff)) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), coeff);
    } else {
      it->second += coeff;
      if (multindex::is_zero(it->second)) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (multindex::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }
  /// Adds s * other.
  void add_scaled(const LinComb& other, const Rational& s) {
    if (multindex::is_zero(s)) return;
    for (const auto& [k, c] : other.terms_) add(k, c * s);
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  /// Applies a linear map given on basis keys.
  template <class Result, class F>
  Result map_linear(F&& f) const {
    Result out;
    for (const auto& [k, c] : terms_) out.add_scaled(f(k), c);
    return out;
  }

 private:
  map_type terms_;
};

}  // namespace multindex
