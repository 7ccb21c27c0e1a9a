#ifndef LOOPCALC_LINEAR_COMBINATION_HPP
#define LOOPCALC_LINEAR_COMBINATION_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "loopcalc/word.hpp"

namespace loopcalc {

using Coefficient = std::int64_t;

/// Finitely supported integer combination of keys. Zero coefficients are never stored.
template <typename Key>
class LinearCombination {
public:
  using Map = std::map<Key, Coefficient>;

  LinearCombination() = default;
  LinearCombination(const Key& k, Coefficient c) { add(k, c); }

  void add(const Key& k, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(Coefficient s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(Coefficient s, LinearCombination a) { return a *= s; }
  LinearCombination operator-() const { return Coefficient{-1} * *this; }

  bool operator==(const LinearCombination&) const = default;

  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }
  Coefficient coefficient_sum() const {
    Coefficient s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
  }
  bool all_even() const {
    for (const auto& [k, c] : terms_) {
      if (c % 2 != 0) return false;
    }
    return true;
  }
  LinearCombination halved() const {
    LinearCombination out;
    for (const auto& [k, c] : terms_) {
      if (c % 2 != 0) throw std::domain_error("odd coefficient cannot be halved");
      out.terms_.emplace(k, c / 2);
    }
    return out;
  }

  /// Image under a map on keys, collected.
  template <typename F>
  auto map_keys(F&& f) const {
    LinearCombination<std::decay_t<decltype(f(std::declval<const Key&>()))>> out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

private:
  Map terms_;
};

/// Element of M: combination of free homotopy classes.
using FormalSum = LinearCombination<HomotopyClass>;
/// Element of M (x) M: combination of ordered class pairs.
using TensorSum = LinearCombination<std::pair<HomotopyClass, HomotopyClass>>;

/// The transposition x (x) y -> y (x) x.
template <typename K>
LinearCombination<std::pair<K, K>> transpose(const LinearCombination<std::pair<K, K>>& t) {
  return t.map_keys([](const std::pair<K, K>& p) { return std::pair<K, K>{p.second, p.first}; });
}

inline bool all_even(Coefficient c) { return c % 2 == 0; }
template <typename K>
bool all_even(const LinearCombination<K>& s) {
  return s.all_even();
}

}  // namespace loopcalc

#endif  // LOOPCALC_LINEAR_COMBINATION_HPP
