#ifndef FROBPAIR_MONOMIAL_HPP
#define FROBPAIR_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"

namespace frobpair {

using Exponent = std::uint32_t;

namespace detail {

inline Exponent checked_exponent(std::uint64_t v) {
  if (v > std::numeric_limits<Exponent>::max())
    throw OverflowError("monomial exponent " + std::to_string(v) + " exceeds 32 bits");
  return static_cast<Exponent>(v);
}

} // namespace detail

/// Exponent vector x^a. Its length is the number of ring variables.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  Exponent& operator[](std::size_t i) noexcept { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  auto begin() const noexcept { return exps_.begin(); }
  auto end() const noexcept { return exps_.end(); }

  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  // Requires this->divides(other) to have been established by the caller.
  Monomial divide_into(const Monomial& other) const {
    Monomial q(other);
    for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= exps_[i];
    return q;
  }

  Monomial scaled(std::uint64_t factor) const {
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      auto v = static_cast<unsigned __int128>(exps_[i]) * factor;
      if (v > std::numeric_limits<Exponent>::max())
        throw OverflowError("monomial exponent overflow under Frobenius scaling");
      r.exps_[i] = static_cast<Exponent>(v);
    }
    return r;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      r.exps_[i] = detail::checked_exponent(std::uint64_t{a.exps_[i]} + b.exps_[i]);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : m) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Graded reverse lexicographic: higher total degree first, then the
// monomial with the smaller exponent in the last differing variable wins.
inline int grevlex_compare(const Monomial& a, const Monomial& b) noexcept {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

// Pure lexicographic with variable 0 largest.
inline int lex_compare(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

enum class OrderKind { grevlex, lex };

struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;

  static constexpr MonomialOrder grevlex() { return {OrderKind::grevlex}; }
  static constexpr MonomialOrder lex() { return {OrderKind::lex}; }

  int compare(const Monomial& a, const Monomial& b) const noexcept {
    return kind == OrderKind::grevlex ? grevlex_compare(a, b) : lex_compare(a, b);
  }
  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

// Strict weak "a sorts before b" for descending containers.
struct Descending {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return order.greater(a, b); }
};

} // namespace frobpair

#endif // FROBPAIR_MONOMIAL_HPP
