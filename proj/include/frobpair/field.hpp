#ifndef FROBPAIR_FIELD_HPP
#define FROBPAIR_FIELD_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace frobpair {

using Coeff = std::uint64_t;

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t n, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (n) {
    if (n & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    n >>= 1;
  }
  return r;
}

} // namespace detail

// Deterministic Miller-Rabin; these bases are exact for all 64-bit n.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto b : bases) {
    std::uint64_t x = detail::powmod_u64(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// The prime field F_p. Elements are plain Coeff values in [0, p).
class PrimeField {
public:
  static constexpr std::uint64_t max_modulus = (std::uint64_t{1} << 62);

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= max_modulus) throw std::invalid_argument("modulus too large: " + std::to_string(p));
    if (!is_prime(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
  }

  std::uint64_t p() const noexcept { return p_; }

  Coeff from_int(std::int64_t v) const noexcept {
    auto m = static_cast<std::int64_t>(p_);
    auto r = v % m;
    return static_cast<Coeff>(r < 0 ? r + m : r);
  }
  Coeff from_uint(std::uint64_t v) const noexcept { return v % p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept { return detail::mulmod_u64(a, b, p_); }
  Coeff pow(Coeff a, std::uint64_t n) const noexcept { return detail::powmod_u64(a, n, p_); }

  Coeff inv(Coeff a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(a, p_ - 2);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

private:
  std::uint64_t p_;
};

} // namespace frobpair

#endif // FROBPAIR_FIELD_HPP
