#ifndef FROBPAIR_LUCAS_HPP
#define FROBPAIR_LUCAS_HPP

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace frobpair {

namespace detail {

// (sum k_i)! / prod(k_i!) mod p, all k_i < p and no carry.
inline Coeff small_multinomial(const PrimeField& F, std::span<const std::uint64_t> parts) {
  Coeff num = 1;
  Coeff den = 1;
  std::uint64_t running = 0;
  for (auto k : parts) {
    for (std::uint64_t j = 1; j <= k; ++j) {
      num = F.mul(num, F.from_uint(running + j));
      den = F.mul(den, F.from_uint(j));
    }
    running += k;
  }
  return F.mul(num, F.inv(den));
}

} // namespace detail

/// Multinomial coefficient n! / prod(parts!) in F_p, via Lucas' theorem.
///
/// Digits are taken base p; a carry in any position (digit sums of the
/// parts exceeding the digit of n) makes the coefficient vanish.
inline Coeff multinomial_mod_p(const PrimeField& F, std::uint64_t n, std::span<const std::uint64_t> parts) {
  std::uint64_t total = 0;
  for (auto k : parts) {
    if (k > n || total > n - k) throw std::invalid_argument("multinomial parts do not sum to n");
    total += k;
  }
  if (total != n) throw std::invalid_argument("multinomial parts do not sum to n");

  const std::uint64_t p = F.p();
  std::vector<std::uint64_t> rest(parts.begin(), parts.end());
  std::vector<std::uint64_t> digits(rest.size());
  Coeff result = 1;
  while (n > 0) {
    std::uint64_t nd = n % p;
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      digits[i] = rest[i] % p;
      rest[i] /= p;
      sum += digits[i];
    }
    if (sum != nd) return 0;
    result = F.mul(result, detail::small_multinomial(F, digits));
    n /= p;
  }
  return result;
}

inline Coeff multinomial_mod_p(const PrimeField& F, std::uint64_t n, std::initializer_list<std::uint64_t> parts) {
  return multinomial_mod_p(F, n, std::span<const std::uint64_t>(parts.begin(), parts.size()));
}

/// binom(n, k) mod p; zero when k > n.
inline Coeff binomial_mod_p(const PrimeField& F, std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  const std::uint64_t parts[2] = {k, n - k};
  return multinomial_mod_p(F, n, parts);
}

} // namespace frobpair

#endif // FROBPAIR_LUCAS_HPP
