#ifndef FROBPAIR_CURVES_HPP
#define FROBPAIR_CURVES_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace frobpair {

namespace detail {

// Dense univariate polynomials over F_p, lowest degree first, no trailing zeros.
using Dense = std::vector<Coeff>;

inline void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Dense dense_mul(const Dense& a, const Dense& b, const PrimeField& F) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

inline Dense dense_pow(Dense base, std::uint64_t n, const PrimeField& F) {
  Dense result{1};
  while (n) {
    if (n & 1) result = dense_mul(result, base, F);
    n >>= 1;
    if (n) base = dense_mul(base, base, F);
  }
  return result;
}

inline Dense dense_mod(Dense a, const Dense& b, const PrimeField& F) {
  Coeff inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    Coeff c = F.mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  return a;
}

inline Dense dense_gcd(Dense a, Dense b, const PrimeField& F) {
  while (!b.empty()) {
    Dense r = dense_mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Dense dense_derivative(const Dense& a, const PrimeField& F) {
  Dense d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(a[i], F.from_uint(i)));
  trim(d);
  return d;
}

} // namespace detail

/// The curve y^2 = h(x) over F_p, p odd, h squarefree of degree 2g+1 or 2g+2.
class HyperellipticModel {
public:
  explicit HyperellipticModel(const MultiPoly& h) : h_(h) {
    if (h.ring().nvars() != 1) throw std::invalid_argument("h must be univariate");
    if (h.ring().p() == 2) throw std::invalid_argument("hyperelliptic models need an odd characteristic");
    const auto& F = h.field();
    for (const auto& t : h.terms()) {
      std::size_t k = t.mono[0];
      if (dense_.size() <= k) dense_.resize(k + 1, 0);
      dense_[k] = t.coeff;
    }
    if (dense_.size() < 4) throw std::invalid_argument("h must have degree at least 3");
    auto g = detail::dense_gcd(dense_, detail::dense_derivative(dense_, F), F);
    if (g.size() != 1) throw std::invalid_argument("h is not squarefree over F_p");
    genus_ = (degree() - 1) / 2;
  }

  const MultiPoly& h() const noexcept { return h_; }
  const PrimeField& field() const noexcept { return h_.field(); }
  std::uint64_t p() const noexcept { return h_.ring().p(); }
  std::size_t degree() const noexcept { return dense_.size() - 1; }
  std::size_t genus() const noexcept { return genus_; }
  // Coefficients of h, lowest degree first.
  const std::vector<Coeff>& coefficients() const noexcept { return dense_; }

private:
  MultiPoly h_;
  std::vector<Coeff> dense_;
  std::size_t genus_ = 0;
};

/// M[j-1][i-1] = c_{jp-i} for h^((p-1)/2) = sum c_k x^k.
inline FpMatrix cartier_manin(const HyperellipticModel& m) {
  const auto& F = m.field();
  const std::uint64_t p = m.p();
  const std::size_t g = m.genus();
  auto power = detail::dense_pow(m.coefficients(), (p - 1) / 2, F);
  FpMatrix M(F, g, g);
  for (std::size_t j = 1; j <= g; ++j)
    for (std::size_t i = 1; i <= g; ++i) {
      std::uint64_t k = j * p - i;
      M.at(j - 1, i - 1) = k < power.size() ? power[k] : 0;
    }
  return M;
}

struct CurveClassification {
  std::size_t genus = 0;
  std::size_t p_rank = 0;
  std::size_t a_number = 0;
  bool ordinary = false;
  bool superspecial = false;
};

// Over F_p every Frobenius twist of M is M, so the stable rank of the
// iterated Cartier operator is rank(M^g).
inline CurveClassification classify(const FpMatrix& M) {
  const std::size_t g = M.rows();
  CurveClassification c;
  c.genus = g;
  c.a_number = g - M.rank();
  c.p_rank = M.power(g).rank();
  c.ordinary = c.p_rank == g;
  c.superspecial = M.is_zero();
  return c;
}

inline CurveClassification classify(const HyperellipticModel& m) { return classify(cartier_manin(m)); }

/// The form (a_{g-1} x^{g-1} + ... + a_0) dx / y is exact iff M a = 0.
inline bool stratified_test(const FpMatrix& M, const std::vector<Coeff>& a) {
  if (a.size() != M.cols()) throw std::invalid_argument("stratification vector has wrong length");
  if (std::all_of(a.begin(), a.end(), [&](Coeff v) { return M.field().from_uint(v) == 0; }))
    throw std::invalid_argument("stratification vector must be nonzero");
  auto image = M.apply(a);
  return std::all_of(image.begin(), image.end(), [](Coeff v) { return v == 0; });
}

inline bool stratified_test(const HyperellipticModel& m, const std::vector<Coeff>& a) {
  return stratified_test(cartier_manin(m), a);
}

inline std::vector<std::vector<Coeff>> stratification_kernel(const FpMatrix& M) { return M.kernel(); }

inline std::vector<std::vector<Coeff>> stratification_kernel(const HyperellipticModel& m) {
  return stratification_kernel(cartier_manin(m));
}

/// y^2 z^(2g-1) - z^(2g+1) h(x/z) in F_p[x, y, z]; odd-degree models only.
inline MultiPoly plane_model(const HyperellipticModel& m) {
  const std::size_t g = m.genus();
  if (m.degree() != 2 * g + 1) throw std::invalid_argument("plane model needs deg h = 2g + 1");
  Ring ring(m.field(), VarContext({"x", "y", "z"}));
  const auto& F = m.field();
  std::vector<Term> terms;
  terms.push_back({Monomial{0, 2, static_cast<Exponent>(2 * g - 1)}, 1});
  const auto& c = m.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0)
      terms.push_back({Monomial{static_cast<Exponent>(k), 0, static_cast<Exponent>(2 * g + 1 - k)}, F.neg(c[k])});
  return MultiPoly::from_terms(ring, std::move(terms));
}

} // namespace frobpair

#endif // FROBPAIR_CURVES_HPP
