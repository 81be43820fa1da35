#ifndef FROBPAIR_LEVEL_HPP
#define FROBPAIR_LEVEL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "pe_roots.hpp"
#include "poly.hpp"

namespace frobpair {

struct LevelQuery {
  MultiPoly g;
  MultiPoly f;
  unsigned e_max = 6;
  // Finite outcomes carry a certificate unless this is cleared.
  bool with_certificate = true;
};

/// Cofactors s_i and residues alpha_i with
///   sum_i s_i * c_{alpha_i}^(p^e) == g^p * f^(p^e - p),
/// where c_alpha are the entries of pe_decompose(g * f^(p^e - 1), e).
/// The operator sum_i s_i * pi_{alpha_i} (pi_alpha the R^(p^e)-linear
/// projection onto x^alpha) maps g/f to (g/f)^p.
struct FrobeniusCertificate {
  struct Entry {
    MultiPoly cofactor;
    Monomial alpha;
  };

  unsigned e = 0;
  MultiPoly g;
  MultiPoly f;
  std::vector<Entry> terms;
};

struct LevelOutcome {
  enum class Kind { zero, finite, exceeds_bound };

  Kind kind = Kind::zero;
  // The level for finite outcomes, e_max for exceeds_bound, 0 otherwise.
  unsigned e = 0;
  std::optional<FrobeniusCertificate> certificate;

  static LevelOutcome zero() { return {Kind::zero, 0, std::nullopt}; }
  static LevelOutcome finite(unsigned e, std::optional<FrobeniusCertificate> cert) {
    return {Kind::finite, e, std::move(cert)};
  }
  static LevelOutcome exceeds(unsigned e_max) { return {Kind::exceeds_bound, e_max, std::nullopt}; }

  bool is_finite(unsigned level) const noexcept { return kind == Kind::finite && e == level; }
};

inline std::string kind_name(LevelOutcome::Kind k) {
  switch (k) {
    case LevelOutcome::Kind::zero: return "zero";
    case LevelOutcome::Kind::finite: return "finite";
    case LevelOutcome::Kind::exceeds_bound: return "exceeds_bound";
  }
  return "unknown";
}

namespace detail {

// Rethrows exponent overflow with the offending e attached.
template <class Fn>
auto at_level(unsigned e, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const OverflowError& err) {
    throw OverflowError(std::string(err.what()) + " (at e = " + std::to_string(e) + ")");
  }
}

} // namespace detail

/// g * f^(p^e - 1)
inline MultiPoly level_source(const MultiPoly& g, const MultiPoly& f, unsigned e) {
  return detail::at_level(e, [&] { return g * poly_pow(f, prime_power(f.ring().p(), e) - 1); });
}

/// g^p * f^(p^e - p), with f^(p^e - p) = (f^(p^(e-1) - 1))^p.
inline MultiPoly level_target(const MultiPoly& g, const MultiPoly& f, unsigned e) {
  if (e == 0) throw std::invalid_argument("level_target requires e >= 1");
  return detail::at_level(e, [&] {
    auto inner = poly_pow(f, prime_power(f.ring().p(), e - 1) - 1);
    return frobenius_power(g, 1) * frobenius_power(inner, 1);
  });
}

/// I_e(g^p f^(p^e-p)) subset of I_e(g f^(p^e-1)).
inline bool root_containment(const MultiPoly& g, const MultiPoly& f, unsigned e) {
  auto target = ie_roots(level_target(g, f, e), e);
  auto source = ie_roots(level_source(g, f, e), e);
  return ideal_contains(target, groebner_basis(source));
}

/// The same containment after raising both ideals to their p^e-th
/// bracket powers. Degrees grow by p^e; meant for small instances.
inline bool bracket_containment(const MultiPoly& g, const MultiPoly& f, unsigned e) {
  auto target = bracket_power(ie_roots(level_target(g, f, e), e), e);
  auto source = bracket_power(ie_roots(level_source(g, f, e), e), e);
  return ideal_contains(target, groebner_basis(source));
}

inline FrobeniusCertificate build_certificate(const MultiPoly& g, const MultiPoly& f, unsigned e) {
  g.require_same(f);
  if (e == 0) throw std::invalid_argument("certificates are built for e >= 1");
  const Ring& ring = f.ring();
  const auto source = pe_decompose(level_source(g, f, e), e);
  const auto target = pe_decompose(level_target(g, f, e), e);

  std::vector<Monomial> alphas;
  IdealGens gens(ring);
  for (const auto& [alpha, c] : source.entries) {
    alphas.push_back(alpha);
    gens.add(c);
  }
  const auto lifted = groebner_basis_lifted(gens);

  // s_k = sum_beta (t_{beta,k})^(p^e) x^beta, where d_beta = sum_k t_{beta,k} c_k.
  std::vector<MultiPoly> s(alphas.size(), MultiPoly(ring));
  for (const auto& [beta, d] : target.entries) {
    auto nf = normal_form(d, lifted.basis);
    if (!nf.member) throw std::logic_error("build_certificate: containment does not hold at e = " + std::to_string(e));
    std::vector<MultiPoly> t(alphas.size(), MultiPoly(ring));
    for (std::size_t i = 0; i < nf.cofactors.size(); ++i) {
      if (nf.cofactors[i].is_zero()) continue;
      for (const auto& [k, rep] : lifted.transform[i]) t[k] += nf.cofactors[i] * rep;
    }
    for (std::size_t k = 0; k < alphas.size(); ++k)
      if (!t[k].is_zero()) s[k].add_scaled(1, beta, frobenius_power(t[k], e));
  }

  FrobeniusCertificate cert{e, g, f, {}};
  for (std::size_t k = 0; k < alphas.size(); ++k)
    if (!s[k].is_zero()) cert.terms.push_back({std::move(s[k]), alphas[k]});
  return cert;
}

/// Recomputes both sides with plain polynomial arithmetic.
inline bool verify_certificate(const FrobeniusCertificate& cert) {
  if (cert.e == 0) return false;
  if (!(cert.g.ring() == cert.f.ring())) return false;
  const Ring& ring = cert.f.ring();
  const std::uint64_t q = prime_power(ring.p(), cert.e);
  const auto source = pe_decompose(cert.g * poly_pow(cert.f, q - 1), cert.e);
  MultiPoly lhs(ring);
  for (const auto& entry : cert.terms) {
    if (!(entry.cofactor.ring() == ring)) return false;
    auto it = source.entries.find(entry.alpha);
    if (it == source.entries.end()) return false;
    lhs += entry.cofactor * frobenius_power(it->second, cert.e);
  }
  const MultiPoly rhs = frobenius_power(cert.g, 1) * poly_pow(cert.f, q - ring.p());
  return lhs == rhs;
}

/// Smallest e <= e_max with root_containment(g, f, e).
inline LevelOutcome level_pair(const LevelQuery& q) {
  q.g.require_same(q.f);
  if (q.f.is_zero()) throw std::invalid_argument("level of a pair needs a nonzero denominator");
  if (q.e_max == 0) throw std::invalid_argument("e_max must be at least 1");
  if (exact_divide(q.g, q.f)) return LevelOutcome::zero();
  for (unsigned e = 1; e <= q.e_max; ++e) {
    if (root_containment(q.g, q.f, e)) {
      std::optional<FrobeniusCertificate> cert;
      if (q.with_certificate) cert = build_certificate(q.g, q.f, e);
      return LevelOutcome::finite(e, std::move(cert));
    }
  }
  return LevelOutcome::exceeds(q.e_max);
}

inline LevelOutcome level_pair(const MultiPoly& g, const MultiPoly& f, unsigned e_max = 6, bool with_certificate = true) {
  return level_pair(LevelQuery{g, f, e_max, with_certificate});
}

inline LevelOutcome level_single(const MultiPoly& f, unsigned e_max = 6, bool with_certificate = true) {
  return level_pair(MultiPoly::one(f.ring()), f, e_max, with_certificate);
}

/// level(g, f) == 1  iff  g in I_1(g f^(p-1)), for f not dividing g.
inline bool level_one_test(const MultiPoly& g, const MultiPoly& f) {
  g.require_same(f);
  auto source = ie_roots(level_source(g, f, 1), 1);
  return reduces_to_zero(g, groebner_basis(source));
}

/// true certifies level(g, f) > e. Sound, not complete: it only looks
/// at the two coarser ideals I_e(f^(p^e-1)) and I_e(g).
inline bool level_lower_bound_filter(const MultiPoly& g, const MultiPoly& f, unsigned e) {
  g.require_same(f);
  auto target = ie_roots(level_target(g, f, e), e);
  auto f_part = ie_roots(level_source(MultiPoly::one(f.ring()), f, e), e);
  if (!ideal_contains(target, groebner_basis(f_part))) return true;
  auto g_part = ie_roots(g, e);
  return !ideal_contains(target, groebner_basis(g_part));
}

} // namespace frobpair

#endif // FROBPAIR_LEVEL_HPP
