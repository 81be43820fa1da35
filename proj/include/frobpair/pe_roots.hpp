#ifndef FROBPAIR_PE_ROOTS_HPP
#define FROBPAIR_PE_ROOTS_HPP

#include <map>
#include <set>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace frobpair {

struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return lex_compare(a, b) < 0; }
};

// Total order on polynomials (term by term), for deduplication.
struct PolyLess {
  bool operator()(const MultiPoly& a, const MultiPoly& b) const noexcept {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
      int c = grevlex_compare(ta[i].mono, tb[i].mono);
      if (c != 0) return c > 0;
      if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
    }
    return ta.size() < tb.size();
  }
};

/// f = sum_alpha c_alpha^(p^e) x^alpha with every alpha_i <= p^e - 1.
struct PeDecomposition {
  Ring ring;
  unsigned e = 0;
  std::map<Monomial, MultiPoly, MonomialLexLess> entries;

  MultiPoly reconstruct() const {
    MultiPoly sum(ring);
    for (const auto& [alpha, c] : entries) sum.add_scaled(1, alpha, frobenius_power(c, e));
    return sum;
  }
};

/// Finite generating set of an ideal; an empty list is the zero ideal.
class IdealGens {
public:
  explicit IdealGens(Ring ring) : ring_(std::move(ring)) {}

  IdealGens(Ring ring, std::vector<MultiPoly> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) add(std::move(g));
  }

  static IdealGens of(std::vector<MultiPoly> gens) {
    if (gens.empty()) throw std::invalid_argument("IdealGens::of needs at least one polynomial to fix the ring");
    Ring r = gens.front().ring();
    return IdealGens(std::move(r), std::move(gens));
  }

  void add(MultiPoly g) {
    if (!(g.ring() == ring_)) throw ContextMismatch();
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<MultiPoly>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }

private:
  Ring ring_;
  std::vector<MultiPoly> gens_;
};

inline PeDecomposition pe_decompose(const MultiPoly& f, unsigned e) {
  const std::uint64_t q = prime_power(f.ring().p(), e);
  const std::size_t d = f.ring().nvars();
  std::map<Monomial, std::vector<Term>, MonomialLexLess> buckets;
  for (const auto& t : f.terms()) {
    Monomial quot(d), rem(d);
    for (std::size_t i = 0; i < d; ++i) {
      quot[i] = static_cast<Exponent>(t.mono[i] / q);
      rem[i] = static_cast<Exponent>(t.mono[i] % q);
    }
    // Terms arrive in descending grevlex; quotients of a fixed residue
    // class stay in that order.
    buckets[std::move(rem)].push_back({std::move(quot), t.coeff});
  }
  PeDecomposition out{f.ring(), e, {}};
  for (auto& [alpha, terms] : buckets)
    out.entries.emplace(alpha, MultiPoly::from_sorted_terms(f.ring(), std::move(terms)));
  return out;
}

/// I_e(f): generated by the coefficients c_alpha of pe_decompose(f, e),
/// kept monic and deduplicated.
inline IdealGens ie_roots(const MultiPoly& f, unsigned e) {
  auto dec = pe_decompose(f, e);
  std::set<MultiPoly, PolyLess> seen;
  IdealGens out(f.ring());
  for (const auto& [alpha, c] : dec.entries) {
    MultiPoly m = c.monic();
    if (seen.insert(m).second) out.add(std::move(m));
  }
  return out;
}

/// J^[p^e]: generators raised to the p^e-th power.
inline IdealGens bracket_power(const IdealGens& J, unsigned e) {
  IdealGens out(J.ring());
  for (const auto& g : J.generators()) out.add(frobenius_power(g, e));
  return out;
}

/// An element A of GL_d(F_p), acting by (f|A)(x) = f(A x).
class LinearChange {
public:
  explicit LinearChange(FpMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("linear change must be square");
    if (matrix_.determinant() == 0) throw std::domain_error("linear change is singular over F_p");
  }

  static LinearChange identity(PrimeField field, std::size_t d) { return LinearChange(FpMatrix::identity(field, d)); }

  const FpMatrix& matrix() const noexcept { return matrix_; }
  LinearChange inverse() const { return LinearChange(matrix_.inverse()); }

private:
  FpMatrix matrix_;
};

inline MultiPoly linear_change(const MultiPoly& f, const LinearChange& A) {
  const auto& M = A.matrix();
  const Ring& ring = f.ring();
  const std::size_t d = ring.nvars();
  if (M.rows() != d) throw std::invalid_argument("linear change dimension does not match the ring");
  if (!(M.field() == ring.field())) throw ContextMismatch();

  std::vector<MultiPoly> forms;
  forms.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < d; ++j) {
      Monomial m(d);
      m[j] = 1;
      terms.push_back({std::move(m), M.at(i, j)});
    }
    forms.push_back(MultiPoly::from_terms(ring, std::move(terms)));
  }
  std::vector<std::map<Exponent, MultiPoly>> power_cache(d);
  auto power_of = [&](std::size_t i, Exponent n) -> const MultiPoly& {
    auto it = power_cache[i].find(n);
    if (it == power_cache[i].end()) it = power_cache[i].emplace(n, poly_pow(forms[i], n)).first;
    return it->second;
  };

  MultiPoly result(ring);
  for (const auto& t : f.terms()) {
    MultiPoly prod = MultiPoly::constant(ring, t.coeff);
    for (std::size_t i = 0; i < d; ++i)
      if (t.mono[i] != 0) prod = prod * power_of(i, t.mono[i]);
    result += prod;
  }
  return result;
}

inline IdealGens linear_change(const IdealGens& J, const LinearChange& A) {
  IdealGens out(J.ring());
  for (const auto& g : J.generators()) out.add(linear_change(g, A));
  return out;
}

} // namespace frobpair

#endif // FROBPAIR_PE_ROOTS_HPP
