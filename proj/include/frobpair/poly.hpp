#ifndef FROBPAIR_POLY_HPP
#define FROBPAIR_POLY_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "ring.hpp"

namespace frobpair {

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Upper bound on the number of terms any intermediate product may reach.
// Seeded from FROBPAIR_MAX_TERMS, default 10^7.
namespace detail {

inline std::size_t initial_term_limit() {
  if (const char* env = std::getenv("FROBPAIR_MAX_TERMS")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

inline std::atomic<std::size_t>& term_limit_storage() {
  static std::atomic<std::size_t> limit{initial_term_limit()};
  return limit;
}

} // namespace detail

inline std::size_t term_limit() { return detail::term_limit_storage().load(std::memory_order_relaxed); }
inline void set_term_limit(std::size_t n) { detail::term_limit_storage().store(n, std::memory_order_relaxed); }

/// p^e, or OverflowError when it does not fit in 64 bits.
inline std::uint64_t prime_power(std::uint64_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > std::numeric_limits<std::uint64_t>::max() / p)
      throw OverflowError("p^e overflows 64 bits at e = " + std::to_string(e));
    q *= p;
  }
  return q;
}

namespace detail {

inline void check_terms(std::size_t n) {
  if (n > term_limit())
    throw ResourceError("intermediate polynomial exceeds " + std::to_string(term_limit()) + " terms");
}

// Terms of a + c*m*b; both inputs sorted descending in `order`, output too.
inline std::vector<Term> axpy_terms(std::span<const Term> a, Coeff c, const Monomial& m,
                                    std::span<const Term> b, MonomialOrder order,
                                    const PrimeField& F) {
  std::vector<Term> out;
  if (c == 0 || b.empty()) return {a.begin(), a.end()};
  out.reserve(a.size() + b.size());
  const bool shift = !m.is_one();
  std::size_t i = 0, j = 0;
  Monomial mb;
  bool have_b = false;
  auto load_b = [&] {
    if (j < b.size()) {
      mb = shift ? m * b[j].mono : b[j].mono;
      have_b = true;
    } else {
      have_b = false;
    }
  };
  load_b();
  while (i < a.size() || have_b) {
    int cmp;
    if (i >= a.size()) cmp = -1;
    else if (!have_b) cmp = 1;
    else cmp = order.compare(a[i].mono, mb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(mb), F.mul(c, b[j].coeff)});
      ++j;
      load_b();
    } else {
      Coeff s = F.add(a[i].coeff, F.mul(c, b[j].coeff));
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
      load_b();
    }
  }
  return out;
}

inline void sort_descending(std::vector<Term>& terms, MonomialOrder order) {
  std::sort(terms.begin(), terms.end(),
            [order](const Term& x, const Term& y) { return order.greater(x.mono, y.mono); });
}

inline std::vector<Term> multiply_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                                        MonomialOrder order, const PrimeField& F) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1) return axpy_terms({}, a[0].coeff, a[0].mono, b, order, F);
  if (b.size() == 1) return axpy_terms({}, b[0].coeff, b[0].mono, a, order, F);
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), std::size_t{1} << 22));
  for (const auto& ta : a) {
    for (const auto& tb : b) {
      auto [it, fresh] = acc.try_emplace(ta.mono * tb.mono, 0);
      it->second = F.add(it->second, F.mul(ta.coeff, tb.coeff));
    }
    check_terms(acc.size());
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [mono, c] : acc)
    if (c != 0) out.push_back({mono, c});
  sort_descending(out, order);
  return out;
}

} // namespace detail

/// Sparse polynomial over F_p. Terms are kept sorted in descending
/// grevlex order with nonzero coefficients, so equality is structural.
class MultiPoly {
public:
  explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(Ring ring, Coeff c) {
    MultiPoly r(std::move(ring));
    c = r.field().from_uint(c);
    if (c != 0) r.terms_.push_back({Monomial(r.ring_.nvars()), c});
    return r;
  }
  static MultiPoly one(Ring ring) { return constant(std::move(ring), 1); }

  static MultiPoly variable(Ring ring, std::size_t i) {
    if (i >= ring.nvars()) throw std::out_of_range("variable index out of range");
    Monomial m(ring.nvars());
    m[i] = 1;
    return monomial(std::move(ring), std::move(m), 1);
  }

  static MultiPoly monomial(Ring ring, Monomial m, Coeff c = 1) {
    if (m.size() != ring.nvars()) throw std::invalid_argument("monomial has wrong number of variables");
    MultiPoly r(std::move(ring));
    c = r.field().from_uint(c);
    if (c != 0) r.terms_.push_back({std::move(m), c});
    return r;
  }

  // Accepts unsorted terms with duplicates or zeros and canonicalizes.
  static MultiPoly from_terms(Ring ring, std::vector<Term> terms) {
    MultiPoly r(std::move(ring));
    const auto& F = r.field();
    for (auto& t : terms) {
      if (t.mono.size() != r.ring_.nvars()) throw std::invalid_argument("monomial has wrong number of variables");
      t.coeff = F.from_uint(t.coeff);
    }
    detail::sort_descending(terms, MonomialOrder::grevlex());
    for (auto& t : terms) {
      if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
        r.terms_.back().coeff = F.add(r.terms_.back().coeff, t.coeff);
      } else {
        if (!r.terms_.empty() && r.terms_.back().coeff == 0) r.terms_.pop_back();
        r.terms_.push_back(std::move(t));
      }
    }
    if (!r.terms_.empty() && r.terms_.back().coeff == 0) r.terms_.pop_back();
    return r;
  }

  // Terms already sorted descending grevlex with no zeros or duplicates.
  static MultiPoly from_sorted_terms(Ring ring, std::vector<Term> terms) {
    MultiPoly r(std::move(ring));
    r.terms_ = std::move(terms);
    return r;
  }

  const Ring& ring() const noexcept { return ring_; }
  const PrimeField& field() const noexcept { return ring_.field(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.front();
  }

  std::uint64_t total_degree() const noexcept { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

  bool is_homogeneous() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [d = total_degree()](const Term& t) { return t.mono.degree() == d; });
  }

  Coeff coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
      return grevlex_compare(t.mono, key) > 0;
    });
    return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
  }

  // c * m * this
  MultiPoly shifted(const Monomial& m, Coeff c = 1) const {
    MultiPoly r(ring_);
    r.terms_ = detail::axpy_terms({}, field().from_uint(c), m, terms_, MonomialOrder::grevlex(), field());
    return r;
  }
  MultiPoly scaled(Coeff c) const { return shifted(Monomial(ring_.nvars()), c); }

  MultiPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(terms_.front().coeff));
  }

  // this += c * m * other
  void add_scaled(Coeff c, const Monomial& m, const MultiPoly& other) {
    require_same(other);
    terms_ = detail::axpy_terms(terms_, field().from_uint(c), m, other.terms_, MonomialOrder::grevlex(), field());
  }

  MultiPoly& operator+=(const MultiPoly& b) {
    add_scaled(1, Monomial(ring_.nvars()), b);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& b) {
    add_scaled(field().neg(1), Monomial(ring_.nvars()), b);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) { return a.scaled(a.field().neg(1)); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same(b);
    MultiPoly r(a.ring_);
    r.terms_ = detail::multiply_terms(a.terms_, b.terms_, MonomialOrder::grevlex(), a.field());
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  void require_same(const MultiPoly& other) const {
    if (!(ring_ == other.ring_)) throw ContextMismatch();
  }

private:
  Ring ring_;
  std::vector<Term> terms_;
};

enum class ArithKind { add, sub, mul };

inline MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
  }
  throw std::invalid_argument("unknown arithmetic kind");
}

/// f^(p^i), computed by scaling exponents (coefficients are fixed by
/// Frobenius on F_p). Scaling preserves the term order.
inline MultiPoly frobenius_power(const MultiPoly& f, unsigned i) {
  if (i == 0 || f.is_zero()) return f;
  const std::uint64_t q = prime_power(f.ring().p(), i);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.mono.scaled(q), t.coeff});
  return MultiPoly::from_sorted_terms(f.ring(), std::move(terms));
}

namespace detail {

inline MultiPoly binary_pow(const MultiPoly& f, std::uint64_t n) {
  MultiPoly result = MultiPoly::one(f.ring());
  MultiPoly base = f;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

} // namespace detail

/// f^n through the base-p digits n = sum d_i p^i:
///   f^n = prod_i frobenius_power(f^(d_i), i).
/// For n = p^e - 1 this is the product of Frobenius twists of f^(p-1).
inline MultiPoly poly_pow(const MultiPoly& f, std::uint64_t n) {
  if (n == 0) return MultiPoly::one(f.ring());
  if (f.is_zero()) return f;
  if (f.size() == 1) {
    const auto& t = f.terms()[0];
    return MultiPoly::monomial(f.ring(), t.mono.scaled(n), f.field().pow(t.coeff, n));
  }
  const std::uint64_t p = f.ring().p();
  std::map<std::uint64_t, MultiPoly> digit_powers;
  MultiPoly result = MultiPoly::one(f.ring());
  unsigned i = 0;
  while (n) {
    std::uint64_t d = n % p;
    if (d != 0) {
      auto it = digit_powers.find(d);
      if (it == digit_powers.end()) it = digit_powers.emplace(d, detail::binary_pow(f, d)).first;
      result = result * frobenius_power(it->second, i);
    }
    n /= p;
    ++i;
  }
  return result;
}

/// q with g = q * f when f divides g; leading-term division in grevlex.
inline std::optional<MultiPoly> exact_divide(const MultiPoly& g, const MultiPoly& f) {
  g.require_same(f);
  if (f.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const auto& F = f.field();
  const auto& lt = f.leading_term();
  const Coeff lc_inv = F.inv(lt.coeff);
  std::vector<Term> quotient;
  MultiPoly r = g;
  while (!r.is_zero()) {
    const auto& head = r.leading_term();
    if (!lt.mono.divides(head.mono)) return std::nullopt;
    Monomial m = lt.mono.divide_into(head.mono);
    Coeff c = F.mul(head.coeff, lc_inv);
    quotient.push_back({m, c});
    r.add_scaled(F.neg(c), m, f);
  }
  return MultiPoly::from_sorted_terms(g.ring(), std::move(quotient));
}

inline std::string monomial_to_string(const Monomial& m, const VarContext& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// Canonical text form: descending grevlex, coefficients in [0, p).
inline std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += '+';
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) out += std::to_string(t.coeff) + '*';
      out += monomial_to_string(t.mono, f.ring().vars());
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& f) { return os << to_string(f); }

} // namespace frobpair

#endif // FROBPAIR_POLY_HPP
