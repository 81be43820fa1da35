#ifndef FROBPAIR_OPERATORS_HPP
#define FROBPAIR_OPERATORS_HPP

#include <variant>
#include <vector>

#include "lucas.hpp"
#include "poly.hpp"

namespace frobpair {

/// D_{x_i,t}: x_i^s -> binom(s, t) x_i^(s - t), zero when s < t.
struct DividedPower {
  std::size_t var;
  std::uint64_t order;
};

struct MultiplyBy {
  MultiPoly factor;
};

using OperatorAtom = std::variant<DividedPower, MultiplyBy>;

/// A composition of atoms; the last atom acts first.
struct OperatorWord {
  std::vector<OperatorAtom> atoms;
};

inline MultiPoly divided_power_apply(std::size_t var, std::uint64_t order, const MultiPoly& f) {
  if (var >= f.ring().nvars()) throw std::out_of_range("divided power variable index out of range");
  if (order == 0) return f;
  const auto& F = f.field();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    const std::uint64_t s = t.mono[var];
    if (s < order) continue;
    Coeff b = binomial_mod_p(F, s, order);
    if (b == 0) continue;
    Monomial m = t.mono;
    m[var] = static_cast<Exponent>(s - order);
    out.push_back({std::move(m), F.mul(b, t.coeff)});
  }
  return MultiPoly::from_terms(f.ring(), std::move(out));
}

inline MultiPoly operator_word_apply(const OperatorWord& word, const MultiPoly& f) {
  MultiPoly r = f;
  for (auto it = word.atoms.rbegin(); it != word.atoms.rend(); ++it) {
    if (const auto* d = std::get_if<DividedPower>(&*it)) {
      r = divided_power_apply(d->var, d->order, r);
    } else {
      const auto& m = std::get<MultiplyBy>(*it).factor;
      r = m * r;
    }
  }
  return r;
}

} // namespace frobpair

#endif // FROBPAIR_OPERATORS_HPP
