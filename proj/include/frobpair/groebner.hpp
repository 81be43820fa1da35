#ifndef FROBPAIR_GROEBNER_HPP
#define FROBPAIR_GROEBNER_HPP

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "pe_roots.hpp"
#include "poly.hpp"

namespace frobpair {

namespace detail {

using TermVec = std::vector<Term>;

// Polynomial combination of the original generators: index -> cofactor.
using GenRep = std::map<std::size_t, MultiPoly>;

inline TermVec to_order(const MultiPoly& f, MonomialOrder order) {
  TermVec t = f.terms();
  if (order.kind != OrderKind::grevlex) sort_descending(t, order);
  return t;
}

inline MultiPoly from_order(const Ring& ring, TermVec terms, MonomialOrder order) {
  if (order.kind == OrderKind::grevlex) return MultiPoly::from_sorted_terms(ring, std::move(terms));
  return MultiPoly::from_terms(ring, std::move(terms));
}

inline TermVec scale_terms(TermVec t, Coeff c, const PrimeField& F) {
  for (auto& x : t) x.coeff = F.mul(x.coeff, c);
  return t;
}

// rep += c * m * other
inline void rep_axpy(GenRep& rep, Coeff c, const Monomial& m, const GenRep& other) {
  for (const auto& [k, poly] : other) {
    auto it = rep.find(k);
    if (it == rep.end()) {
      MultiPoly s = poly.shifted(m, c);
      if (!s.is_zero()) rep.emplace(k, std::move(s));
    } else {
      it->second.add_scaled(c, m, poly);
      if (it->second.is_zero()) rep.erase(it);
    }
  }
}

inline void rep_scale(GenRep& rep, Coeff c) {
  for (auto& [k, poly] : rep) poly = poly.scaled(c);
}

// Reducers are monic, sorted descending in `order`.
struct ReducerSet {
  MonomialOrder order;
  std::vector<const TermVec*> polys;

  std::ptrdiff_t find(const Monomial& m) const {
    for (std::size_t i = 0; i < polys.size(); ++i)
      if ((*polys[i])[0].mono.divides(m)) return static_cast<std::ptrdiff_t>(i);
    return -1;
  }
};

// Full reduction of h. on_step(index, coeff, monomial) is called for every
// subtraction h -= coeff * monomial * reducer[index].
template <class OnStep>
TermVec reduce_terms(TermVec h, const ReducerSet& reducers, const PrimeField& F, OnStep&& on_step) {
  TermVec remainder;
  TermVec rest = std::move(h);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    const Term& lead = rest[pos];
    auto idx = reducers.find(lead.mono);
    if (idx < 0) {
      remainder.push_back(lead);
      ++pos;
      continue;
    }
    const TermVec& g = *reducers.polys[static_cast<std::size_t>(idx)];
    Monomial m = g[0].mono.divide_into(lead.mono);
    Coeff c = lead.coeff;
    on_step(static_cast<std::size_t>(idx), c, m);
    std::span<const Term> tail(rest.data() + pos + 1, rest.size() - pos - 1);
    std::span<const Term> gtail(g.data() + 1, g.size() - 1);
    rest = axpy_terms(tail, F.neg(c), m, gtail, reducers.order, F);
    pos = 0;
  }
  return remainder;
}

struct Pair {
  std::uint64_t degree;
  Monomial lcm;
  std::size_t i, j;
};

class Buchberger {
public:
  Buchberger(Ring ring, MonomialOrder order, bool track) : ring_(std::move(ring)), order_(order), track_(track) {}

  void add_generator(const MultiPoly& f, std::size_t index) {
    GenRep rep;
    if (track_) rep.emplace(index, MultiPoly::one(ring_));
    insert(to_order(f, order_), std::move(rep));
    complete();
  }

  // Minimal, tail-reduced, sorted ascending by leading monomial.
  std::vector<std::pair<TermVec, GenRep>> reduced_basis() {
    const auto& F = ring_.field();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < elems_.size() && !redundant; ++j)
        if (j != i && elems_[j].terms[0].mono.divides(elems_[i].terms[0].mono)) redundant = true;
      if (!redundant) keep.push_back(i);
    }
    std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
      return order_.less(elems_[a].terms[0].mono, elems_[b].terms[0].mono);
    });
    std::vector<std::pair<TermVec, GenRep>> out;
    for (auto i : keep) out.emplace_back(elems_[i].terms, elems_[i].rep);
    for (std::size_t k = 0; k < out.size(); ++k) {
      ReducerSet others{order_, {}};
      std::vector<std::size_t> map;
      for (std::size_t j = 0; j < out.size(); ++j)
        if (j != k) {
          others.polys.push_back(&out[j].first);
          map.push_back(j);
        }
      TermVec head{out[k].first[0]};
      TermVec tail(out[k].first.begin() + 1, out[k].first.end());
      GenRep& rep = out[k].second;
      TermVec reduced = reduce_terms(std::move(tail), others, F, [&](std::size_t idx, Coeff c, const Monomial& m) {
        if (track_) rep_axpy(rep, F.neg(c), m, out[map[idx]].second);
      });
      head.insert(head.end(), reduced.begin(), reduced.end());
      out[k].first = std::move(head);
    }
    return out;
  }

private:
  struct Element {
    TermVec terms;
    GenRep rep;
    bool active = true;
  };

  struct PairLess {
    MonomialOrder order;
    bool operator()(const Pair& a, const Pair& b) const noexcept {
      if (a.degree != b.degree) return a.degree < b.degree;
      int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  ReducerSet reducers() const {
    ReducerSet rs{order_, {}};
    rs.polys.reserve(elems_.size());
    for (const auto& e : elems_) rs.polys.push_back(&e.terms);
    return rs;
  }

  void insert(TermVec h, GenRep rep) {
    const auto& F = ring_.field();
    ReducerSet rs = reducers();
    h = reduce_terms(std::move(h), rs, F, [&](std::size_t idx, Coeff c, const Monomial& m) {
      if (track_) rep_axpy(rep, F.neg(c), m, elems_[idx].rep);
    });
    if (h.empty()) return;
    Coeff inv = F.inv(h[0].coeff);
    h = scale_terms(std::move(h), inv, F);
    if (track_) rep_scale(rep, inv);
    elems_.push_back({std::move(h), std::move(rep), true});
    update(elems_.size() - 1);
  }

  void complete() {
    const auto& F = ring_.field();
    while (!pairs_.empty()) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      const Element& a = elems_[pr.i];
      const Element& b = elems_[pr.j];
      Monomial ma = a.terms[0].mono.divide_into(pr.lcm);
      Monomial mb = b.terms[0].mono.divide_into(pr.lcm);
      std::span<const Term> ta(a.terms.data() + 1, a.terms.size() - 1);
      std::span<const Term> tb(b.terms.data() + 1, b.terms.size() - 1);
      TermVec s = axpy_terms(axpy_terms({}, 1, ma, ta, order_, F), F.neg(1), mb, tb, order_, F);
      GenRep rep;
      if (track_) {
        rep_axpy(rep, 1, ma, a.rep);
        rep_axpy(rep, F.neg(1), mb, b.rep);
      }
      insert(std::move(s), std::move(rep));
    }
  }

  // Gebauer-Moeller pair update for the new element t.
  void update(std::size_t t) {
    const Monomial& h = elems_[t].terms[0].mono;
    struct Cand {
      std::size_t j;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    for (std::size_t j = 0; j < t; ++j) {
      if (!elems_[j].active) continue;
      const Monomial& lj = elems_[j].terms[0].mono;
      C.push_back({j, lcm(lj, h), lj.coprime(h)});
    }
    std::vector<Cand> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const Cand& c = C[k];
      bool keep = c.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t r = k + 1; r < C.size() && keep; ++r)
          if (C[r].lcm.divides(c.lcm)) keep = false;
        for (std::size_t r = 0; r < D.size() && keep; ++r)
          if (D[r].lcm.divides(c.lcm)) keep = false;
      }
      if (keep) D.push_back(c);
    }
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& li = elems_[it->i].terms[0].mono;
      const Monomial& lj = elems_[it->j].terms[0].mono;
      if (h.divides(it->lcm) && !(lcm(li, h) == it->lcm) && !(lcm(lj, h) == it->lcm))
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (auto& c : D)
      if (!c.coprime) pairs_.insert({c.lcm.degree(), c.lcm, c.j, t});
    for (std::size_t j = 0; j < t; ++j)
      if (elems_[j].active && h.divides(elems_[j].terms[0].mono)) elems_[j].active = false;
  }

  Ring ring_;
  MonomialOrder order_;
  bool track_;
  std::vector<Element> elems_;
  std::set<Pair, PairLess> pairs_{PairLess{order_}};
};

} // namespace detail

/// Reduced Groebner basis: monic, interreduced, sorted ascending by
/// leading monomial in `order`.
class GroebnerBasis {
public:
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<MultiPoly> elements)
      : ring_(std::move(ring)), order_(order), elements_(std::move(elements)) {
    ordered_.reserve(elements_.size());
    for (const auto& e : elements_) ordered_.push_back(detail::to_order(e, order_));
  }

  const Ring& ring() const noexcept { return ring_; }
  MonomialOrder order() const noexcept { return order_; }
  const std::vector<MultiPoly>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_unit() const noexcept { return elements_.size() == 1 && elements_[0].is_constant(); }

  // Basis element i's terms in descending `order`.
  const detail::TermVec& ordered_terms(std::size_t i) const { return ordered_[i]; }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_ == b.order_ && a.elements_ == b.elements_;
  }

private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<MultiPoly> elements_;
  std::vector<detail::TermVec> ordered_;
};

/// f = sum cofactors[i] * basis[i] + remainder.
struct MembershipResult {
  bool member = false;
  std::vector<MultiPoly> cofactors;
  MultiPoly remainder;
};

/// A Groebner basis together with each element written in terms of the
/// generators it was computed from: basis[i] = sum_k transform[i][k].second * gens[transform[i][k].first].
struct LiftedBasis {
  GroebnerBasis basis;
  std::vector<std::vector<std::pair<std::size_t, MultiPoly>>> transform;
};

namespace detail {

inline LiftedBasis run_buchberger(const IdealGens& gens, MonomialOrder order, bool track) {
  const Ring& ring = gens.ring();
  Buchberger bb(ring, order, track);
  std::vector<std::size_t> idx(gens.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const auto& g = gens.generators();
  std::vector<Monomial> leads;
  leads.reserve(g.size());
  for (const auto& p : g) leads.push_back(to_order(p, order)[0].mono);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& la = leads[a];
    const auto& lb = leads[b];
    if (la.degree() != lb.degree()) return la.degree() < lb.degree();
    return order.less(la, lb);
  });
  for (auto i : idx) bb.add_generator(g[i], i);
  auto red = bb.reduced_basis();
  std::vector<MultiPoly> elems;
  std::vector<std::vector<std::pair<std::size_t, MultiPoly>>> transform;
  for (auto& [terms, rep] : red) {
    elems.push_back(from_order(ring, std::move(terms), order));
    transform.emplace_back(rep.begin(), rep.end());
  }
  return {GroebnerBasis(ring, order, std::move(elems)), std::move(transform)};
}

} // namespace detail

inline GroebnerBasis groebner_basis(const IdealGens& gens, MonomialOrder order = MonomialOrder::grevlex()) {
  return detail::run_buchberger(gens, order, false).basis;
}

// Same basis as groebner_basis, plus cofactors over the input generators.
inline LiftedBasis groebner_basis_lifted(const IdealGens& gens, MonomialOrder order = MonomialOrder::grevlex()) {
  return detail::run_buchberger(gens, order, true);
}

inline MembershipResult normal_form(const MultiPoly& f, const GroebnerBasis& B) {
  if (!(f.ring() == B.ring())) throw ContextMismatch();
  const auto& F = f.field();
  const auto order = B.order();
  detail::ReducerSet rs{order, {}};
  for (std::size_t i = 0; i < B.size(); ++i) rs.polys.push_back(&B.ordered_terms(i));
  std::vector<detail::TermVec> quotients(B.size());
  auto rem = detail::reduce_terms(detail::to_order(f, order), rs, F, [&](std::size_t idx, Coeff c, const Monomial& m) {
    quotients[idx].push_back({m, c});
  });
  MembershipResult out{rem.empty(), {}, detail::from_order(f.ring(), std::move(rem), order)};
  out.cofactors.reserve(B.size());
  for (auto& q : quotients) out.cofactors.push_back(detail::from_order(f.ring(), std::move(q), order));
  return out;
}

inline bool reduces_to_zero(const MultiPoly& f, const GroebnerBasis& B) {
  if (!(f.ring() == B.ring())) throw ContextMismatch();
  detail::ReducerSet rs{B.order(), {}};
  for (std::size_t i = 0; i < B.size(); ++i) rs.polys.push_back(&B.ordered_terms(i));
  // Top reduction suffices for a zero test.
  detail::TermVec rest = detail::to_order(f, B.order());
  const auto& F = f.field();
  while (!rest.empty()) {
    auto idx = rs.find(rest[0].mono);
    if (idx < 0) return false;
    const auto& g = *rs.polys[static_cast<std::size_t>(idx)];
    Monomial m = g[0].mono.divide_into(rest[0].mono);
    std::span<const Term> tail(rest.data() + 1, rest.size() - 1);
    std::span<const Term> gtail(g.data() + 1, g.size() - 1);
    rest = detail::axpy_terms(tail, F.neg(rest[0].coeff), m, gtail, B.order(), F);
  }
  return true;
}

/// I subset of J: every generator of I reduces to zero modulo GB(J).
inline bool ideal_contains(const IdealGens& I, const GroebnerBasis& J) {
  if (!(I.ring() == J.ring())) throw ContextMismatch();
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const MultiPoly& g) { return reduces_to_zero(g, J); });
}

inline bool ideal_contains(const IdealGens& I, const IdealGens& J, MonomialOrder order = MonomialOrder::grevlex()) {
  if (!(I.ring() == J.ring())) throw ContextMismatch();
  return ideal_contains(I, groebner_basis(J, order));
}

inline bool ideal_equal(const IdealGens& I, const IdealGens& J, MonomialOrder order = MonomialOrder::grevlex()) {
  if (!(I.ring() == J.ring())) throw ContextMismatch();
  return groebner_basis(I, order) == groebner_basis(J, order);
}

} // namespace frobpair

#endif // FROBPAIR_GROEBNER_HPP
