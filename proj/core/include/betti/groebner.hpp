// Division algorithm, Buchberger's algorithm with the coprime and chain
// criteria, reduced bases, initial ideals, ideal powers, and monomial-ideal
// Krull dimension.
#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "betti/ideal.hpp"
#include "betti/polynomial.hpp"

namespace betti {

template <class F>
struct GroebnerBasis {
  TermOrder order = TermOrder::GrevLex;
  std::vector<Polynomial<F>> elements;  // monic, sorted ascending by lead term
  bool reduced = false;
};

// Remainder of f on division by G: no term of the result is divisible by a
// lead term of G.  Divisors are tried in stored order, lead term first.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G) {
  const F& field = f.field();
  Polynomial<F> r = f.order() == G.order ? f : f.with_order(G.order);
  std::vector<typename Polynomial<F>::Term> remainder;
  while (!r.is_zero()) {
    const auto& lt = r.lead();
    const Polynomial<F>* divisor = nullptr;
    for (const auto& g : G.elements) {
      if (g.lead_monomial().divides(lt.m)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      // divisor is monic
      r.sub_mul(lt.c, lt.m / divisor->lead_monomial(), *divisor);
    } else {
      remainder.push_back(lt);
      r.drop_lead();
    }
  }
  return Polynomial<F>::from_terms(field, f.nvars(), std::move(remainder), G.order);
}

namespace detail {

template <class F>
void interreduce(GroebnerBasis<F>& G) {
  // keep only elements whose lead term is not divisible by another's
  std::vector<Polynomial<F>>& els = G.elements;
  std::vector<Polynomial<F>> minimal;
  for (std::size_t i = 0; i < els.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < els.size() && keep; ++j) {
      if (i == j) continue;
      const Monomial& a = els[i].lead_monomial();
      const Monomial& b = els[j].lead_monomial();
      if (b.divides(a) && (a != b || j < i)) keep = false;
    }
    if (keep) minimal.push_back(els[i]);
  }
  // tail-reduce each against the rest until fixpoint (one pass suffices as
  // lead terms are now pairwise indivisible)
  GroebnerBasis<F> tmp{G.order, minimal, false};
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    GroebnerBasis<F> others{G.order, {}, false};
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.elements.push_back(minimal[j]);
    out.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return mono_cmp(a.lead_monomial(), b.lead_monomial(), G.order) < 0;
  });
  G.elements = std::move(out);
  G.reduced = true;
}

}  // namespace detail

// Reduced Groebner basis via Buchberger with normal (minimal lcm degree
// first) pair selection.
template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& I, TermOrder order) {
  const F& field = I.field();
  GroebnerBasis<F> G{order, {}, false};
  for (const auto& g : I.generators())
    if (!g.is_zero()) G.elements.push_back(g.with_order(order).monic());
  if (G.elements.empty()) throw std::invalid_argument("ideal has no nonzero generators");

  auto& els = G.elements;
  using Pair = std::pair<int, int>;
  // pending pairs keyed by (lcm degree, i, j)
  std::set<std::tuple<int, int, int>> queue;
  std::set<Pair> pending;
  auto push_pair = [&](int i, int j) {
    Monomial l = els[i].lead_monomial().lcm(els[j].lead_monomial());
    queue.insert({l.deg(), i, j});
    pending.insert({i, j});
  };
  for (std::size_t j = 1; j < els.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(static_cast<int>(i), static_cast<int>(j));

  while (!queue.empty()) {
    auto [ldeg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    const Monomial& lti = els[i].lead_monomial();
    const Monomial& ltj = els[j].lead_monomial();
    if (lti.coprime(ltj)) continue;  // Buchberger's first criterion
    Monomial l = lti.lcm(ltj);
    // chain criterion: some k with LT(k) | lcm and both mixed pairs done
    bool skip = false;
    for (int k = 0; k < static_cast<int>(els.size()) && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!els[k].lead_monomial().divides(l)) continue;
      Pair ik{std::min(i, k), std::max(i, k)};
      Pair jk{std::min(j, k), std::max(j, k)};
      if (!pending.count(ik) && !pending.count(jk)) skip = true;
    }
    if (skip) continue;

    Polynomial<F> s = els[i].mono_multiple(l / lti, field.one());
    s.sub_mul(field.one(), l / ltj, els[j]);
    Polynomial<F> h = normal_form(s, G);
    if (!h.is_zero()) {
      els.push_back(h.monic());
      int t = static_cast<int>(els.size()) - 1;
      for (int k = 0; k < t; ++k) push_pair(k, t);
    }
  }

  detail::interreduce(G);
  return G;
}

template <class F>
MonomialIdeal initial_ideal(const GroebnerBasis<F>& G, int nvars) {
  std::vector<Monomial> lts;
  lts.reserve(G.elements.size());
  for (const auto& g : G.elements) lts.push_back(g.lead_monomial());
  return MonomialIdeal(nvars, std::move(lts));
}

template <class F>
MonomialIdeal initial_ideal(const Ideal<F>& I, TermOrder order) {
  return initial_ideal(buchberger(I, order), I.nvars());
}

// I^k generated by all degree-k products of the base generators.
template <class F>
Ideal<F> ideal_power(const Ideal<F>& I, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  if (k == 0)
    return Ideal<F>(I.field(), I.nvars(),
                    {Polynomial<F>::constant(I.field(), I.nvars(), I.field().one())});
  const auto& gens = I.generators();
  const int m = static_cast<int>(gens.size());
  std::vector<Polynomial<F>> products;
  std::vector<int> idx(k, 0);
  // multisets 0 <= idx[0] <= ... <= idx[k-1] < m
  while (true) {
    Polynomial<F> p = gens[idx[0]];
    for (int t = 1; t < k; ++t) p = p * gens[idx[t]];
    bool dup = false;
    for (const auto& q : products)
      if (q == p) {
        dup = true;
        break;
      }
    if (!dup && !p.is_zero()) products.push_back(std::move(p));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == m - 1) --pos;
    if (pos < 0) break;
    int v = idx[pos] + 1;
    for (int t = pos; t < k; ++t) idx[t] = v;
  }
  return Ideal<F>(I.field(), I.nvars(), std::move(products));
}

// dim(S/M) = n - size of the smallest variable subset meeting the support of
// every minimal generator (exhaustive; n is small).
inline int krull_dim(const MonomialIdeal& M) {
  if (M.is_unit()) throw std::domain_error("unit ideal has no quotient dimension");
  const int n = M.nvars();
  if (M.is_zero()) return n;
  std::vector<unsigned> supports;
  for (const auto& g : M.generators()) {
    unsigned s = 0;
    for (int i = 0; i < n; ++i)
      if (g.exp(i) > 0) s |= 1u << i;
    supports.push_back(s);
  }
  for (int size = 0; size <= n; ++size) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      bool covers = true;
      for (unsigned s : supports)
        if ((s & mask) == 0) {
          covers = false;
          break;
        }
      if (covers) return n - size;
    }
  }
  return 0;  // unreachable
}

// I ∩ K[kept variables].  Requires the dropped variables to precede the kept
// ones so that plain lex is an elimination order for them.
template <class F>
Ideal<F> elimination_ideal(const Ideal<F>& I, const std::vector<bool>& keep) {
  const int n = I.nvars();
  if (static_cast<int>(keep.size()) != n)
    throw std::invalid_argument("keep mask size mismatch");
  bool seen_kept = false;
  for (int i = 0; i < n; ++i) {
    if (keep[i]) seen_kept = true;
    else if (seen_kept)
      throw std::invalid_argument("dropped variables must precede kept ones");
  }
  std::vector<int> kept;
  for (int i = 0; i < n; ++i)
    if (keep[i]) kept.push_back(i);

  GroebnerBasis<F> G = buchberger(I, TermOrder::Lex);
  std::vector<Polynomial<F>> out;
  for (const auto& g : G.elements) {
    bool inside = true;
    for (const auto& t : g.terms())
      for (int i = 0; i < n && inside; ++i)
        if (!keep[i] && t.m.exp(i) > 0) inside = false;
    if (!inside) continue;
    std::vector<typename Polynomial<F>::Term> terms;
    for (const auto& t : g.terms()) {
      std::vector<int> e(kept.size());
      for (std::size_t s = 0; s < kept.size(); ++s) e[s] = t.m.exp(kept[s]);
      terms.push_back({Monomial(std::move(e)), t.c});
    }
    out.push_back(Polynomial<F>::from_terms(I.field(), static_cast<int>(kept.size()),
                                            std::move(terms), TermOrder::Lex));
  }
  return Ideal<F>::unchecked(I.field(), static_cast<int>(kept.size()), std::move(out));
}

}  // namespace betti
