// Generic initial ideals by random coordinate change with multi-trial
// certification, Borel-fixedness, and hyperplane sections.
#pragma once

#include <stdexcept>
#include <vector>

#include "betti/betti_table.hpp"
#include "betti/groebner.hpp"
#include "betti/rng.hpp"

namespace betti {

struct genericity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
struct CoordinateChange {
  std::vector<std::vector<typename F::Elem>> matrix;  // n x n
  std::uint64_t seed = 0;
  int entry_bound = 100;
};

struct GinCertificate {
  int trials = 0;
  bool borel_fixed = false;
  bool all_trials_agree = false;
  int entry_bound = 0;

  bool certified() const { return borel_fixed && all_trials_agree && trials >= 2; }
};

template <class F>
bool is_invertible(const F& field, std::vector<std::vector<typename F::Elem>> m) {
  const int n = static_cast<int>(m.size());
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!field.is_zero(m[r][c])) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(m[c], m[pivot]);
    for (int r = c + 1; r < n; ++r) {
      if (field.is_zero(m[r][c])) continue;
      auto f = field.div(m[r][c], m[c][c]);
      for (int cc = c; cc < n; ++cc)
        m[r][cc] = field.sub(m[r][cc], field.mul(f, m[c][cc]));
    }
  }
  return true;
}

// Linear substitution x_j -> sum_i g_{ij} x_i applied to every generator.
template <class F>
Ideal<F> apply_change(const Ideal<F>& I, const CoordinateChange<F>& g) {
  const F& field = I.field();
  const int n = I.nvars();
  if (static_cast<int>(g.matrix.size()) != n)
    throw std::invalid_argument("matrix size mismatch");
  if (!is_invertible(field, g.matrix)) throw std::invalid_argument("singular matrix");

  std::vector<Polynomial<F>> images;
  for (int j = 0; j < n; ++j) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (int i = 0; i < n; ++i)
      if (!field.is_zero(g.matrix[i][j]))
        terms.push_back({Monomial::variable(n, i), g.matrix[i][j]});
    images.push_back(Polynomial<F>::from_terms(field, n, std::move(terms)));
  }

  // powers of each image, grown on demand
  std::vector<std::vector<Polynomial<F>>> powers(n);
  for (int j = 0; j < n; ++j)
    powers[j].push_back(Polynomial<F>::constant(field, n, field.one()));
  auto image_power = [&](int j, int e) -> const Polynomial<F>& {
    while (static_cast<int>(powers[j].size()) <= e)
      powers[j].push_back(powers[j].back() * images[j]);
    return powers[j][e];
  };

  std::vector<Polynomial<F>> out;
  for (const auto& f : I.generators()) {
    Polynomial<F> acc = Polynomial<F>::zero(field, n);
    for (const auto& t : f.terms()) {
      Polynomial<F> prod = Polynomial<F>::constant(field, n, t.c);
      for (int j = 0; j < n; ++j)
        if (t.m.exp(j) > 0) prod = prod * image_power(j, t.m.exp(j));
      acc = acc + prod;
    }
    if (!acc.is_zero()) out.push_back(std::move(acc));
  }
  return Ideal<F>(field, n, std::move(out));
}

template <class F>
CoordinateChange<F> random_change(const F& field, int nvars, std::uint64_t seed,
                                  std::uint64_t trial, int entry_bound) {
  CounterRng rng{seed, trial, static_cast<std::uint64_t>(entry_bound)};
  CoordinateChange<F> g;
  g.seed = seed;
  g.entry_bound = entry_bound;
  do {
    g.matrix.assign(nvars, std::vector<typename F::Elem>(nvars, field.zero()));
    for (int i = 0; i < nvars; ++i)
      for (int j = 0; j < nvars; ++j)
        g.matrix[i][j] =
            field.from_int(rng.uniform_int(-entry_bound, entry_bound));
  } while (!is_invertible(field, g.matrix));
  return g;
}

// gin_tau(I): initial ideal after `trials` independent random coordinate
// changes; all trials must agree.  On disagreement the entry bound is doubled
// once before giving up.
template <class F>
std::pair<MonomialIdeal, GinCertificate> gin(const Ideal<F>& I, TermOrder order,
                                             int trials, std::uint64_t seed,
                                             int entry_bound = 100) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  for (int attempt = 0; attempt < 2; ++attempt) {
    const int bound = entry_bound << attempt;
    std::vector<MonomialIdeal> results;
    for (int t = 0; t < trials; ++t) {
      auto g = random_change(I.field(), I.nvars(), seed, static_cast<std::uint64_t>(t),
                             bound);
      results.push_back(initial_ideal(apply_change(I, g), order));
    }
    bool agree = true;
    for (const auto& r : results)
      if (r != results.front()) agree = false;
    if (agree) {
      GinCertificate cert{trials, is_borel_fixed(results.front()), true, bound};
      return {results.front(), cert};
    }
  }
  throw genericity_error("gin trials disagree; raise trials or entry bound");
}

// phi(I) for h with nonzero last coefficient: x_n -> -(1/h_n) sum_{j<n} h_j x_j,
// landing in K[x_1..x_{n-1}].
template <class F>
Ideal<F> hyperplane_section(const Ideal<F>& I, const Polynomial<F>& h) {
  const F& field = I.field();
  const int n = I.nvars();
  if (h.nvars() != n || h.degree() != 1 || !h.is_homogeneous())
    throw std::invalid_argument("h must be a linear form");
  typename F::Elem hn = field.zero();
  std::vector<typename F::Elem> hcoef(n, field.zero());
  for (const auto& t : h.terms()) hcoef[t.m.max_index() - 1] = t.c;
  hn = hcoef[n - 1];
  if (field.is_zero(hn))
    throw std::invalid_argument("coefficient of the last variable must be nonzero");

  // image of x_n in the smaller ring
  std::vector<typename Polynomial<F>::Term> sub_terms;
  for (int j = 0; j < n - 1; ++j)
    if (!field.is_zero(hcoef[j]))
      sub_terms.push_back({Monomial::variable(n - 1, j),
                           field.neg(field.div(hcoef[j], hn))});
  Polynomial<F> xn_image =
      Polynomial<F>::from_terms(field, n - 1, std::move(sub_terms));

  std::vector<Polynomial<F>> pow_cache{
      Polynomial<F>::constant(field, n - 1, field.one())};
  auto xn_power = [&](int e) -> const Polynomial<F>& {
    while (static_cast<int>(pow_cache.size()) <= e)
      pow_cache.push_back(pow_cache.back() * xn_image);
    return pow_cache[e];
  };

  std::vector<Polynomial<F>> out;
  for (const auto& f : I.generators()) {
    Polynomial<F> acc = Polynomial<F>::zero(field, n - 1);
    for (const auto& t : f.terms()) {
      std::vector<int> e(t.m.exps().begin(), t.m.exps().end() - 1);
      Polynomial<F> base = Polynomial<F>::monomial(field, Monomial(std::move(e)), t.c);
      acc = acc + base * xn_power(t.m.exp(n - 1));
    }
    if (!acc.is_zero()) out.push_back(std::move(acc));
  }
  return Ideal<F>(field, n - 1, std::move(out));
}

// M |_{x_n -> 0}: generators divisible by x_n are dropped, the rest
// reinterpreted in n-1 variables.
inline MonomialIdeal restrict_last_variable(const MonomialIdeal& M) {
  const int n = M.nvars();
  if (n == 0) throw std::invalid_argument("no variable to restrict");
  std::vector<Monomial> gens;
  for (const auto& g : M.generators()) {
    if (g.exp(n - 1) > 0) continue;
    std::vector<int> e(g.exps().begin(), g.exps().end() - 1);
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(n - 1, std::move(gens));
}

}  // namespace betti
