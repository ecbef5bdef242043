// Series driver over a k-range: shape stabilization, entry fitting, window
// checks, and the analytic-spread degree bound.
#pragma once

#include <future>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "betti/betti_table.hpp"
#include "betti/fit.hpp"
#include "betti/gin.hpp"
#include "betti/koszul.hpp"

namespace betti {

enum class Transform { Power, InitialOfPower, GinOfPower };

inline const char* transform_name(Transform t) {
  switch (t) {
    case Transform::Power: return "power";
    case Transform::InitialOfPower: return "initial";
    default: return "gin";
  }
}

struct SeriesOptions {
  Transform transform = Transform::Power;
  TermOrder order = TermOrder::GrevLex;
  int k_min = 1;
  int k_max = 1;
  int trials = 3;             // gin transform
  std::uint64_t seed = 0;
  int entry_bound = 100;
  int min_window = 3;         // trailing window for stabilization / fits
  int jobs = 1;
  bool compute_spread = true;
};

struct StabilizationVerdict {
  bool stabilized = false;
  std::optional<int> k0;
  int window = 0;  // length of the constant trailing window
};

struct SeriesReport {
  std::map<int, BettiTable> tables;
  int r = 0;  // generation degree used for row translation
  StabilizationVerdict stabilization;
  std::map<std::pair<int, int>, FitResult> fits;  // (column i, row offset)
  std::map<int, bool> window_ok;
  int window_c = -1;
  std::optional<int> spread;
  std::map<int, GinCertificate> certificates;
  std::map<int, std::string> failures;
};

// Def-1.1-style verdict: translated support patterns over the computed range;
// k0 is the least k from which all later patterns agree, and "stabilized"
// additionally requires a constant trailing window of >= 3 values.
inline StabilizationVerdict detect_stabilization(const std::map<int, BettiTable>& tables,
                                                 int r) {
  StabilizationVerdict v;
  if (tables.size() < 2) return v;
  std::map<int, std::set<std::pair<int, int>>> patterns;
  for (const auto& [k, T] : tables) patterns[k] = T.shape_shifted(r * k);
  const auto& last = patterns.rbegin()->second;
  const int k_max = patterns.rbegin()->first;
  int k0 = k_max;
  for (auto it = patterns.rbegin(); it != patterns.rend(); ++it) {
    if (it->second != last) break;
    k0 = it->first;
  }
  v.window = k_max - k0 + 1;
  v.stabilized = v.window >= 3;
  if (v.stabilized) v.k0 = k0;
  return v;
}

// Per-entry eventual fits; entries indexed by (column i, row offset row - rk).
inline std::map<std::pair<int, int>, FitResult> fit_entries(
    const std::map<int, BettiTable>& tables, int r, int min_window) {
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, T] : tables)
    for (auto [i, off] : T.shape_shifted(r * k)) keys.insert({i, off});
  std::map<std::pair<int, int>, FitResult> fits;
  for (auto [i, off] : keys) {
    std::map<long, long long> seq;
    for (const auto& [k, T] : tables) seq[k] = T.get(i, r * k + i + off);
    fits[{i, off}] = fit_sequence(seq, min_window);
  }
  return fits;
}

// Window lemma instance: nonzero entries confined to rows [rk, rk+c] and
// columns <= n-1.
inline bool check_window(const BettiTable& T, int k, int r, int c, int n) {
  for (const auto& [key, v] : T.entries()) {
    const int i = key.first;
    const int row = key.second - key.first;
    if (i > n - 1 || row < r * k || row > r * k + c) return false;
  }
  return true;
}

// Analytic spread: Krull dimension of the fiber cone K[t]/ker(t_i -> g_i),
// read off the initial ideal of the kernel after eliminating the x variables.
template <class F>
int analytic_spread(const Ideal<F>& I) {
  if (!I.is_equigenerated())
    throw std::invalid_argument("analytic spread requires an equigenerated ideal");
  const F& field = I.field();
  const int n = I.nvars();
  const int m = static_cast<int>(I.generators().size());
  const int N = n + m;  // x variables first (eliminated), then t variables

  std::vector<Polynomial<F>> gens;
  for (int i = 0; i < m; ++i) {
    std::vector<typename Polynomial<F>::Term> terms;
    terms.push_back({Monomial::variable(N, n + i), field.one()});
    for (const auto& t : I.generators()[i].terms()) {
      std::vector<int> e(N, 0);
      for (int v = 0; v < n; ++v) e[v] = t.m.exp(v);
      terms.push_back({Monomial(std::move(e)), field.neg(t.c)});
    }
    gens.push_back(Polynomial<F>::from_terms(field, N, std::move(terms), TermOrder::Lex));
  }
  Ideal<F> J = Ideal<F>::unchecked(field, N, std::move(gens));
  std::vector<bool> keep(N, false);
  for (int i = n; i < N; ++i) keep[i] = true;
  Ideal<F> kernel = elimination_ideal(J, keep);

  std::vector<Monomial> lts;
  for (const auto& g : kernel.generators())
    if (!g.is_zero()) lts.push_back(g.with_order(TermOrder::Lex).lead_monomial());
  return krull_dim(MonomialIdeal(m, std::move(lts)));
}

// Theorem check: every eventual polynomial for an eventually-nonzero entry has
// positive leading coefficient and degree < spread.
inline bool verify_degree_bounds(const std::map<std::pair<int, int>, FitResult>& fits,
                                 int spread) {
  for (const auto& [key, fit] : fits) {
    if (!fit.is_poly()) continue;
    int d = poly_degree(fit.poly);
    if (d < 0) continue;  // eventually zero
    if (d >= spread) return false;
    if (fit.poly[d] <= 0) return false;
  }
  return true;
}

inline bool compare_stabilization_indices(const SeriesReport& power,
                                          const SeriesReport& gin_series) {
  if (!power.stabilization.stabilized || !gin_series.stabilization.stabilized)
    throw std::invalid_argument("both systems must be stabilized within range");
  return *gin_series.stabilization.k0 <= *power.stabilization.k0;
}

namespace detail {

template <class F>
std::uint64_t k_seed(std::uint64_t seed, int k) {
  return CounterRng{seed, static_cast<std::uint64_t>(k)}.next();
}

template <class F>
struct KResult {
  BettiTable table;
  std::optional<GinCertificate> cert;
};

template <class F>
KResult<F> compute_k(const Ideal<F>& base, int k, const SeriesOptions& opt) {
  Ideal<F> Ik = ideal_power(base, k);
  KResult<F> out;
  switch (opt.transform) {
    case Transform::Power:
      out.table = koszul_betti_full(Ik, TermOrder::GrevLex);
      break;
    case Transform::InitialOfPower:
      out.table = monomial_betti(initial_ideal(Ik, opt.order));
      break;
    case Transform::GinOfPower: {
      auto [M, cert] = gin(Ik, opt.order, opt.trials, k_seed<F>(opt.seed, k),
                           opt.entry_bound);
      out.cert = cert;
      out.table = cert.borel_fixed ? ek_betti(M) : monomial_betti(M);
      break;
    }
  }
  return out;
}

}  // namespace detail

// Stabilization, fits, window checks, and the spread, given filled-in tables.
template <class F>
void finalize_series(SeriesReport& rep, const Ideal<F>& base, const SeriesOptions& opt) {
  if (rep.r > 0 && !rep.tables.empty()) {
    rep.stabilization = detect_stabilization(rep.tables, rep.r);
    rep.fits = fit_entries(rep.tables, rep.r, opt.min_window);
    const auto& lastT = rep.tables.rbegin()->second;
    if (!lastT.empty()) {
      rep.window_c = lastT.regularity() - rep.r * rep.tables.rbegin()->first;
      for (const auto& [k, T] : rep.tables)
        rep.window_ok[k] = check_window(T, k, rep.r, rep.window_c, base.nvars());
    }
    if (opt.compute_spread) {
      try {
        rep.spread = analytic_spread(base);
      } catch (const std::exception&) {
        rep.spread.reset();
      }
    }
  }
}

template <class F>
SeriesReport compute_series(const Ideal<F>& base, const SeriesOptions& opt) {
  if (opt.k_min < 1 || opt.k_max < opt.k_min) throw std::invalid_argument("bad k range");
  SeriesReport rep;
  rep.r = base.is_equigenerated() ? base.generation_degree() : -1;

  // fan out per-k jobs, at most opt.jobs at a time; merge in k order
  const int jobs = std::max(1, opt.jobs);
  for (int k0 = opt.k_min; k0 <= opt.k_max; k0 += jobs) {
    std::vector<std::pair<int, std::future<detail::KResult<F>>>> batch;
    for (int k = k0; k < std::min(opt.k_max + 1, k0 + jobs); ++k)
      batch.emplace_back(k, std::async(jobs > 1 ? std::launch::async
                                                : std::launch::deferred,
                                       [&base, k, &opt] {
                                         return detail::compute_k(base, k, opt);
                                       }));
    for (auto& [k, fut] : batch) {
      try {
        auto res = fut.get();
        rep.tables[k] = std::move(res.table);
        if (res.cert) rep.certificates[k] = *res.cert;
      } catch (const std::exception& e) {
        rep.failures[k] = e.what();
      }
    }
  }

  finalize_series(rep, base, opt);
  return rep;
}

}  // namespace betti
