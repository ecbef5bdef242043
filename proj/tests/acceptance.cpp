// Acceptance gate: twelve end-to-end checks against the hand-verified tables
// and closed forms for the reference ideal I = (x^2y + z^3, xyz, yz^2).
// Prints one PASS/FAIL line per criterion; exits nonzero if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "betti/asymptotics.hpp"
#include "betti/boij_soderberg.hpp"
#include "betti/koszul.hpp"
#include "betti/parse.hpp"
#include "betti/rng.hpp"
#include "fixtures.hpp"

using namespace betti;

namespace {

std::ostringstream note;  // per-criterion diagnostics, shown on FAIL

bool expect(bool ok, const std::string& what) {
  if (!ok) note << "  failed: " << what << "\n";
  return ok;
}

template <class T>
bool expect_eq(const T& got, const T& want, const std::string& what) {
  if (got == want) return true;
  note << "  failed: " << what << "\n";
  return false;
}

// ---- shared computed series -------------------------------------------------

const std::map<int, BettiTable>& computed_power_tables() {
  static const auto tables = [] {
    std::map<int, BettiTable> t;
    auto I = fixtures::reference_ideal();
    for (int k = 1; k <= 6; ++k) t[k] = koszul_betti_full(ideal_power(I, k));
    return t;
  }();
  return tables;
}

std::map<int, BettiTable> gin_series_tables(std::uint64_t seed, TermOrder order,
                                            int kmax, bool* certified = nullptr) {
  PrimeField F(32003);
  auto I = to_prime_field(fixtures::reference_ideal(), F);
  std::map<int, BettiTable> t;
  if (certified) *certified = true;
  for (int k = 1; k <= kmax; ++k) {
    auto [M, cert] = gin(ideal_power(I, k), order, 3, detail::k_seed<PrimeField>(seed, k));
    if (certified) *certified = *certified && cert.certified();
    t[k] = ek_betti(M);
  }
  return t;
}

const std::map<int, BettiTable>& computed_gin_tables() {
  static const auto tables = gin_series_tables(0, TermOrder::GrevLex, 6);
  return tables;
}

const std::map<int, BettiTable>& computed_lexgin_tables() {  // k = 1..5
  static const auto tables = gin_series_tables(0, TermOrder::Lex, 5);
  return tables;
}

// ---- random ideal generators ------------------------------------------------

MonomialIdeal random_monomial_ideal(CounterRng& rng, int nvars, int ngens, int maxdeg) {
  std::vector<Monomial> gens;
  for (int g = 0; g < ngens; ++g) {
    std::vector<int> e(nvars);
    int deg = 0;
    for (int& x : e) {
      x = static_cast<int>(rng.uniform_int(0, maxdeg));
      deg += x;
    }
    if (deg > 0) gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(nvars, std::move(gens));
}

// Borel closure under the swaps x_j -> x_i, i < j.
MonomialIdeal random_borel(CounterRng& rng, int nvars, int ngens, int maxdeg) {
  std::vector<Monomial> gens;
  for (int g = 0; g < ngens; ++g) {
    int deg = static_cast<int>(rng.uniform_int(1, maxdeg));
    std::vector<int> e(nvars, 0);
    for (int d = 0; d < deg; ++d) ++e[rng.uniform_int(0, nvars - 1)];
    gens.push_back(Monomial(std::move(e)));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Monomial> more;
    for (const auto& m : gens)
      for (int j = 1; j < nvars; ++j) {
        if (m.exp(j) == 0) continue;
        for (int i = 0; i < j; ++i) {
          std::vector<int> e(m.exps());
          --e[j];
          ++e[i];
          Monomial cand(std::move(e));
          bool seen = false;
          for (const auto& g : gens)
            if (g == cand) seen = true;
          for (const auto& g : more)
            if (g == cand) seen = true;
          if (!seen) more.push_back(std::move(cand));
        }
      }
    if (!more.empty()) {
      gens.insert(gens.end(), more.begin(), more.end());
      grew = true;
    }
  }
  return MonomialIdeal(nvars, std::move(gens));
}

FpIdeal random_equigenerated(CounterRng& rng, const PrimeField& F, int nvars, int ngens,
                             int deg) {
  std::vector<FpPolynomial> gens;
  auto ms = monomials_of_degree(nvars, deg);
  for (int g = 0; g < ngens; ++g) {
    std::vector<FpPolynomial::Term> terms;
    for (const auto& m : ms) {
      auto c = F.from_int(rng.uniform_int(-5, 5));
      if (!F.is_zero(c)) terms.push_back({m, c});
    }
    if (!terms.empty())
      gens.push_back(FpPolynomial::from_terms(F, nvars, std::move(terms)));
  }
  return FpIdeal(F, nvars, std::move(gens));
}

// ---- criteria ----------------------------------------------------------------

bool criterion1() {
  bool ok = true;
  for (int k = 1; k <= 6; ++k)
    ok &= expect_eq(computed_power_tables().at(k), fixtures::power_tables().at(k),
                    "beta(I^" + std::to_string(k) + ")");
  return ok;
}

bool criterion2() {
  bool ok = true;
  for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
    bool certified = false;
    auto tables = gin_series_tables(seed, TermOrder::GrevLex, 6, &certified);
    ok &= expect(certified, "gin certificate, seed " + std::to_string(seed));
    for (int k = 1; k <= 6; ++k)
      ok &= expect_eq(tables.at(k), fixtures::gin_tables().at(k),
                      "beta(gin(I^" + std::to_string(k) + ")), seed " +
                          std::to_string(seed));
  }
  // cross-check over the rationals for small k
  auto I = fixtures::reference_ideal();
  for (int k = 1; k <= 2; ++k) {
    auto [M, cert] = gin(ideal_power(I, k), TermOrder::GrevLex, 3,
                         detail::k_seed<Rationals>(0, k));
    ok &= expect(cert.certified(), "rational gin certificate");
    ok &= expect_eq(ek_betti(M), fixtures::gin_tables().at(k),
                    "rational gin cross-check, k = " + std::to_string(k));
  }
  return ok;
}

bool criterion3() {
  bool ok = true;
  for (int k = 1; k <= 3; ++k) {
    const auto& T = computed_lexgin_tables().at(k);
    ok &= expect_eq(T, fixtures::lexgin_tables().at(k),
                    "beta(lexgin(I^" + std::to_string(k) + "))");
    ok &= expect(T.regularity() == 6 * k, "reg(lexgin(I^k)) = 6k");
  }
  return ok;
}

bool criterion4() {
  bool ok = true;
  auto I = fixtures::reference_ideal();
  std::map<int, BettiTable> tables;
  for (int k = 3; k <= 10; ++k)
    tables[k] = monomial_betti(initial_ideal(ideal_power(I, k), TermOrder::GrevLex));
  for (const auto& [k, want] : fixtures::initial_corner_values())
    ok &= expect(tables.at(k).get(2, 3 * k + 2) == want,
                 "beta_{2,3k+2}(in(I^k)), k = " + std::to_string(k));
  auto fits = fit_entries(tables, 3, 3);
  const auto& f = fits.at({2, 0});  // beta_{2,3k+2} sits in display row 3k
  ok &= expect(f.kind == FitResult::Kind::QuasiPolynomial && f.period == 2,
               "period-2 quasi-polynomial at (2, +0)");
  if (ok) {
    // odd branch k^2/2 - k + 1/2, even branch k^2/2 - k
    ok &= expect_eq(f.branches[1], RatPoly{mpq_class(1, 2), -1, mpq_class(1, 2)},
                    "odd branch");
    ok &= expect_eq(f.branches[0], RatPoly{0, -1, mpq_class(1, 2)}, "even branch");
  }
  return ok;
}

bool criterion5() {
  auto power = detect_stabilization(computed_power_tables(), 3);
  auto gins = detect_stabilization(computed_gin_tables(), 3);
  std::map<int, BettiTable> lex3;
  for (int k = 1; k <= 3; ++k) lex3[k] = computed_lexgin_tables().at(k);
  auto lexv = detect_stabilization(lex3, 3);
  bool ok = expect(power.stabilized && power.k0 == 3, "power system k0 = 3");
  ok &= expect(gins.stabilized && gins.k0 == 3, "gin system k0 = 3");
  ok &= expect(!lexv.stabilized, "lexgin system not stabilized");
  return ok;
}

bool criterion6() {
  bool ok = true;
  auto pf = fit_entries(computed_power_tables(), 3, 3);
  ok &= expect_eq(pf.at({0, 0}).poly, RatPoly{1, mpq_class(3, 2), mpq_class(1, 2)},
                  "power (0,+0) = k^2/2 + 3k/2 + 1");
  ok &= expect_eq(pf.at({1, 0}).poly, RatPoly{0, 0, 1}, "power (1,+0) = k^2");
  ok &= expect_eq(pf.at({2, 0}).poly, RatPoly{1, mpq_class(-3, 2), mpq_class(1, 2)},
                  "power (2,+0) = k^2/2 - 3k/2 + 1");
  ok &= expect_eq(pf.at({1, 1}).poly, RatPoly{1}, "power (1,+1) = 1");

  auto gf = fit_entries(computed_gin_tables(), 3, 3);
  ok &= expect_eq(gf.at({0, 0}).poly, RatPoly{1, mpq_class(3, 2), mpq_class(1, 2)},
                  "gin (0,+0) = k^2/2 + 3k/2 + 1");
  ok &= expect_eq(gf.at({1, 0}).poly, RatPoly{1, 0, 1}, "gin (1,+0) = k^2 + 1");
  ok &= expect_eq(gf.at({2, 0}).poly, RatPoly{1, mpq_class(-3, 2), mpq_class(1, 2)},
                  "gin (2,+0) = k^2/2 - 3k/2 + 1");
  ok &= expect_eq(gf.at({0, 1}).poly, RatPoly{1}, "gin (0,+1) = 1");
  ok &= expect_eq(gf.at({1, 1}).poly, RatPoly{1}, "gin (1,+1) = 1");

  auto lf = fit_entries(computed_lexgin_tables(), 3, 3);
  const auto& f = lf.at({1, 1});
  ok &= expect(f.is_poly(), "lexgin (1,+1) fits a polynomial");
  if (f.is_poly()) {
    ok &= expect_eq(f.poly, RatPoly{-2, 4}, "lexgin (1,+1) = 4k - 2");
    ok &= expect(f.valid_from == 2,
                 "lexgin (1,+1) valid from k = 2 (computed from k = " +
                     std::to_string(f.valid_from) + "; beta_{1,8}(lexgin(I^2)) = " +
                     std::to_string(computed_lexgin_tables().at(2).get(1, 8)) + ")");
  }
  return ok;
}

bool criterion7() {
  auto w = cancellation_witness(computed_gin_tables().at(3), computed_power_tables().at(3));
  bool ok = expect(w.has_value(), "witness exists");
  if (ok) {
    std::map<std::pair<int, int>, long long> want{{{0, 10}, 1}};
    ok &= expect_eq(w->moves, want, "exactly one move at (s=0, r=10)");
  }
  return ok;
}

bool criterion8() {
  bool ok = true;
  for (int k = 1; k <= 6; ++k) {
    const auto& P = computed_power_tables().at(k);
    const auto& G = computed_gin_tables().at(k);
    ok &= expect(extremal_entries(P) == extremal_entries(G),
                 "extremal entries, k = " + std::to_string(k));
    ok &= expect(P.regularity() == G.regularity(),
                 "regularity, k = " + std::to_string(k));
  }
  return ok;
}

bool criterion9() {
  bool ok = true;
  Rationals Q;
  const std::vector<std::string> xy = {"x", "y"};
  for (auto [a, b] : {std::pair{2, 3}, std::pair{3, 5}}) {
    QIdeal CI(Q, 2,
              {parse_polynomial("x^" + std::to_string(a), xy),
               parse_polynomial("y^" + std::to_string(b), xy)});
    for (int k = 1; k <= 8; ++k) {
      BettiTable want;
      for (int l = 0; l <= k; ++l) want.add(0, a * k + l * (b - a), 1);
      // one syzygy between each pair of consecutive generators
      for (int l = 1; l <= k; ++l) want.add(1, a * k + l * (b - a) + a, 1);
      ok &= expect_eq(koszul_betti_full(ideal_power(CI, k)), want,
                      "CI (" + std::to_string(a) + "," + std::to_string(b) +
                          "), k = " + std::to_string(k));
    }
  }
  return ok;
}

bool criterion10() {
  bool ok = true;
  CounterRng rng{2026, 0};
  int done = 0;
  while (done < 50) {
    int n = 2 + static_cast<int>(rng.uniform_int(0, 2));
    auto B = random_borel(rng, n, 1 + static_cast<int>(rng.uniform_int(0, 2)), 6);
    if (B.is_zero() || B.is_unit()) continue;
    ok &= expect(ek_betti(B) == monomial_betti(B), "ek vs monomial, case " +
                                                       std::to_string(done));
    ++done;
  }

  Rationals Q;
  done = 0;
  CounterRng rng2{2026, 1};
  while (done < 30) {
    auto M = random_monomial_ideal(rng2, 3, 1 + static_cast<int>(rng2.uniform_int(0, 5)), 4);
    if (M.is_zero() || M.is_unit()) continue;
    std::vector<QPolynomial> gens;
    for (const auto& m : M.generators())
      gens.push_back(QPolynomial::monomial(Q, m, mpq_class(1)));
    ok &= expect(monomial_betti(M) == koszul_betti_full(QIdeal(Q, 3, gens)),
                 "monomial vs koszul, case " + std::to_string(done));
    ++done;
  }

  PrimeField F(32003);
  done = 0;
  CounterRng rng3{2026, 2};
  while (done < 10) {
    int deg = 2 + static_cast<int>(rng3.uniform_int(0, 1));
    auto I = random_equigenerated(rng3, F, 3, 2 + static_cast<int>(rng3.uniform_int(0, 1)),
                                  deg);
    if (I.generators().size() < 2) continue;
    // generic hyperplane with a unit last coefficient
    std::vector<FpPolynomial::Term> ht;
    for (int v = 0; v < 3; ++v)
      ht.push_back({Monomial::variable(3, v),
                    F.from_int(1 + rng3.uniform_int(0, 30000))});
    auto h = FpPolynomial::from_terms(F, 3, std::move(ht));
    try {
      auto [G3, c3] = gin(I, TermOrder::GrevLex, 2, rng3.next());
      auto [G2, c2] = gin(hyperplane_section(I, h), TermOrder::GrevLex, 2, rng3.next());
      ok &= expect(G2 == restrict_last_variable(G3),
                   "hyperplane commutation, case " + std::to_string(done));
    } catch (const genericity_error&) {
      continue;  // resample
    }
    ++done;
  }
  return ok;
}

bool criterion11() {
  int spread = analytic_spread(fixtures::reference_ideal());
  bool ok = expect(spread == 3, "analytic spread = 3");
  ok &= expect(verify_degree_bounds(fit_entries(computed_power_tables(), 3, 3), spread),
               "degree bounds for the power fits");
  ok &= expect(verify_degree_bounds(fit_entries(computed_gin_tables(), 3, 3), spread),
               "degree bounds for the gin fits");
  return ok;
}

bool criterion12() {
  bool ok = true;
  std::map<int, Decomposition> decs;
  for (int k = 3; k <= 6; ++k) {
    const auto& T = computed_gin_tables().at(k);
    auto dec = bs_decompose(T);
    decs[k] = dec;
    std::map<std::pair<int, int>, mpq_class> acc;
    for (const auto& [w, ds] : dec.parts)
      for (const auto& [key, v] : pure_diagram(ds)) acc[key] += w * v;
    bool exact = true;
    for (const auto& [key, v] : T.entries())
      exact = exact && acc[key] == mpq_class(static_cast<long>(v));
    for (const auto& [key, v] : acc)
      exact = exact && v == mpq_class(static_cast<long>(T.get(key.first, key.second)));
    ok &= expect(exact, "re-summation, k = " + std::to_string(k));
    for (std::size_t s = 1; s < dec.parts.size(); ++s)
      ok &= expect(dec.parts[s - 1].second.comparable(dec.parts[s].second),
                   "chain, k = " + std::to_string(k));
  }
  const auto& base = decs.at(3);
  for (int k = 4; k <= 6; ++k) {
    const auto& dec = decs.at(k);
    ok &= expect(dec.parts.size() == base.parts.size(),
                 "part count, k = " + std::to_string(k));
    if (dec.parts.size() != base.parts.size()) continue;
    for (std::size_t s = 0; s < dec.parts.size(); ++s) {
      const auto& got = dec.parts[s].second.degrees;
      const auto& ref = base.parts[s].second.degrees;
      bool shifted = got.size() == ref.size();
      for (std::size_t d = 0; shifted && d < got.size(); ++d)
        shifted = got[d] == ref[d] + 3 * (k - 3);
      ok &= expect(shifted, "translation by 3, k = " + std::to_string(k));
    }
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<bool()>>> criteria = {
      {"power-system tables (koszul, Q, k = 1..6)", criterion1},
      {"gin tables (certified, 3 seeds, F_32003 + Q cross-check)", criterion2},
      {"lexgin tables and 6k regularity (k = 1..3)", criterion3},
      {"initial-system corner values and quasi-polynomial (k = 3..10)", criterion4},
      {"stabilization verdicts (power, gin, lexgin)", criterion5},
      {"polynomial fits (power, gin, lexgin to k = 5)", criterion6},
      {"cancellation witness gin(I^3) -> I^3", criterion7},
      {"extremal entries and regularity preservation (k = 1..6)", criterion8},
      {"complete-intersection closed form (k <= 8)", criterion9},
      {"oracle equivalences (ek/monomial/koszul/hyperplane)", criterion10},
      {"degree bounds against analytic spread 3", criterion11},
      {"Boij-Soderberg re-summation and translation (k = 3..6)", criterion12},
  };

  int failures = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    note.str("");
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[c].second();
    } catch (const std::exception& e) {
      note << "  exception: " << e.what() << "\n";
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
    std::printf("criterion %2zu: %s  [%s, %.1fs]\n", c + 1, ok ? "PASS" : "FAIL",
                criteria[c].first, secs.count());
    if (!ok) {
      std::fputs(note.str().c_str(), stdout);
      ++failures;
    }
  }
  if (failures) std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
