#include <benchmark/benchmark.h>

#include "betti/asymptotics.hpp"
#include "betti/koszul.hpp"
#include "betti/parse.hpp"

using namespace betti;

namespace {

QIdeal reference_ideal() {
  return parse_problem("ring: x, y, z\nideal: x^2*y + z^3, x*y*z, y*z^2\n").ideal;
}

void BM_buchberger_power(benchmark::State& state) {
  auto Ik = ideal_power(reference_ideal(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(Ik, TermOrder::GrevLex));
}
BENCHMARK(BM_buchberger_power)->DenseRange(1, 6);

void BM_buchberger_lex_power(benchmark::State& state) {
  auto Ik = ideal_power(reference_ideal(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(Ik, TermOrder::Lex));
}
BENCHMARK(BM_buchberger_lex_power)->DenseRange(1, 4);

void BM_monomial_betti_initial(benchmark::State& state) {
  auto in_ = initial_ideal(ideal_power(reference_ideal(), static_cast<int>(state.range(0))),
                           TermOrder::GrevLex);
  for (auto _ : state) benchmark::DoNotOptimize(monomial_betti(in_));
}
BENCHMARK(BM_monomial_betti_initial)->DenseRange(2, 10, 2);

void BM_koszul_betti_power(benchmark::State& state) {
  auto Ik = ideal_power(reference_ideal(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(koszul_betti_full(Ik));
}
BENCHMARK(BM_koszul_betti_power)->DenseRange(1, 6);

void BM_gin_power(benchmark::State& state) {
  PrimeField F(32003);
  auto Ik = ideal_power(to_prime_field(reference_ideal(), F),
                        static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gin(Ik, TermOrder::GrevLex, 3, 0));
}
BENCHMARK(BM_gin_power)->DenseRange(1, 6);

void BM_ek_betti(benchmark::State& state) {
  PrimeField F(32003);
  auto Ik = ideal_power(to_prime_field(reference_ideal(), F),
                        static_cast<int>(state.range(0)));
  auto M = gin(Ik, TermOrder::GrevLex, 1, 0).first;
  for (auto _ : state) benchmark::DoNotOptimize(ek_betti(M));
}
BENCHMARK(BM_ek_betti)->DenseRange(1, 6);

void BM_analytic_spread(benchmark::State& state) {
  auto I = reference_ideal();
  for (auto _ : state) benchmark::DoNotOptimize(analytic_spread(I));
}
BENCHMARK(BM_analytic_spread);

}  // namespace

BENCHMARK_MAIN();
