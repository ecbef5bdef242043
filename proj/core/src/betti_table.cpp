#include "betti/betti_table.hpp"

namespace betti {

std::vector<ExtremalEntry> extremal_entries(const BettiTable& T) {
  std::vector<ExtremalEntry> out;
  for (const auto& [key, v] : T.entries()) {
    const int i = key.first;
    const int row = key.second - key.first;
    bool extremal = true;
    for (const auto& [key2, v2] : T.entries()) {
      const int k = key2.first;
      const int l = key2.second - key2.first;
      if (k >= i && l >= row && !(k == i && l == row)) {
        extremal = false;
        break;
      }
    }
    if (extremal) out.push_back({i, row, v});
  }
  return out;
}

std::optional<CancellationWitness> cancellation_witness(const BettiTable& source,
                                                        const BettiTable& target) {
  std::set<int> degrees;
  int max_i = 0;
  for (const auto& [k, v] : source.entries()) {
    degrees.insert(k.second);
    max_i = std::max(max_i, k.first);
  }
  for (const auto& [k, v] : target.entries()) {
    degrees.insert(k.second);
    max_i = std::max(max_i, k.first);
  }
  CancellationWitness w;
  for (int r : degrees) {
    // d_i = c_{i-1} + c_i with c_i >= 0, solved in increasing i
    long long prev = 0;
    for (int i = 0; i <= max_i; ++i) {
      long long d = source.get(i, r) - target.get(i, r);
      long long c = d - prev;
      if (c < 0) return std::nullopt;
      if (c > 0) w.moves[{i, r}] = c;
      prev = c;
    }
    if (prev != 0) return std::nullopt;  // unmatched residual
  }
  return w;
}

GeneratorStats generator_stats(const MonomialIdeal& M) {
  GeneratorStats s;
  for (const auto& g : M.generators()) {
    if (g.is_unit()) continue;
    ++s.m[{g.max_index(), g.deg()}];
  }
  return s;
}

bool is_borel_fixed(const MonomialIdeal& M) {
  const int n = M.nvars();
  for (const auto& g : M.generators()) {
    for (int j = 1; j < n; ++j) {
      if (g.exp(j) == 0) continue;
      for (int i = 0; i < j; ++i) {
        std::vector<int> e = g.exps();
        --e[j];
        ++e[i];
        if (!M.contains(Monomial(std::move(e)))) return false;
      }
    }
  }
  return true;
}

static long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

BettiTable ek_betti(const MonomialIdeal& M) {
  if (!is_borel_fixed(M))
    throw std::invalid_argument("Eliahou-Kervaire formula requires a Borel-fixed ideal");
  BettiTable T;
  for (const auto& g : M.generators()) {
    const int q = g.deg();
    const int mx = g.is_unit() ? 1 : g.max_index();
    for (int p = 0; p <= mx - 1; ++p) T.add(p, p + q, binom(mx - 1, p));
  }
  return T;
}

}  // namespace betti
