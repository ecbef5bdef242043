#include <gmpxx.h>

#include <queue>
#include <unordered_set>
#include <vector>

#include "betti/betti_table.hpp"

namespace betti {

namespace {

// rank over Q of a small matrix with integer entries
int rank_q(std::vector<std::vector<mpq_class>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

BettiTable monomial_betti(const MonomialIdeal& M) {
  BettiTable T;
  if (M.is_zero()) return T;
  const int n = M.nvars();
  const auto& gens = M.generators();

  // lcm lattice: closure of the generators under lcm
  std::unordered_set<Monomial, MonomialHash> lattice;
  std::queue<Monomial> frontier;
  for (const auto& g : gens)
    if (lattice.insert(g).second) frontier.push(g);
  while (!frontier.empty()) {
    Monomial m = frontier.front();
    frontier.pop();
    for (const auto& g : gens) {
      Monomial l = m.lcm(g);
      if (lattice.insert(l).second) frontier.push(l);
    }
  }

  for (const auto& b : lattice) {
    // upper Koszul complex at b: subsets T with x^b / x^T in M
    std::vector<unsigned> faces;  // grouped later by size
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      bool ok = true;
      std::vector<int> e = b.exps();
      for (int t = 0; t < n && ok; ++t) {
        if (!(mask & (1u << t))) continue;
        if (e[t] == 0) ok = false;
        else --e[t];
      }
      if (ok && M.contains(Monomial(e))) faces.push_back(mask);
    }
    // faces of size s live in chain degree s-1; C_{-1} is the empty face
    std::vector<std::vector<unsigned>> by_size(n + 1);
    for (unsigned f : faces) by_size[__builtin_popcount(f)].push_back(f);
    if (by_size[0].empty()) continue;  // b not in M (cannot happen for lcms)

    // boundary ranks: bnd[s] = rank of d : C_{s-1} -> C_{s-2}, s = face size
    std::vector<int> bnd(n + 2, 0);
    for (int s = 1; s <= n; ++s) {
      const auto& dom = by_size[s];
      const auto& cod = by_size[s - 1];
      if (dom.empty() || cod.empty()) continue;
      std::vector<std::vector<mpq_class>> mat(cod.size(),
                                              std::vector<mpq_class>(dom.size(), 0));
      for (std::size_t cidx = 0; cidx < dom.size(); ++cidx) {
        unsigned f = dom[cidx];
        int sign = 1;
        for (int t = 0; t < n; ++t) {
          if (!(f & (1u << t))) continue;
          unsigned sub = f & ~(1u << t);
          auto it = std::find(cod.begin(), cod.end(), sub);
          if (it != cod.end()) mat[it - cod.begin()][cidx] = sign;
          sign = -sign;
        }
      }
      bnd[s] = rank_q(std::move(mat));
    }

    // beta_{i,b} = dim H~_{i-1} = |faces of size i| - bnd[i] - bnd[i+1]
    for (int i = 0; i < n; ++i) {
      long long h = static_cast<long long>(by_size[i].size()) - bnd[i] - bnd[i + 1];
      if (h > 0) T.add(i, b.deg(), h);
    }
  }
  return T;
}

}  // namespace betti
