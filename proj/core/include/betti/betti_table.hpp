// Graded Betti tables of ideals and the combinatorics read off them:
// regularity, projective dimension, extremal entries, consecutive
// cancellations, and generator statistics.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "betti/ideal.hpp"

namespace betti {

// Sparse table (i = homological index, j = internal degree) -> positive count.
// All tables in this project are tables of the ideal, not the quotient;
// beta_{i,i+j} sits in column i, row j of the displayed diagram.
class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (i, j)

  BettiTable() = default;

  void set(int i, int j, long long v) {
    if (v < 0) throw std::invalid_argument("negative Betti number");
    if (v == 0)
      entries_.erase({i, j});
    else
      entries_[{i, j}] = v;
  }
  void add(int i, int j, long long v) { set(i, j, get(i, j) + v); }

  long long get(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }

  const std::map<Key, long long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  int projdim() const {
    require_nonempty();
    int p = 0;
    for (const auto& [k, v] : entries_) p = std::max(p, k.first);
    return p;
  }

  int regularity() const {
    require_nonempty();
    int r = entries_.begin()->first.second - entries_.begin()->first.first;
    for (const auto& [k, v] : entries_) r = std::max(r, k.second - k.first);
    return r;
  }

  int min_row() const {
    require_nonempty();
    int r = entries_.begin()->first.second - entries_.begin()->first.first;
    for (const auto& [k, v] : entries_) r = std::min(r, k.second - k.first);
    return r;
  }

  // Support as (column, row) pairs.
  std::set<std::pair<int, int>> shape() const {
    std::set<std::pair<int, int>> s;
    for (const auto& [k, v] : entries_) s.insert({k.first, k.second - k.first});
    return s;
  }

  // Shape translated down by `shift` rows, for stabilization comparison.
  std::set<std::pair<int, int>> shape_shifted(int shift) const {
    std::set<std::pair<int, int>> s;
    for (const auto& [k, v] : entries_) s.insert({k.first, k.second - k.first - shift});
    return s;
  }

  bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }
  bool operator!=(const BettiTable& o) const { return !(*this == o); }

  bool truncated = false;  // set when a degree cap may have cut entries off

 private:
  void require_nonempty() const {
    if (entries_.empty()) throw std::domain_error("empty Betti table");
  }

  std::map<Key, long long> entries_;
};

struct ExtremalEntry {
  int i;            // homological index (column)
  int row;          // display row j - i
  long long value;
  auto operator<=>(const ExtremalEntry&) const = default;
};

// Nonzero entries that are upper-left corners of a block of zeros:
// beta_{i,i+j} != 0 with beta_{k,k+l} = 0 for all (k,l) >= (i,j), (k,l) != (i,j).
std::vector<ExtremalEntry> extremal_entries(const BettiTable& T);

// One consecutive cancellation removes 1 from beta_{s,r} and beta_{s+1,r}.
struct CancellationWitness {
  std::map<std::pair<int, int>, long long> moves;  // (s, r) -> count
};

// Witness turning `source` into `target` by consecutive cancellations, solved
// greedily per internal degree; nullopt when infeasible.
std::optional<CancellationWitness> cancellation_witness(const BettiTable& source,
                                                        const BettiTable& target);

// Counts of minimal generators by (max variable index, degree).
struct GeneratorStats {
  std::map<std::pair<int, int>, long long> m;  // (i, delta) -> count
};

GeneratorStats generator_stats(const MonomialIdeal& M);

// Borel-fixedness under single-variable swaps x_j -> x_i, i < j
// (characteristic-zero strong stability).
bool is_borel_fixed(const MonomialIdeal& M);

// Eliahou-Kervaire Betti numbers of a Borel-fixed ideal:
// beta_{p,p+q} = sum over generators of degree q of C(max(m)-1, p).
BettiTable ek_betti(const MonomialIdeal& M);

// Multigraded Betti numbers of an arbitrary monomial ideal via reduced
// simplicial homology of upper Koszul complexes at lcm-lattice multidegrees,
// coarsened to the standard grading.
BettiTable monomial_betti(const MonomialIdeal& M);

}  // namespace betti
