// Pure diagrams and greedy Boij-Soderberg decomposition of Betti tables.
#pragma once

#include <gmpxx.h>

#include <climits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "betti/betti_table.hpp"

namespace betti {

// Strictly increasing degrees d_0 < d_1 < ... < d_s.
struct DegreeSequence {
  std::vector<int> degrees;

  bool operator==(const DegreeSequence&) const = default;

  // Componentwise order with missing trailing entries treated as +infinity.
  bool leq(const DegreeSequence& o) const {
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      int other = i < o.degrees.size() ? o.degrees[i] : INT_MAX;
      if (degrees[i] > other) return false;
    }
    return true;
  }
  bool comparable(const DegreeSequence& o) const { return leq(o) || o.leq(*this); }
};

// Rational table supported at (i, d_i) with entry prod_{j != i} 1/|d_j - d_i|.
std::map<std::pair<int, int>, mpq_class> pure_diagram(const DegreeSequence& ds);

struct Decomposition {
  std::vector<std::pair<mpq_class, DegreeSequence>> parts;
};

struct not_decomposable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Greedy Eisenbud-Schreyer elimination; exact, throws not_decomposable when
// the remainder leaves the positive cone.
Decomposition bs_decompose(const BettiTable& T);

}  // namespace betti
