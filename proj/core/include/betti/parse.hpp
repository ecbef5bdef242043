// Problem-file parsing: ring declaration, field selection, ideal generators,
// optional hyperplane.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "betti/groebner.hpp"
#include "betti/ideal.hpp"

namespace betti {

struct parse_error : std::runtime_error {
  int line = 0;
  int col = 0;
  parse_error(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ")"),
        line(line),
        col(col) {}
};

struct Problem {
  std::vector<std::string> var_names;       // declaration order = position order
  std::optional<CoeffField> field;          // file-level selection, if any
  QIdeal ideal = QIdeal(Rationals{}, 0);    // generators over Q
  std::optional<QPolynomial> hyperplane;    // named linear form h, if any
};

// Parses the problem text; generators are validated homogeneous.
Problem parse_problem(const std::string& text);

// Single polynomial expression over the named variables.
QPolynomial parse_polynomial(const std::string& expr,
                             const std::vector<std::string>& var_names, int line = 1,
                             int col_offset = 0);

// Coefficient-wise reduction mod p (denominators must be invertible).
FpIdeal to_prime_field(const QIdeal& I, const PrimeField& field);
FpPolynomial to_prime_field(const QPolynomial& f, const PrimeField& field);

}  // namespace betti
