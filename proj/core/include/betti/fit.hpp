// Exact interpolation of eventual polynomials and period-2 quasi-polynomials
// for integer sequences indexed by k.
#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace betti {

// Coefficients ascending: value(k) = c0 + c1 k + c2 k^2 + ...
using RatPoly = std::vector<mpq_class>;

mpq_class eval_poly(const RatPoly& p, long k);
int poly_degree(const RatPoly& p);  // -1 for the zero polynomial
std::string poly_str(const RatPoly& p, const std::string& var = "k");

// Lowest-degree polynomial through the points (exact Newton interpolation).
RatPoly interpolate(const std::vector<std::pair<long, mpq_class>>& points);

struct FitResult {
  enum class Kind { Polynomial, QuasiPolynomial, None };
  Kind kind = Kind::None;
  RatPoly poly;                  // Polynomial
  int period = 0;                // QuasiPolynomial
  std::vector<RatPoly> branches; // indexed by k mod period
  long valid_from = 0;

  bool is_poly() const { return kind == Kind::Polynomial; }
  std::string str() const;
};

// Fits the trailing `min_window` values with the lowest-degree interpolating
// polynomial (which must have degree <= window-2), then extends valid_from
// backward while earlier values still match.  Falls back to a period-2
// quasi-polynomial, then to None.
FitResult fit_sequence(const std::map<long, long long>& values, int min_window,
                       int max_period = 2);

}  // namespace betti
