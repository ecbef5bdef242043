#include "betti/fit.hpp"

#include <algorithm>
#include <stdexcept>

namespace betti {

mpq_class eval_poly(const RatPoly& p, long k) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * k + *it;
  return acc;
}

int poly_degree(const RatPoly& p) {
  for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
    if (p[d] != 0) return d;
  return -1;
}

std::string poly_str(const RatPoly& p, const std::string& var) {
  if (poly_degree(p) < 0) return "0";
  std::string out;
  for (int d = poly_degree(p); d >= 0; --d) {
    if (p[d] == 0) continue;
    mpq_class c = p[d];
    std::string sign;
    if (out.empty()) {
      sign = c < 0 ? "-" : "";
    } else {
      sign = c < 0 ? " - " : " + ";
    }
    mpq_class a = abs(c);
    std::string body;
    if (d == 0)
      body = a.get_str();
    else {
      std::string pow = d == 1 ? var : var + "^" + std::to_string(d);
      body = a == 1 ? pow : a.get_str() + "*" + pow;
    }
    out += sign + body;
  }
  return out;
}

RatPoly interpolate(const std::vector<std::pair<long, mpq_class>>& points) {
  const int m = static_cast<int>(points.size());
  // Newton divided differences
  std::vector<mpq_class> dd;
  dd.reserve(m);
  for (const auto& [x, y] : points) dd.push_back(y);
  std::vector<std::vector<mpq_class>> table{dd};
  for (int level = 1; level < m; ++level) {
    std::vector<mpq_class> next;
    for (int i = 0; i + level < m; ++i) {
      mpq_class num = table.back()[i + 1] - table.back()[i];
      mpq_class den = points[i + level].first - points[i].first;
      next.push_back(num / den);
    }
    table.push_back(std::move(next));
  }
  // expand Newton form to monomial coefficients
  RatPoly coeffs(m, 0);
  RatPoly basis{1};  // product of (k - x_0)...(k - x_{level-1})
  for (int level = 0; level < m; ++level) {
    const mpq_class& c = table[level][0];
    for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += c * basis[d];
    // basis *= (k - x_level)
    RatPoly nb(basis.size() + 1, 0);
    for (std::size_t d = 0; d < basis.size(); ++d) {
      nb[d + 1] += basis[d];
      nb[d] -= basis[d] * points[level].first;
    }
    basis = std::move(nb);
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

std::string FitResult::str() const {
  switch (kind) {
    case Kind::Polynomial:
      return poly_str(poly) + " (k >= " + std::to_string(valid_from) + ")";
    case Kind::QuasiPolynomial: {
      std::string out = "period " + std::to_string(period) + ": ";
      for (int b = 0; b < period; ++b) {
        if (b) out += "; ";
        out += "k=" + std::to_string(b) + " mod " + std::to_string(period) + ": " +
               poly_str(branches[b]);
      }
      return out + " (k >= " + std::to_string(valid_from) + ")";
    }
    default:
      return "no fit";
  }
}

namespace {

// Fit one residue class; returns fitted poly and valid_from, or false.
bool fit_class(const std::vector<std::pair<long, long long>>& pts, int window,
               RatPoly& out, long& valid_from) {
  const int m = static_cast<int>(pts.size());
  if (m < window) return false;
  std::vector<std::pair<long, mpq_class>> tail;
  for (int i = m - window; i < m; ++i)
    tail.push_back({pts[i].first, mpq_class(static_cast<long>(pts[i].second))});
  RatPoly p = interpolate(tail);
  if (poly_degree(p) > window - 2) return false;
  int first = m - window;
  while (first > 0 &&
         eval_poly(p, pts[first - 1].first) == static_cast<long>(pts[first - 1].second))
    --first;
  out = std::move(p);
  valid_from = pts[first].first;
  return true;
}

}  // namespace

namespace {

// Widest trailing window wins: interpolating through w points and demanding
// degree <= w-2 keeps at least one redundant confirmation point, and a larger
// window means more redundancy for the same eventual polynomial.
bool fit_descending(const std::vector<std::pair<long, long long>>& pts, int min_window,
                    RatPoly& out, long& valid_from) {
  for (int w = static_cast<int>(pts.size()); w >= min_window; --w)
    if (fit_class(pts, w, out, valid_from)) return true;
  return false;
}

}  // namespace

FitResult fit_sequence(const std::map<long, long long>& values, int min_window,
                       int max_period) {
  if (min_window < 3) throw std::invalid_argument("min_window must be >= 3");
  FitResult r;
  std::vector<std::pair<long, long long>> pts(values.begin(), values.end());

  RatPoly poly;
  long from = 0;
  FitResult weak;  // trailing-window hit with too little redundancy
  if (fit_descending(pts, min_window, poly, from)) {
    FitResult cand;
    cand.kind = FitResult::Kind::Polynomial;
    cand.poly = std::move(poly);
    cand.valid_from = from;
    // demand one point beyond the minimal window (when available) so that a
    // short accidental alignment defers to the quasi-polynomial search
    long long matched = 0;
    for (const auto& p : pts)
      if (p.first >= from) ++matched;
    const int needed = std::min(static_cast<int>(pts.size()), min_window + 1);
    if (matched >= needed) return cand;
    weak = std::move(cand);
  }

  for (int period = 2; period <= max_period; ++period) {
    std::vector<std::vector<std::pair<long, long long>>> classes(period);
    for (const auto& p : pts) classes[((p.first % period) + period) % period].push_back(p);
    std::vector<RatPoly> branches(period);
    long worst = 0;
    bool ok = true;
    for (int b = 0; b < period && ok; ++b) {
      if (classes[b].size() < 3) {
        ok = false;
        break;
      }
      long f = 0;
      if (!fit_descending(classes[b], 3, branches[b], f)) ok = false;
      worst = std::max(worst, f);
    }
    if (ok) {
      r.kind = FitResult::Kind::QuasiPolynomial;
      r.period = period;
      r.branches = std::move(branches);
      r.valid_from = worst;
      return r;
    }
  }
  return weak;  // None unless the weak polynomial candidate was stashed
}

}  // namespace betti
