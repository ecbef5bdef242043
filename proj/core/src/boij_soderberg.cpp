#include "betti/boij_soderberg.hpp"

#include <climits>

namespace betti {

std::map<std::pair<int, int>, mpq_class> pure_diagram(const DegreeSequence& ds) {
  const auto& d = ds.degrees;
  if (d.empty()) throw std::invalid_argument("empty degree sequence");
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] <= d[i - 1]) throw std::invalid_argument("degrees must strictly increase");
  std::map<std::pair<int, int>, mpq_class> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    mpq_class v = 1;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j == i) continue;
      v /= abs(d[j] - d[i]);
    }
    out[{static_cast<int>(i), d[i]}] = v;
  }
  return out;
}

Decomposition bs_decompose(const BettiTable& T) {
  if (T.empty()) throw std::invalid_argument("empty Betti table");
  std::map<std::pair<int, int>, mpq_class> rem;
  for (const auto& [k, v] : T.entries()) rem[k] = mpq_class(static_cast<long>(v));

  Decomposition dec;
  while (!rem.empty()) {
    // least degree with a nonzero entry in each column, as far as the
    // sequence stays strictly increasing
    std::map<int, int> min_deg;
    int max_col = 0;
    for (const auto& [k, v] : rem) {
      if (v == 0) continue;
      auto it = min_deg.find(k.first);
      if (it == min_deg.end() || k.second < it->second) min_deg[k.first] = k.second;
      max_col = std::max(max_col, k.first);
    }
    DegreeSequence ds;
    for (int i = 0; i <= max_col; ++i) {
      auto it = min_deg.find(i);
      if (it == min_deg.end()) break;  // gap in columns ends the chainable prefix
      if (!ds.degrees.empty() && it->second <= ds.degrees.back()) break;
      ds.degrees.push_back(it->second);
    }
    if (ds.degrees.empty())
      throw not_decomposable("table has no chainable top degree sequence");

    auto pure = pure_diagram(ds);
    // largest weight keeping all entries nonnegative: the binding entries are
    // exactly the support of the pure diagram
    mpq_class w = -1;
    for (const auto& [k, p] : pure) {
      mpq_class cap = rem[k] / p;
      if (w < 0 || cap < w) w = cap;
    }
    if (w <= 0) throw not_decomposable("nonpositive greedy weight");
    for (const auto& [k, p] : pure) {
      rem[k] -= w * p;
      if (rem[k] < 0) throw not_decomposable("negative remainder");
      if (rem[k] == 0) rem.erase(k);
    }
    dec.parts.emplace_back(w, std::move(ds));
  }

  // decomposition degree sequences must form a chain
  for (std::size_t i = 1; i < dec.parts.size(); ++i)
    if (!dec.parts[i - 1].second.comparable(dec.parts[i].second))
      throw not_decomposable("degree sequences do not form a chain");
  return dec;
}

}  // namespace betti
