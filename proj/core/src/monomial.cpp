#include "betti/monomial.hpp"

#include <algorithm>

namespace betti {

std::string Monomial::str(const std::vector<std::string>& names) const {
  if (deg_ == 0) return "1";
  std::string out;
  for (int i = 0; i < nvars(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out;
}

static void enumerate(int nvars, int pos, int remaining, std::vector<int>& cur,
                      std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    enumerate(nvars, pos + 1, remaining - e, cur, out);
  }
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial(std::vector<int>{}));
    return out;
  }
  std::vector<int> cur(nvars, 0);
  enumerate(nvars, 0, d, cur, out);
  std::sort(out.begin(), out.end(), MonoGreater{TermOrder::GrevLex});
  return out;
}

}  // namespace betti
