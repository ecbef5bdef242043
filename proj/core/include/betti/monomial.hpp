// Monomials in n variables with cached total degree, plus term orders.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace betti {

enum class TermOrder { GrevLex, Lex };

inline const char* term_order_name(TermOrder o) {
  return o == TermOrder::GrevLex ? "grevlex" : "lex";
}

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
      if (e < 0) throw std::invalid_argument("negative exponent");
      deg_ += e;
    }
  }
  static Monomial unit(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(int nvars, int i) {
    std::vector<int> e(nvars, 0);
    e.at(i) = 1;
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(exps_.size()); }
  int deg() const { return deg_; }
  int exp(int i) const { return exps_[i]; }
  const std::vector<int>& exps() const { return exps_; }
  bool is_unit() const { return deg_ == 0; }

  // max{i : x_i divides m}, 1-based.  Undefined on the unit monomial.
  int max_index() const {
    if (deg_ == 0) throw std::domain_error("max_index of the unit monomial");
    for (int i = nvars() - 1; i >= 0; --i)
      if (exps_[i] > 0) return i + 1;
    return 0;  // unreachable
  }

  bool divides(const Monomial& m) const {
    check_vars(m);
    if (deg_ > m.deg_) return false;
    for (int i = 0; i < nvars(); ++i)
      if (exps_[i] > m.exps_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    check_vars(m);
    std::vector<int> e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] += m.exps_[i];
    return Monomial(std::move(e));
  }

  // this / m; requires m | this.
  Monomial operator/(const Monomial& m) const {
    check_vars(m);
    std::vector<int> e(exps_);
    for (int i = 0; i < nvars(); ++i) {
      e[i] -= m.exps_[i];
      if (e[i] < 0) throw std::domain_error("monomial division not exact");
    }
    return Monomial(std::move(e));
  }

  Monomial lcm(const Monomial& m) const {
    check_vars(m);
    std::vector<int> e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] = std::max(e[i], m.exps_[i]);
    return Monomial(std::move(e));
  }

  bool coprime(const Monomial& m) const {
    check_vars(m);
    for (int i = 0; i < nvars(); ++i)
      if (exps_[i] > 0 && m.exps_[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& m) const { return exps_ == m.exps_; }
  bool operator!=(const Monomial& m) const { return !(*this == m); }

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void check_vars(const Monomial& m) const {
    if (nvars() != m.nvars()) throw std::invalid_argument("variable count mismatch");
  }

  std::vector<int> exps_;
  int deg_ = 0;
};

// -1 / 0 / +1 for a < b, a == b, a > b under the given order.
inline int mono_cmp(const Monomial& a, const Monomial& b, TermOrder order) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
  const int n = a.nvars();
  if (order == TermOrder::GrevLex) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    // last nonzero entry of a-b negative => a > b
    for (int i = n - 1; i >= 0; --i) {
      int d = a.exp(i) - b.exp(i);
      if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
  }
  // Lex: first nonzero entry of a-b positive => a > b
  for (int i = 0; i < n; ++i) {
    int d = a.exp(i) - b.exp(i);
    if (d != 0) return d > 0 ? 1 : -1;
  }
  return 0;
}

struct MonoLess {
  TermOrder order = TermOrder::GrevLex;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return mono_cmp(a, b, order) < 0;
  }
};

struct MonoGreater {
  TermOrder order = TermOrder::GrevLex;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return mono_cmp(a, b, order) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int e : m.exps()) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// All monomials of total degree d in n variables, grevlex-descending.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

}  // namespace betti
