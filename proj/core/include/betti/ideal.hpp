// Homogeneous ideals and minimally generated monomial ideals.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "betti/polynomial.hpp"

namespace betti {

// Monomial ideal held by its unique minimal monomial generating set,
// sorted ascending by grevlex so equality is structural.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
  MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    set_generators(std::move(gens));
  }

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

  bool contains(const Monomial& m) const {
    for (const auto& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  int max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.deg());
    return d;
  }
  int min_generator_degree() const {
    if (gens_.empty()) throw std::domain_error("zero ideal has no generators");
    int d = gens_[0].deg();
    for (const auto& g : gens_) d = std::min(d, g.deg());
    return d;
  }

  bool operator==(const MonomialIdeal& o) const {
    return nvars_ == o.nvars_ && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

 private:
  void set_generators(std::vector<Monomial> gens) {
    for (const auto& g : gens)
      if (g.nvars() != nvars_) throw std::invalid_argument("variable count mismatch");
    // keep divisibility-minimal elements only
    std::vector<Monomial> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool minimal = true;
      for (std::size_t j = 0; j < gens.size() && minimal; ++j) {
        if (i == j) continue;
        if (gens[j].divides(gens[i]) && gens[i] != gens[j]) minimal = false;
        if (gens[i] == gens[j] && j < i) minimal = false;  // dedup
      }
      if (minimal) kept.push_back(gens[i]);
    }
    std::sort(kept.begin(), kept.end(), MonoLess{TermOrder::GrevLex});
    gens_ = std::move(kept);
  }

  int nvars_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens) {
  return MonomialIdeal(nvars, std::move(gens));
}

// Ideal generated by homogeneous polynomials.
template <class F>
class Ideal {
 public:
  Ideal(F field, int nvars) : field_(std::move(field)), nvars_(nvars) {}
  Ideal(F field, int nvars, std::vector<Polynomial<F>> gens)
      : field_(std::move(field)), nvars_(nvars), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
      if (g.nvars() != nvars_) throw std::invalid_argument("variable count mismatch");
      if (g.is_zero()) throw std::invalid_argument("zero generator");
      if (!g.is_homogeneous())
        throw std::invalid_argument("inhomogeneous generator: " + g.str());
    }
  }

  // Unchecked variant for internal non-homogeneous constructions
  // (fiber-cone presentations).
  static Ideal unchecked(F field, int nvars, std::vector<Polynomial<F>> gens) {
    Ideal I(std::move(field), nvars);
    I.gens_ = std::move(gens);
    return I;
  }

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }

  bool is_equigenerated() const {
    if (gens_.empty()) return false;
    const int r = gens_[0].degree();
    for (const auto& g : gens_)
      if (g.degree() != r) return false;
    return true;
  }
  int generation_degree() const {
    if (!is_equigenerated()) throw std::domain_error("ideal is not equigenerated");
    return gens_[0].degree();
  }

 private:
  F field_;
  int nvars_;
  std::vector<Polynomial<F>> gens_;
};

using QIdeal = Ideal<Rationals>;
using FpIdeal = Ideal<PrimeField>;

}  // namespace betti
