// Sparse multivariate polynomials with exact coefficients, terms kept
// sorted descending under a fixed term order.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "betti/field.hpp"
#include "betti/monomial.hpp"

namespace betti {

template <class F>
class Polynomial {
 public:
  using Elem = typename F::Elem;
  struct Term {
    Monomial m;
    Elem c;
  };

  Polynomial(F field, int nvars, TermOrder order = TermOrder::GrevLex)
      : field_(std::move(field)), nvars_(nvars), order_(order) {}

  static Polynomial zero(F field, int nvars, TermOrder order = TermOrder::GrevLex) {
    return Polynomial(std::move(field), nvars, order);
  }
  static Polynomial monomial(F field, Monomial m, Elem c,
                             TermOrder order = TermOrder::GrevLex) {
    Polynomial p(field, m.nvars(), order);
    if (!p.field_.is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  static Polynomial constant(F field, int nvars, Elem c,
                             TermOrder order = TermOrder::GrevLex) {
    return monomial(std::move(field), Monomial::unit(nvars), std::move(c), order);
  }

  // Builds from an arbitrary term list: combines duplicates, drops zeros, sorts.
  static Polynomial from_terms(F field, int nvars, std::vector<Term> terms,
                               TermOrder order = TermOrder::GrevLex) {
    Polynomial p(std::move(field), nvars, order);
    std::unordered_map<Monomial, Elem, MonomialHash> acc;
    for (auto& t : terms) {
      auto it = acc.find(t.m);
      if (it == acc.end())
        acc.emplace(std::move(t.m), std::move(t.c));
      else
        it->second = p.field_.add(it->second, t.c);
    }
    for (auto& [m, c] : acc)
      if (!p.field_.is_zero(c)) p.terms_.push_back({m, c});
    p.sort_terms();
    return p;
  }

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  TermOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& lead() const {
    if (terms_.empty()) throw std::domain_error("lead term of zero polynomial");
    return terms_.front();
  }
  const Monomial& lead_monomial() const { return lead().m; }

  int degree() const {  // max total degree; -1 for zero
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.deg());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().m.deg();
    for (const auto& t : terms_)
      if (t.m.deg() != d) return false;
    return true;
  }

  Polynomial with_order(TermOrder order) const {
    Polynomial p = *this;
    p.order_ = order;
    p.sort_terms();
    return p;
  }

  Polynomial operator+(const Polynomial& g) const { return merged(g, false); }
  Polynomial operator-(const Polynomial& g) const { return merged(g, true); }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.c = field_.neg(t.c);
    return p;
  }

  Polynomial operator*(const Polynomial& g) const {
    check_compat(g);
    std::vector<Term> prods;
    prods.reserve(terms_.size() * g.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : g.terms_)
        prods.push_back({a.m * b.m, field_.mul(a.c, b.c)});
    return from_terms(field_, nvars_, std::move(prods), order_);
  }

  Polynomial scaled(const Elem& c) const {
    if (field_.is_zero(c)) return zero(field_, nvars_, order_);
    Polynomial p = *this;
    for (auto& t : p.terms_) t.c = field_.mul(t.c, c);
    return p;
  }

  Polynomial mono_multiple(const Monomial& m, const Elem& c) const {
    if (field_.is_zero(c)) return zero(field_, nvars_, order_);
    Polynomial p = *this;
    for (auto& t : p.terms_) {
      t.m = t.m * m;
      t.c = field_.mul(t.c, c);
    }
    return p;  // multiplicativity of the order keeps sortedness
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return scaled(field_.inv(terms_.front().c));
  }

  void drop_lead() {
    if (terms_.empty()) throw std::domain_error("drop_lead on zero polynomial");
    terms_.erase(terms_.begin());
  }

  // this -= c * x^m * g  (single merge pass; the reduction workhorse)
  void sub_mul(const Elem& c, const Monomial& m, const Polynomial& g) {
    check_compat(g);
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    MonoGreater gt{order_};
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.push_back(std::move(terms_[i++]));
        continue;
      }
      Monomial gm = g.terms_[j].m * m;
      if (i == terms_.size() || gt(gm, terms_[i].m)) {
        Elem v = field_.neg(field_.mul(c, g.terms_[j].c));
        if (!field_.is_zero(v)) out.push_back({std::move(gm), std::move(v)});
        ++j;
      } else if (gt(terms_[i].m, gm)) {
        out.push_back(std::move(terms_[i++]));
      } else {
        Elem v = field_.sub(terms_[i].c, field_.mul(c, g.terms_[j].c));
        if (!field_.is_zero(v)) out.push_back({std::move(gm), std::move(v)});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  bool operator==(const Polynomial& g) const {
    if (nvars_ != g.nvars_ || terms_.size() != g.terms_.size()) return false;
    auto a = terms_;
    auto b = g.terms_;
    auto key = MonoGreater{TermOrder::GrevLex};
    auto cmp = [&](const Term& s, const Term& t) { return key(s.m, t.m); };
    std::sort(a.begin(), a.end(), cmp);
    std::sort(b.begin(), b.end(), cmp);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].m != b[i].m || !field_.eq(a[i].c, b[i].c)) return false;
    return true;
  }
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      std::string c = field_.to_string(t.c);
      if (!out.empty()) {
        if (!c.empty() && c[0] == '-') {
          out += " - ";
          c = c.substr(1);
        } else {
          out += " + ";
        }
      }
      if (t.m.is_unit())
        out += c;
      else if (c == "1")
        out += t.m.str(names);
      else if (c == "-1")
        out += "-" + t.m.str(names);
      else
        out += c + "*" + t.m.str(names);
    }
    return out;
  }

 private:
  void check_compat(const Polynomial& g) const {
    if (nvars_ != g.nvars_) throw std::invalid_argument("variable count mismatch");
    if (!(field_ == g.field_)) throw std::invalid_argument("coefficient field mismatch");
  }

  void sort_terms() {
    MonoGreater gt{order_};
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return gt(a.m, b.m); });
  }

  Polynomial merged(const Polynomial& g, bool subtract) const {
    check_compat(g);
    Polynomial out(field_, nvars_, order_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    MonoGreater gt{order_};
    const auto& gs = g.order_ == order_ ? g : g.with_order(order_);
    while (i < terms_.size() || j < gs.terms_.size()) {
      if (j == gs.terms_.size()) {
        out.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || gt(gs.terms_[j].m, terms_[i].m)) {
        Elem v = subtract ? field_.neg(gs.terms_[j].c) : gs.terms_[j].c;
        out.terms_.push_back({gs.terms_[j].m, std::move(v)});
        ++j;
      } else if (gt(terms_[i].m, gs.terms_[j].m)) {
        out.terms_.push_back(terms_[i++]);
      } else {
        Elem v = subtract ? field_.sub(terms_[i].c, gs.terms_[j].c)
                          : field_.add(terms_[i].c, gs.terms_[j].c);
        if (!field_.is_zero(v)) out.terms_.push_back({terms_[i].m, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  F field_;
  int nvars_;
  TermOrder order_;
  std::vector<Term> terms_;
};

using QPolynomial = Polynomial<Rationals>;
using FpPolynomial = Polynomial<PrimeField>;

}  // namespace betti
