// Exact coefficient fields: arbitrary-precision rationals and prime fields.
#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace betti {

// Runtime descriptor used by IO / dispatch layers.
struct CoeffField {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;  // modulus when kind == Prime

  static CoeffField rationals() { return {Kind::Rationals, 0}; }
  static CoeffField prime(std::uint64_t p) { return {Kind::Prime, p}; }

  bool operator==(const CoeffField&) const = default;

  std::string name() const {
    return kind == Kind::Rationals ? "rational" : "fp:" + std::to_string(p);
  }
};

// Field of rationals backed by GMP.
struct Rationals {
  using Elem = mpq_class;

  static constexpr bool is_prime = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem from_rational(const mpq_class& q) const { return q; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw std::domain_error("division by zero");
    return a / b;
  }
  Elem inv(const Elem& a) const { return div(one(), a); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  CoeffField descriptor() const { return CoeffField::rationals(); }
  bool operator==(const Rationals&) const { return true; }
};

// F_p with p an odd prime fitting in 32 bits; elements stored as [0, p).
class PrimeField {
 public:
  using Elem = std::uint64_t;

  static constexpr bool is_prime = true;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || !probably_prime(p)) throw std::invalid_argument("modulus must be prime");
    if (p >= (1ull << 31)) throw std::invalid_argument("modulus too large");
  }

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<Elem>(r);
  }
  // Maps a/b into F_p; b must be invertible mod p.
  Elem from_rational(const mpq_class& q) const {
    mpz_class num = q.get_num() % static_cast<long>(p_);
    mpz_class den = q.get_den() % static_cast<long>(p_);
    Elem a = from_int(num.get_si());
    Elem b = from_int(den.get_si());
    if (b == 0) throw std::domain_error("denominator divisible by modulus");
    return mul(a, inv(b));
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero");
    // extended Euclid
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  std::string to_string(Elem a) const { return std::to_string(a); }
  CoeffField descriptor() const { return CoeffField::prime(p_); }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  static bool probably_prime(std::uint64_t n) {
    if (n < 4) return n >= 2;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

  std::uint64_t p_;
};

}  // namespace betti
