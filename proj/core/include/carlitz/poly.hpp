/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/fq.hpp"

namespace carlitz {

/*
 * Univariate polynomial over F_q.
 *
 * The variable is anonymous: the same type serves F_q[T] (the base ring A,
 * variable printed as `T`) and the t-side coefficient rings (printed as `t`).
 * Coefficients are stored as field element indices in ascending degree with
 * no trailing zeros, so representations are canonical and equality is
 * componentwise. The degree of the zero polynomial is the marker kNegInf,
 * which compares below every true degree.
 */
class Poly {
 public:
  static constexpr int kNegInf = -1;

  explicit Poly(const FqField* f) : f_(f) {}

  static Poly zero(const FqField* f) { return Poly(f); }
  static Poly one(const FqField* f) { return constant(f->one()); }
  static Poly constant(FqElem c);
  /* The polynomial `x` (degree one, coefficients 0, 1). */
  static Poly var(const FqField* f);
  /* c * x^k. */
  static Poly monomial(FqElem c, int k);
  static Poly from_coeffs(const FqField* f, const std::vector<FqElem>& coeffs);

  const FqField* field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  /* Coefficient of x^k (zero beyond the degree; k must be >= 0). */
  FqElem coeff(int k) const;
  /* Leading coefficient; throws std::domain_error on the zero polynomial. */
  FqElem lc() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly times(FqElem c) const;
  /* This * x^k. */
  Poly times_power(int k) const;
  Poly pow(long long n) const;  // n >= 0
  /* Scaled to leading coefficient 1; throws std::domain_error on zero. */
  Poly monic() const;
  /* x -> x^(q^i): exponents spread by q^i, coefficients unchanged
   * (c^(q^i) = c for c in F_q). Equals this^(q^i) by char-p linearity. */
  Poly frob_pow(int i) const;

  FqElem eval(FqElem x) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /* Terms in decreasing degree; var names the variable, e.g. "T^3+2*T". */
  std::string str(char var = 'T') const;

  /* Raw index-level access for the arithmetic kernels. */
  const std::vector<std::uint16_t>& raw() const { return c_; }
  static Poly from_raw(const FqField* f, std::vector<std::uint16_t> c);

 private:
  void trim();

  const FqField* f_;
  std::vector<std::uint16_t> c_;
};

/* a = q*b + r with deg r < deg b; throws std::domain_error when b = 0. */
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
inline Poly operator/(const Poly& a, const Poly& b) { return poly_divmod(a, b).first; }
inline Poly operator%(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }
/* Quotient a/b when the division is exact, nullopt otherwise. */
std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b);
/* Monic gcd; throws std::domain_error when both arguments are zero. */
Poly poly_gcd(const Poly& a, const Poly& b);
/* (g, u, v) with u*a + v*b = g, g the monic gcd. */
std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Poly& a, const Poly& b);

/*
 * Element of the rational function field F_q(x), kept in canonical form:
 * the denominator is monic and nonzero, gcd(num, den) = 1, and zero is 0/1.
 * Every operation reduces eagerly, so equality is componentwise.
 */
class RatFunc {
 public:
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}
  RatFunc(Poly num, Poly den);

  static RatFunc zero(const FqField* f) { return RatFunc(Poly::zero(f)); }
  static RatFunc one(const FqField* f) { return RatFunc(Poly::one(f)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FqField* field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  /* Throws std::domain_error on zero. */
  RatFunc inverse() const;
  /* Integer power; negative n inverts first. */
  RatFunc pow(long long n) const;
  RatFunc frob_pow(int i) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /* "(num)/(den)", or the bare numerator text when the denominator is 1. */
  std::string str(char var = 'T') const;

 private:
  void reduce();

  Poly num_, den_;
};

/*
 * Text forms. The grammar accepted by the parsers is the one produced by
 * Poly::str / RatFunc::str: sums of terms `c`, `c*V^k`, `V^k`, `V`, with `+`
 * and `-`, parentheses, integer coefficients, and (for e > 1) coefficient
 * subexpressions in the field symbol `u`. parse_ratfunc additionally accepts
 * a single top-level `/`.
 * Both throw std::invalid_argument on malformed input.
 */
Poly parse_poly(const FqField* f, const std::string& text, char var = 'T');
RatFunc parse_ratfunc(const FqField* f, const std::string& text, char var = 'T');

}  // namespace carlitz
