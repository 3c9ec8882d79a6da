/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "carlitz/poly.hpp"

namespace carlitz {

/*
 * Bivariate polynomial in F_q[T, t], stored as rows indexed by t-degree with
 * each row a polynomial in T. No trailing zero rows, so forms are canonical.
 */
class BiPoly {
 public:
  explicit BiPoly(const FqField* f) : f_(f) {}

  static BiPoly zero(const FqField* f) { return BiPoly(f); }
  static BiPoly one(const FqField* f);
  static BiPoly constant(FqElem c);
  /* p(T) viewed in F_q[T, t]. */
  static BiPoly from_theta(const Poly& p);
  /* p as a polynomial in t with constant T-coefficients. */
  static BiPoly from_t(const Poly& p);
  /* c * t^k. */
  static BiPoly t_monomial(FqElem c, int k);

  const FqField* field() const { return f_; }
  bool is_zero() const { return rows_.empty(); }
  bool is_one() const;
  int t_degree() const { return static_cast<int>(rows_.size()) - 1; }
  int theta_degree() const;

  /* Coefficient of t^j as a polynomial in T (zero beyond the t-degree). */
  Poly row(int j) const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator+=(const BiPoly& b) { return *this = *this + b; }
  BiPoly& operator*=(const BiPoly& b) { return *this = *this * b; }

  BiPoly times(FqElem c) const;
  /* Multiply by a polynomial in T alone / in t alone. */
  BiPoly times_theta(const Poly& p) const;
  BiPoly times_t(const Poly& p) const;

  /* Exact division by a polynomial in t alone (F_q coefficients); nullopt
   * when the division leaves a remainder. */
  std::optional<BiPoly> divide_exact_t(const Poly& d) const;

  /* Monic gcd in F_q[t] of the t-slices: the largest t-only divisor. */
  Poly t_content() const;

  friend bool operator==(const BiPoly& a, const BiPoly& b);
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  /* Monomial text, t-degree falling then T-degree, e.g. "2*T^3*t^2+t+T^2". */
  std::string str(char theta_var = 'T', char t_var = 't') const;

 private:
  void trim();

  const FqField* f_;
  std::vector<Poly> rows_;
};

/*
 * Fraction over F_q[T, t] whose denominator is a monic polynomial in t
 * alone. This is exactly the shape arising while inverting the
 * Anderson-Thakur generating series, where every denominator is a product
 * of Carlitz D_i's evaluated at t. Fractions are reduced by the t-content
 * of the numerator; equality is decided by cross-multiplication.
 */
class BiRat {
 public:
  explicit BiRat(BiPoly num);
  BiRat(BiPoly num, Poly den);

  static BiRat zero(const FqField* f) { return BiRat(BiPoly::zero(f)); }
  static BiRat one(const FqField* f) { return BiRat(BiPoly::one(f)); }

  const BiPoly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend BiRat operator+(const BiRat& a, const BiRat& b);
  friend BiRat operator*(const BiRat& a, const BiRat& b);
  BiRat& operator+=(const BiRat& b) { return *this = *this + b; }
  BiRat& operator*=(const BiRat& b) { return *this = *this * b; }

  /* True when the two fractions represent the same element. */
  bool same_value(const BiRat& other) const;

  /* (scale * num) / den when that division is exact in F_q[T, t]; the
   * denominator-clearing step of the Anderson-Thakur construction. */
  std::optional<BiPoly> cleared(const Poly& scale_t) const;

 private:
  void reduce();

  BiPoly num_;
  Poly den_;  // monic, univariate in t
};

}  // namespace carlitz
