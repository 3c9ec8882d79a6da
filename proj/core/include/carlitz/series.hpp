/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <vector>

#include "carlitz/poly.hpp"

namespace carlitz {

/*
 * Formal power series over F_q(T), truncated at an explicit order N: the
 * coefficients of z^0 .. z^N are known exactly and reading past N throws.
 * Binary operations propagate the minimum of the operand orders, so a
 * coefficient is never fabricated from incomplete data.
 *
 * Multiplication and inversion skip zero coefficients; the series in this
 * library are mostly supported on q-power exponents, and the cost collapses
 * accordingly.
 */
class TruncSeries {
 public:
  TruncSeries(const FqField* f, int order);

  static TruncSeries zero(const FqField* f, int order) { return {f, order}; }
  static TruncSeries one(const FqField* f, int order);
  /* The monomial c * z^k (k <= order). */
  static TruncSeries monomial(RatFunc c, int k, int order);

  const FqField* field() const { return f_; }
  int order() const { return order_; }

  /* Coefficient of z^n; throws std::out_of_range for n < 0 or n > order. */
  const RatFunc& coeff(int n) const;
  void set_coeff(int n, RatFunc c);

  bool is_zero() const;

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries& operator+=(const TruncSeries& b) { return *this = *this + b; }
  TruncSeries& operator*=(const TruncSeries& b) { return *this = *this * b; }

  TruncSeries scale(const RatFunc& c) const;

  /* Multiplicative inverse to the same order; requires a nonzero constant
   * term (throws std::domain_error otherwise). */
  TruncSeries inverse() const;

  /* this(z)^(q^i): the coefficient of z^n moves to z^(n*q^i) and is raised
   * to the q^i-th power; exact in characteristic p. Order is preserved. */
  TruncSeries frob_pow(int i) const;

  /* Multiply by z^k: coefficients above the order fall away. */
  TruncSeries shift_up(int k) const;
  /* Divide by z^k; the k lowest coefficients must be zero
   * (throws std::domain_error otherwise). Order drops by k. */
  TruncSeries shift_down(int k) const;

  /* Truncate to a smaller order (no-op when m >= order). */
  TruncSeries truncate(int m) const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b);
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

 private:
  const FqField* f_;
  int order_;
  std::vector<RatFunc> c_;  // size order_+1
};

}  // namespace carlitz
