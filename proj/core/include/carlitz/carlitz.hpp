/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <mutex>
#include <vector>

#include "carlitz/series.hpp"

namespace carlitz {

/*
 * Composition index s = (s_1, ..., s_r), all parts >= 1, depth r >= 1.
 */
class Index {
 public:
  explicit Index(std::vector<int> parts);

  int depth() const { return static_cast<int>(s_.size()); }
  int weight() const;
  int part(int l) const { return s_.at(static_cast<std::size_t>(l)); }  // 0-based
  const std::vector<int>& parts() const { return s_; }

  /* (s_2, ..., s_r); requires depth >= 2. */
  Index tail() const;
  /* (1, ..., 1, s_1, ..., s_r) with dd leading ones. */
  Index with_leading_ones(int dd) const;

  friend bool operator==(const Index& a, const Index& b) { return a.s_ == b.s_; }
  friend bool operator<(const Index& a, const Index& b) { return a.s_ < b.s_; }

  std::string str() const;

 private:
  std::vector<int> s_;
};

/*
 * The quantities attached to the Carlitz module over A = F_q[T]:
 *
 *   D_i = prod_{j=0..i-1} (T^(q^i) - T^(q^j)),   D_0 = 1   (exp_denom)
 *   L_i = prod_{j=1..i}   (T - T^(q^j)),         L_0 = 1   (log_denom)
 *
 * D_i is monic of degree i*q^i; L_i has degree q + q^2 + ... + q^i and
 * leading coefficient (-1)^i. L_i is kept with exactly this sign, never
 * normalized: the sign carries through every identity downstream.
 *
 * The Carlitz factorial of n with q-adic digits n = sum n_i q^i is
 * factorial(n) = prod D_i^(n_i); gamma(s) = factorial(s - 1).
 *
 * Values are memoized up to the configured index bound i_max (i <= 6 covers
 * everything at desk scale; the bound guards accidental blowup, since
 * deg D_i grows like i*q^i). The cache is safe for concurrent use.
 */
class CarlitzCache {
 public:
  explicit CarlitzCache(FieldPtr field, int i_max = 12);

  const FqField* field() const { return field_.get(); }
  FieldPtr field_ptr() const { return field_; }
  int q() const { return field_->q(); }
  int i_max() const { return i_max_; }

  Poly exp_denom(int i) const;  // D_i
  Poly log_denom(int i) const;  // L_i

  /* q-adic digits of n, least significant first; empty for n = 0. */
  std::vector<int> digits(long long n) const;

  Poly factorial(long long n) const;      // Pi(n)
  Poly gamma(long long s) const;          // Gamma_s = Pi(s-1), s >= 1

  /* e_C(z) = sum z^(q^i)/D_i and log_C(z) = sum z^(q^i)/L_i to order N. */
  TruncSeries exp_series(int N) const;
  TruncSeries log_series(int N) const;

  /* The Carlitz multiple polylogarithm composite
   *   Li_s(e_C(z) w_1, w_2, ..., w_r)
   *     = sum_{i_1 > ... > i_r >= 0} e_C(z)^(q^(i_1))
   *         * w_1^(q^(i_1)) ... w_r^(q^(i_r)) / (L_(i_1)^(s_1) ... L_(i_r)^(s_r))
   * truncated at order N. The i_1 range is q^(i_1) <= N: the lowest term of
   * e_C(z)^(q^(i_1)) is z^(q^(i_1)), so nothing below the truncation is lost.
   */
  TruncSeries polylog_series(const Index& s, const std::vector<Poly>& weights,
                             int N) const;

 private:
  const Poly& d_locked(int i) const;
  const Poly& l_locked(int i) const;
  void check_bound(int i) const;

  FieldPtr field_;
  int i_max_;
  mutable std::mutex mu_;
  mutable std::vector<Poly> d_, l_;
};

}  // namespace carlitz
