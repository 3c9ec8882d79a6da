/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <map>

#include "carlitz/carlitz.hpp"

namespace carlitz {

/* Sum of the q-adic digits of n (lambda in the vanishing criterion). */
int digit_sum(int q, long long n);

/*
 * Stirling-Carlitz numbers of the second kind, defined by
 *
 *   e_C(z)^m / Pi(m) = sum_n {n brace m}_C z^n / Pi(n),
 *
 * so {n brace m}_C = Pi(n) * [z^n] (e_C(z)^m / Pi(m)) as an element of
 * F_q(T). The column series for each m is built once via the q-adic
 * decomposition of m (a product of Frobenius powers of e_C) and cached with
 * its computed order; values are memoized per (n, m). Thread-safe.
 */
class StirlingTable {
 public:
  explicit StirlingTable(const CarlitzCache& cache) : cache_(cache) {}

  RatFunc value(long long n, long long m);

  /* e_C(z)^m / Pi(m) to order at least N (the cached column may be longer). */
  TruncSeries column_series(long long m, int N);

  const CarlitzCache& cache() const { return cache_; }

 private:
  const TruncSeries& column_locked(long long m, int N);

  const CarlitzCache& cache_;
  std::mutex mu_;
  std::map<long long, TruncSeries> columns_;
};

}  // namespace carlitz
