/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <map>
#include <optional>

#include "carlitz/anderson_thakur.hpp"
#include "carlitz/series.hpp"
#include "carlitz/stirling.hpp"

namespace carlitz {

/* Both sides of the depth-reduction identity, for callers that want to
 * inspect a failure rather than just test equality. */
struct RecursionSides {
  RatFunc lhs;
  RatFunc rhs;
};

/*
 * Bernoulli-Carlitz numbers BC_n, defined by z / e_C(z) = sum BC_n z^n / Pi(n),
 * and their multi-poly generalization BC^{s,j}_n attached to an index
 * s = (s_1..s_r) and a tuple j selecting Anderson-Thakur coefficients
 * u_{1 j_1}, ..., u_{r j_r}:
 *
 *   sum_n BC^{s,j}_n z^n / Pi(n)
 *     = Li_s(e_C(z) u_{1 j_1}, u_{2 j_2}, ..., u_{r j_r}) / e_C(z).
 *
 * Every quantity is available through two independent routes: a closed sum
 * over Stirling-Carlitz numbers, and a direct truncated-series expansion.
 * The series routes exist so the closed forms can be machine-checked; both
 * are exposed. Thread-safe, memoized.
 */
class Bernoulli {
 public:
  Bernoulli(const CarlitzCache& cache, StirlingTable& stirling)
      : cache_(cache), stirling_(stirling) {}

  /* BC_n by the closed sum over columns m = q^j - 1. */
  RatFunc bc(long long n);
  /* Truncation of z / e_C(z); coefficient of z^n is BC_n / Pi(n). */
  TruncSeries bc_series(int N);
  /* BC_n read off bc_series: the independent check value. */
  RatFunc bc_oracle(long long n);

  /* BC^{s,j}_n by the closed sum over strictly decreasing exponent chains. */
  RatFunc mpbcn(const IndexData& d, const JTuple& j, long long n);
  /* Truncation of Li_s(e_C u_{1j_1}, u_{2j_2}, ...) / e_C; coefficient of
   * z^n is BC^{s,j}_n / Pi(n). */
  TruncSeries mpbcn_series(const IndexData& d, const JTuple& j, int N);
  RatFunc mpbcn_oracle(const IndexData& d, const JTuple& j, long long n);

  /* BC^{(1,..,1),(0,..,0)}_n at depth r, via the all-ones closed sum whose
   * factors are ordinary BC values. Requires n >= q^(r-1) - 1. */
  RatFunc mpbcn_ones(int r, long long n);

  /* At n = q^m - 1 and depth >= 2, BC^{s,j}_n factors through the depth-one
   * value times a tail sum; returns both sides. Requires m >= depth - 1. */
  RecursionSides recursion_sides(const IndexData& d, const JTuple& j, int m);

  const CarlitzCache& cache() const { return cache_; }

 private:
  struct MPBCKey {
    std::vector<int> s;
    JTuple j;
    long long n;
    bool operator<(const MPBCKey& o) const;
  };
  struct SJKey {
    std::vector<int> s;
    JTuple j;
    bool operator<(const SJKey& o) const;
  };

  const TruncSeries& bc_series_locked(int N);
  const TruncSeries& mpbcn_series_locked(const IndexData& d, const JTuple& j, int N);
  RatFunc mpbcn_closed(const IndexData& d, const JTuple& j, long long n);

  const CarlitzCache& cache_;
  StirlingTable& stirling_;
  std::mutex mu_;
  std::map<long long, RatFunc> bc_memo_;
  std::optional<TruncSeries> bc_gen_;  // grows geometrically on demand
  std::map<MPBCKey, RatFunc> mpbcn_memo_;
  std::map<SJKey, TruncSeries> mpbcn_series_memo_;
};

}  // namespace carlitz
