/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include "doctest.h"
#include "support.hpp"

using namespace testsupport;

TEST_CASE("digit sums") {
  CHECK(digit_sum(2, 0) == 0);
  CHECK(digit_sum(2, 7) == 3);
  CHECK(digit_sum(3, 14) == 4);  // 14 = 2 + 3 + 9
  CHECK(digit_sum(5, 24) == 8);  // 24 = 4 + 4*5
  CHECK_THROWS_AS(digit_sum(2, -1), std::invalid_argument);
  CHECK_THROWS_AS(digit_sum(1, 3), std::invalid_argument);
}

TEST_CASE("basic laws, exhaustive on a grid") {
  for (int p : {2, 3}) {
    FieldPtr f = field(p);
    CarlitzCache cache(f);
    StirlingTable st(cache);
    const long long top = static_cast<long long>(p) * p * p;
    for (long long n = 0; n <= top; ++n) {
      CAPTURE(p);
      CAPTURE(n);
      // {n, 0} is 1 at n = 0 and 0 otherwise
      CHECK(st.value(n, 0) == (n == 0 ? RatFunc::one(f.get()) : RatFunc::zero(f.get())));
      // {n, n} = 1
      CHECK(st.value(n, n).is_one());
      // {n, m} = 0 for m > n
      CHECK(st.value(n, n + 1).is_zero());
      CHECK(st.value(n, n + 7).is_zero());
    }
  }
}

TEST_CASE("digit-sum vanishing") {
  for (int p : {2, 3}) {
    FieldPtr f = field(p);
    CarlitzCache cache(f);
    StirlingTable st(cache);
    const long long top = static_cast<long long>(p) * p * p;
    for (long long n = 0; n <= top; ++n)
      for (long long m = 0; m <= n; ++m)
        if (digit_sum(p, n) > digit_sum(p, m)) {
          CAPTURE(n);
          CAPTURE(m);
          CHECK(st.value(n, m).is_zero());
        }
  }
}

TEST_CASE("q-power column dichotomy") {
  for (int p : {2, 3}) {
    FieldPtr f = field(p);
    CarlitzCache cache(f);
    StirlingTable st(cache);
    long long qm = 1;
    for (int m = 0; m <= 3; ++m) {
      long long qi = 1;
      for (int i = 0; i <= 3; ++i) {
        RatFunc v = st.value(qm - 1, qi - 1);
        if (m == i)
          CHECK(v.is_one());
        else if (m > i)
          CHECK(v.is_zero());
        qi *= p;
      }
      qm *= p;
    }
  }
}

TEST_CASE("explicit small values over F_2") {
  FieldPtr f = field(2);
  CarlitzCache cache(f);
  StirlingTable st(cache);
  CHECK(st.value(2, 1).is_one());             // Pi(2)/D_1
  CHECK(st.value(3, 1).is_zero());            // z^3 outside the support of e_C
  CHECK(st.value(3, 3).is_one());
  // {4, 1} = Pi(4)/D_2 = 1: 4 = q^2
  CHECK(st.value(4, 1).is_one());
  // {5, 3}: e^3/Pi(3) has z^5 = z^(4+1) with coefficient 1/D_2 + 1/D_1^3 off
  // by the factorial normalizations; check against a literal expansion
  TruncSeries e = cache.exp_series(8);
  TruncSeries col = e * e.frob_pow(1);  // e^3 = e * e^2
  RatFunc expect = col.coeff(5) * RatFunc(cache.factorial(5), cache.factorial(3));
  CHECK(st.value(5, 3) == expect);
  CHECK(!st.value(5, 3).is_zero());
}

TEST_CASE("generating function round trip") {
  // reconstruct each column from stored values: the defining identity read
  // backwards, sum_n {n,m} z^n/Pi(n) = e^m/Pi(m)
  for (int p : {2, 3}) {
    FieldPtr fp = field(p);
    const FqField* f = fp.get();
    CarlitzCache cache(fp);
    StirlingTable st(cache);
    const int N = p * p * p;
    for (long long m = 0; m <= static_cast<long long>(p) * p; ++m) {
      TruncSeries rebuilt(f, N);
      for (int n = 0; n <= N; ++n)
        rebuilt.set_coeff(
            n, st.value(n, m) * RatFunc(Poly::one(f), cache.factorial(n)));
      CHECK(rebuilt == st.column_series(m, N));
    }
  }
}

TEST_CASE("argument validation") {
  CarlitzCache cache(field(2));
  StirlingTable st(cache);
  CHECK_THROWS_AS(st.value(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(st.value(0, -2), std::invalid_argument);
}
