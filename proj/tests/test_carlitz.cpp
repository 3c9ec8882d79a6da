/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include "doctest.h"
#include "support.hpp"

using namespace testsupport;

TEST_CASE("exp and log denominators: explicit small values") {
  CarlitzCache c2(field(2));
  CHECK(c2.exp_denom(0).is_one());
  CHECK(c2.exp_denom(1) == P(field(2), "T^2+T"));
  CHECK(c2.exp_denom(2) == P(field(2), "T^8+T^6+T^5+T^3"));
  CHECK(c2.log_denom(0).is_one());
  CHECK(c2.log_denom(1) == P(field(2), "T^2+T"));
  CHECK(c2.log_denom(2) == P(field(2), "T^6+T^5+T^3+T^2"));
}

TEST_CASE("denominator shapes for several q") {
  for (int p : {2, 3, 5}) {
    FieldPtr f = field(p);
    CarlitzCache cache(f);
    const int q = p;
    long long qi = 1;
    long long ldeg = 0;
    for (int i = 0; i <= 3; ++i) {
      Poly d = cache.exp_denom(i);
      Poly l = cache.log_denom(i);
      CHECK(d.is_monic());
      CHECK(d.degree() == i * qi);
      CHECK(l.degree() == ldeg);
      // leading coefficient of L_i is (-1)^i, kept literally
      CHECK(l.lc() == (i % 2 == 0 ? f->one() : -f->one()));
      qi *= q;
      ldeg += qi;
    }
  }
}

TEST_CASE("product recurrences against literal expansions") {
  for (int p : {2, 3}) {
    FieldPtr fp = field(p);
    const FqField* f = fp.get();
    CarlitzCache cache(fp);
    const Poly var = Poly::var(f);
    for (int i = 0; i <= 3; ++i) {
      Poly d = Poly::one(f);
      for (int j = 0; j < i; ++j) d *= var.frob_pow(i) - var.frob_pow(j);
      CHECK(cache.exp_denom(i) == d);
      Poly l = Poly::one(f);
      for (int j = 1; j <= i; ++j) l *= var - var.frob_pow(j);
      CHECK(cache.log_denom(i) == l);
    }
  }
}

TEST_CASE("q-adic digits and factorial") {
  CarlitzCache c3(field(3));
  CHECK(c3.digits(0).empty());
  CHECK(c3.digits(14) == std::vector<int>{2, 1, 1});  // 14 = 2 + 3 + 9
  CHECK(c3.factorial(0).is_one());
  // Pi(n) = prod D_i^(n_i)
  CHECK(c3.factorial(14) ==
        c3.exp_denom(0).pow(2) * c3.exp_denom(1) * c3.exp_denom(2));
  CHECK_THROWS_AS(c3.factorial(-1), std::invalid_argument);

  CarlitzCache c2(field(2));
  CHECK(c2.factorial(3) == c2.exp_denom(1));  // D_0 * D_1
  CHECK(c2.factorial(2) == c2.exp_denom(1));
}

TEST_CASE("gamma is factorial shifted, and is 1 up to s = q") {
  for (int p : {2, 3, 5}) {
    CarlitzCache cache(field(p));
    for (int s = 1; s <= p; ++s) CHECK(cache.gamma(s).is_one());
    CHECK(cache.gamma(p + 1) == cache.exp_denom(1));
    CHECK_THROWS_AS(cache.gamma(0), std::invalid_argument);
  }
}

TEST_CASE("exp and log series are mutually inverse") {
  for (int p : {2, 3}) {
    FieldPtr fp = field(p);
    const FqField* f = fp.get();
    CarlitzCache cache(fp);
    const int N = p * p * p;
    TruncSeries e = cache.exp_series(N);
    TruncSeries l = cache.log_series(N);
    // coefficient spot checks
    CHECK(e.coeff(1).is_one());
    CHECK(e.coeff(p) == RatFunc(Poly::one(f), cache.exp_denom(1)));
    CHECK(l.coeff(p) == RatFunc(Poly::one(f), cache.log_denom(1)));

    // log(exp(z)) as the literal composite sum_i exp^(q^i)/L_i
    TruncSeries composite(f, N);
    long long qi = 1;
    for (int i = 0; qi <= N; ++i, qi *= p)
      composite += e.frob_pow(i).scale(RatFunc(Poly::one(f), cache.log_denom(i)));
    TruncSeries z = TruncSeries::monomial(RatFunc::one(f), 1, N);
    CHECK(composite == z);

    // and the reverse composite exp(log(z))
    TruncSeries composite2(f, N);
    qi = 1;
    for (int i = 0; qi <= N; ++i, qi *= p)
      composite2 += l.frob_pow(i).scale(RatFunc(Poly::one(f), cache.exp_denom(i)));
    CHECK(composite2 == z);
  }
}

TEST_CASE("index validation and helpers") {
  CHECK_THROWS_AS(Index({}), std::invalid_argument);
  CHECK_THROWS_AS(Index({1, 0}), std::invalid_argument);
  Index s({2, 1, 3});
  CHECK(s.depth() == 3);
  CHECK(s.weight() == 6);
  CHECK(s.tail() == Index({1, 3}));
  CHECK(s.with_leading_ones(2) == Index({1, 1, 2, 1, 3}));
  CHECK(s.with_leading_ones(0) == s);
  CHECK(s.str() == "(2,1,3)");
}

TEST_CASE("depth-one polylog at weight one collapses to z") {
  // the first slot carries e_C(z), so depth one with s = (1) is log(exp(z))
  for (int p : {2, 3}) {
    FieldPtr fp = field(p);
    CarlitzCache cache(fp);
    const int N = p * p * p;
    TruncSeries li = cache.polylog_series(Index({1}), {Poly::one(fp.get())}, N);
    CHECK(li == TruncSeries::monomial(RatFunc::one(fp.get()), 1, N));
  }
}

TEST_CASE("polylog term structure at depth two") {
  FieldPtr fp = field(2);
  const FqField* f = fp.get();
  CarlitzCache cache(fp);
  const int N = 8;
  // s = (1,1), weights 1: sum over i_1 > i_2 >= 0 of e^(q^(i_1))/(L_(i_1) L_(i_2))
  TruncSeries li = cache.polylog_series(Index({1, 1}), {Poly::one(f), Poly::one(f)}, N);
  TruncSeries expect(f, N);
  TruncSeries e = cache.exp_series(N);
  for (int i1 = 1; (1LL << i1) <= N; ++i1)
    for (int i2 = 0; i2 < i1; ++i2)
      expect += e.frob_pow(i1).scale(
          RatFunc(Poly::one(f), cache.log_denom(i1) * cache.log_denom(i2)));
  CHECK(li == expect);
}

TEST_CASE("cache bound guards runaway growth") {
  CarlitzCache small(field(2), 3);
  CHECK(small.exp_denom(3).degree() == 3 * 8);
  CHECK_THROWS_AS(small.exp_denom(4), std::invalid_argument);
  CHECK_THROWS_AS(small.log_denom(4), std::invalid_argument);
}
