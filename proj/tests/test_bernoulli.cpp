/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include "doctest.h"
#include "support.hpp"

using namespace testsupport;

namespace {

struct Kit {
  FieldPtr f;
  CarlitzCache cache;
  StirlingTable stirling;
  AndersonThakur at;
  Bernoulli bern;

  explicit Kit(FieldPtr fld, int i_max = 12)
      : f(std::move(fld)), cache(f, i_max), stirling(cache), at(cache),
        bern(cache, stirling) {}
};

}  // namespace

TEST_CASE("hand-expanded small values over F_2") {
  Kit k(field(2));
  CHECK(k.bern.bc(0).is_one());
  CHECK(k.bern.bc(1) == R(k.f, "1/(T^2+T)"));
  // coefficient of z^3 in z/e_C is 1/D_2 + 1/D_1^3; scaling by Pi(3) = D_1
  // collapses it to 1/(T^4+T)
  CHECK(k.bern.bc(3) == R(k.f, "1/(T^4+T)"));
}

TEST_CASE("closed sum matches the generating series") {
  for (int p : {2, 3, 5}) {
    Kit k(field(p));
    for (long long n = 0; n <= static_cast<long long>(p) * p; ++n) {
      CAPTURE(p);
      CAPTURE(n);
      CHECK(k.bern.bc(n) == k.bern.bc_oracle(n));
    }
  }
}

TEST_CASE("vanishing off the (q-1) lattice") {
  for (int p : {3, 5}) {
    Kit k(field(p));
    for (long long n = 1; n <= 2LL * p; ++n)
      if (n % (p - 1) != 0) {
        CAPTURE(p);
        CAPTURE(n);
        CHECK(k.bern.bc(n).is_zero());
      }
  }
  Kit k4(field(2, 2));
  CHECK(k4.bern.bc(1).is_zero());
  CHECK(k4.bern.bc(2).is_zero());
  CHECK(!k4.bern.bc(3).is_zero());
}

TEST_CASE("values at n = q^i - 1") {
  // BC_{q^i - 1} = Pi(q^i - 1) / L_i, and Pi(q^i - 1) = prod_{m<i} D_m^(q-1)
  for (int p : {2, 3}) {
    Kit k(field(p));
    const FqField* f = k.f.get();
    long long qi = 1;
    for (int i = 0; i <= 3; ++i, qi *= p) {
      RatFunc pi = RatFunc(k.cache.factorial(qi - 1));
      CAPTURE(p);
      CAPTURE(i);
      CHECK(k.bern.bc(qi - 1) == pi / RatFunc(k.cache.log_denom(i)));
      Poly prod = Poly::one(f);
      for (int m = 0; m < i; ++m)
        prod = prod * k.cache.exp_denom(m).pow(p - 1);
      CHECK(pi == RatFunc(prod));
    }
  }
}

TEST_CASE("factorial jump between consecutive denominators") {
  // D_m^(q-1) = -D_{m+1} / (D_m * (T - T^(q^(m+1)))), the step that links
  // Pi(q^m - 1) to Pi(q^(m+1) - 1)
  for (int p : {2, 3, 5}) {
    Kit k(field(p));
    const FqField* f = k.f.get();
    long long qm1 = p;  // q^(m+1)
    for (int m = 0; m <= 2; ++m, qm1 *= p) {
      Poly shift = Poly::var(f) - Poly::var(f).pow(qm1);
      RatFunc lhs = RatFunc(k.cache.exp_denom(m).pow(p - 1));
      RatFunc rhs = RatFunc(-k.cache.exp_denom(m + 1)) /
                    RatFunc(k.cache.exp_denom(m) * shift);
      CAPTURE(p);
      CAPTURE(m);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("depth one with trivial weight reduces to plain values") {
  for (int p : {2, 3}) {
    Kit k(field(p));
    IndexData d = k.at.index_data(Index({1}));
    for (long long n = 0; n <= static_cast<long long>(p) * p; ++n) {
      CAPTURE(p);
      CAPTURE(n);
      CHECK(k.bern.mpbcn(d, {0}, n) == k.bern.bc(n));
    }
  }
}

TEST_CASE("frozen depth-two value over F_2") {
  Kit k(field(2));
  IndexData d = k.at.index_data(Index({1, 1}));
  CHECK(k.bern.mpbcn(d, {0, 0}, 2) ==
        RatFunc::one(k.f.get()) / RatFunc(k.cache.log_denom(1)));
}

TEST_CASE("closed chains match the polylog series") {
  for (int p : {2, 3}) {
    Kit k(field(p));
    const long long N = static_cast<long long>(p) * p;
    for (const auto& parts : {std::vector<int>{2}, {1, 1}, {2, 1}, {1, 2}}) {
      IndexData d = k.at.index_data(Index(parts));
      for (const JTuple& j : j_tuples(d)) {
        for (long long n = 0; n <= N; ++n) {
          CAPTURE(p);
          CAPTURE(Index(parts).str());
          CAPTURE(n);
          CHECK(k.bern.mpbcn(d, j, n) == k.bern.mpbcn_oracle(d, j, n));
        }
      }
    }
  }
}

TEST_CASE("multi-index values vanish off the (q-1) lattice") {
  for (int p : {3, 5}) {
    Kit k(field(p));
    IndexData d = k.at.index_data(Index({1, 1}));
    for (long long n = 1; n <= 2LL * p; ++n)
      if (n % (p - 1) != 0) {
        CAPTURE(p);
        CAPTURE(n);
        CHECK(k.bern.mpbcn(d, {0, 0}, n).is_zero());
      }
  }
}

TEST_CASE("all-ones shortcut agrees with the general chain sum") {
  for (int p : {2, 3}) {
    Kit k(field(p));
    const long long q = p;
    for (int r = 1; r <= 3; ++r) {
      std::vector<int> parts(static_cast<std::size_t>(r), 1);
      IndexData d = k.at.index_data(Index(parts));
      JTuple zeros(static_cast<std::size_t>(r), 0);
      long long lo = 1;
      for (int i = 0; i < r - 1; ++i) lo *= q;
      for (long long n = lo - 1; n <= q * q; ++n) {
        CAPTURE(p);
        CAPTURE(r);
        CAPTURE(n);
        CHECK(k.bern.mpbcn_ones(r, n) == k.bern.mpbcn(d, zeros, n));
      }
    }
  }
}

TEST_CASE("all-ones shortcut rejects n below its valid range") {
  Kit k(field(3));
  CHECK_THROWS_AS(k.bern.mpbcn_ones(3, 7), std::domain_error);  // needs n >= 8
  CHECK_NOTHROW(k.bern.mpbcn_ones(3, 8));
  CHECK_THROWS_AS(k.bern.mpbcn_ones(0, 5), std::invalid_argument);
}

TEST_CASE("depth reduction at n = q^m - 1") {
  for (int p : {2, 3}) {
    Kit k(field(p));
    for (const auto& parts : {std::vector<int>{1, 1}, {2, 1}, {1, 2}, {1, 1, 1}}) {
      IndexData d = k.at.index_data(Index(parts));
      const int r = static_cast<int>(parts.size());
      for (const JTuple& j : j_tuples(d)) {
        for (int m = r - 1; m <= 4; ++m) {
          RecursionSides sides = k.bern.recursion_sides(d, j, m);
          CAPTURE(p);
          CAPTURE(Index(parts).str());
          CAPTURE(m);
          CHECK(sides.lhs == sides.rhs);
        }
      }
    }
  }
}

TEST_CASE("depth reduction argument checking") {
  Kit k(field(2));
  IndexData one = k.at.index_data(Index({1}));
  CHECK_THROWS_AS(k.bern.recursion_sides(one, {0}, 3), std::invalid_argument);
  IndexData d = k.at.index_data(Index({1, 1, 1}));
  CHECK_THROWS_AS(k.bern.recursion_sides(d, {0, 0, 0}, 1), std::domain_error);
}
