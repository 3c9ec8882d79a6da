/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace testsupport;

namespace {

TruncSeries random_series(std::mt19937& rng, const FieldPtr& f, int order,
                          bool unit = false) {
  std::uniform_int_distribution<int> coeff_d(0, f->q() - 1);
  std::uniform_int_distribution<int> deg_d(0, 2);
  TruncSeries s(f.get(), order);
  for (int n = 0; n <= order; ++n) {
    std::vector<FqElem> num, den;
    for (int i = 0; i <= deg_d(rng); ++i) num.push_back(f->elem_at(coeff_d(rng)));
    Poly p = Poly::from_coeffs(f.get(), num);
    s.set_coeff(n, RatFunc(p, Poly::var(f.get()) + Poly::one(f.get())));
  }
  if (unit && s.coeff(0).is_zero()) s.set_coeff(0, RatFunc::one(f.get()));
  return s;
}

}  // namespace

TEST_CASE("series ring laws, random") {
  std::mt19937 rng(5150);
  FieldPtr f = field(3);
  for (int it = 0; it < 40; ++it) {
    TruncSeries a = random_series(rng, f, 12);
    TruncSeries b = random_series(rng, f, 12);
    TruncSeries c = random_series(rng, f, 12);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("order propagation and out-of-range reads") {
  FieldPtr f = field(2);
  TruncSeries a = TruncSeries::one(f.get(), 10);
  TruncSeries b = TruncSeries::one(f.get(), 6);
  CHECK((a + b).order() == 6);
  CHECK((a * b).order() == 6);
  CHECK_THROWS_AS((a + b).coeff(7), std::out_of_range);
  CHECK_THROWS_AS(a.coeff(11), std::out_of_range);
  CHECK_THROWS_AS(a.coeff(-1), std::out_of_range);
  CHECK(a.truncate(3).order() == 3);
}

TEST_CASE("inverse is a true inverse, unit constant required") {
  std::mt19937 rng(60);
  FieldPtr f = field(5);
  for (int it = 0; it < 25; ++it) {
    TruncSeries a = random_series(rng, f, 10, /*unit=*/true);
    TruncSeries prod = a * a.inverse();
    CHECK(prod == TruncSeries::one(f.get(), 10));
  }
  TruncSeries no_unit(f.get(), 4);
  no_unit.set_coeff(1, RatFunc::one(f.get()));
  CHECK_THROWS_AS(no_unit.inverse(), std::domain_error);
}

TEST_CASE("shift up and down") {
  FieldPtr f = field(3);
  TruncSeries a(f.get(), 8);
  a.set_coeff(2, RatFunc::one(f.get()));
  a.set_coeff(5, RatFunc(Poly::var(f.get())));
  TruncSeries up = a.shift_up(2);
  CHECK(up.coeff(4).is_one());
  CHECK(up.order() == 8);
  TruncSeries down = a.shift_down(2);
  CHECK(down.order() == 6);
  CHECK(down.coeff(0).is_one());
  CHECK(down.coeff(3) == RatFunc(Poly::var(f.get())));
  CHECK_THROWS_AS(a.shift_down(3), std::domain_error);
}

TEST_CASE("frobenius power of a series") {
  FieldPtr f = field(3);
  TruncSeries a(f.get(), 9);
  a.set_coeff(1, RatFunc(Poly::var(f.get())));          // T z
  a.set_coeff(2, RatFunc(Poly::one(f.get())));          // + z^2
  TruncSeries fr = a.frob_pow(1);
  CHECK(fr.order() == 9);
  CHECK(fr.coeff(3) == RatFunc(Poly::var(f.get())).pow(3));
  CHECK(fr.coeff(6).is_one());
  CHECK(fr.coeff(1).is_zero());
  // (a^q) equals multiplying a by itself q times, where orders permit
  TruncSeries cube = a * a * a;
  for (int n = 0; n <= 9; ++n) CHECK(cube.coeff(n) == fr.coeff(n));
}
