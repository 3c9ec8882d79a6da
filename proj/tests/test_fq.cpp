/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include "doctest.h"
#include "support.hpp"

using namespace testsupport;

namespace {

/* Exhaustive laws on a small field: associativity, commutativity,
 * distributivity, inverses, Frobenius additivity. */
void check_field_laws(const FieldPtr& f) {
  const int q = f->q();
  for (int a = 0; a < q; ++a) {
    FqElem x = f->elem_at(a);
    CHECK(x + f->zero() == x);
    CHECK(x * f->one() == x);
    CHECK((x - x).is_zero());
    if (!x.is_zero()) {
      CHECK((x * x.inv()) == f->one());
      CHECK(x.pow(q - 1) == f->one());
    }
    CHECK(x.pow(q) == x);  // the q-power map fixes every element
    for (int b = 0; b < q; ++b) {
      FqElem y = f->elem_at(b);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y).frobenius(1) == x.frobenius(1) + y.frobenius(1));
      for (int c = 0; c < q; ++c) {
        FqElem z = f->elem_at(c);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
    }
  }
}

}  // namespace

TEST_CASE("prime and prime-power field laws, exhaustive") {
  for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 3},
                      {5, 2}, {2, 4}, {23, 1}}) {
    CAPTURE(p);
    CAPTURE(e);
    check_field_laws(field(p, e));
  }
}

TEST_CASE("x^q = x holds exactly on every element") {
  for (auto [p, e] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    FieldPtr f = field(p, e);
    for (int a = 0; a < f->q(); ++a) {
      FqElem x = f->elem_at(a);
      CHECK(x.pow(f->q()) == x);
      CHECK(x.frobenius(e) == x);  // full Frobenius orbit closes
    }
  }
}

TEST_CASE("default reduction polynomials and generators") {
  // F_4 = F_2[u]/(u^2+u+1)
  FieldPtr f4 = field(2, 2);
  CHECK(f4->modulus() == std::vector<int>{1, 1, 1});
  CHECK(f4->to_string(f4->generator().index()) == "u");
  // F_9 = F_3[u]/(u^2+1)
  FieldPtr f9 = field(3, 2);
  CHECK(f9->modulus() == std::vector<int>{1, 0, 1});
  // F_5: smallest generator is 2
  FieldPtr f5 = field(5);
  CHECK(f5->generator() == f5->from_int(2));
}

TEST_CASE("generator has full multiplicative order") {
  for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {7, 1}, {2, 2}, {3, 2}, {2, 4}}) {
    FieldPtr f = field(p, e);
    FqElem g = f->generator();
    int order = 1;
    FqElem x = g;
    while (!(x == f->one())) {
      x = x * g;
      ++order;
      REQUIRE(order <= f->q());
    }
    CHECK(order == f->q() - 1);
  }
}

TEST_CASE("field construction rejects bad parameters") {
  CHECK_THROWS_AS(FqField::create(4, 1), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(FqField::create(2, 0), std::invalid_argument);   // bad extension
  CHECK_THROWS_AS(FqField::create(101, 2), std::invalid_argument); // over default limit
  CHECK_THROWS_AS(FqField::create(2, 2, std::vector<int>{1, 0, 1}),
                  std::invalid_argument);  // u^2+1 reducible over F_2
  // raising the cap works up to the hard limit
  CHECK(FqField::create(101, 1, std::nullopt, 128)->q() == 101);
  CHECK_THROWS_AS(FqField::create(521, 1, std::nullopt, 1024), std::invalid_argument);
}

TEST_CASE("division by zero throws") {
  FieldPtr f = field(3);
  CHECK_THROWS_AS(f->zero().inv(), std::domain_error);
  CHECK_THROWS_AS(f->one() / f->zero(), std::domain_error);
}

TEST_CASE("cross-field arithmetic is rejected, same-value fields are accepted") {
  FieldPtr f1 = field(2, 2);
  FieldPtr f2 = field(3);
  CHECK_THROWS_AS(f1->one() + f2->one(), std::invalid_argument);
  FieldPtr f3 = field(2, 2);  // distinct object, identical field
  CHECK(f1->one() + f3->one() == f1->zero());
}

TEST_CASE("element text round trip") {
  FieldPtr f9 = field(3, 2);
  for (int a = 0; a < 9; ++a) {
    std::string s = f9->to_string(static_cast<std::uint16_t>(a));
    // the printed form re-parses to the same constant polynomial
    Poly back = P(f9, s);
    CHECK(back.degree() <= 0);
    CHECK(back.coeff(0) == f9->elem_at(a));
  }
  CHECK(f9->to_string(f9->from_int(2).index()) == "2");
}
