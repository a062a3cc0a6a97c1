#include "doctest.h"
#include "dgideal/field.hpp"

#include <stdexcept>

using namespace dgideal;

TEST_CASE("rational arithmetic is exact") {
  Field q = Field::rationals();
  // 1/3 + 1/6 = 1/2, no rounding anywhere
  Scalar a = q.from_fraction(1, 3), b = q.from_fraction(1, 6);
  CHECK(q.add(a, b) == q.from_fraction(1, 2));
  CHECK(q.mul(a, b) == q.from_fraction(1, 18));
  CHECK(q.sub(a, a) == q.zero());
  CHECK(q.div(a, b) == q.from_int(2));
  CHECK(q.neg(q.zero()) == q.zero());
  CHECK(q.inv(q.from_fraction(-7, 3)) == q.from_fraction(-3, 7));
  CHECK(q.characteristic() == 0);
  CHECK(q.name() == "Q");
}

TEST_CASE("fractions reduce to canonical form") {
  Field q = Field::rationals();
  CHECK(q.from_fraction(2, 4) == q.from_fraction(1, 2));
  CHECK(q.from_fraction(-2, -4) == q.from_fraction(1, 2));
  CHECK(q.from_fraction(2, -4) == q.from_fraction(-1, 2));
  CHECK(q.str(q.from_fraction(6, -4)) == "-3/2");
  CHECK(q.str(q.from_int(-5)) == "-5");
  CHECK(q.str(q.zero()) == "0");
}

TEST_CASE("division by zero throws") {
  Field q = Field::rationals();
  CHECK_THROWS_AS(q.inv(q.zero()), std::invalid_argument);
  CHECK_THROWS_AS(q.div(q.one(), q.zero()), std::invalid_argument);
  Field f5 = Field::prime(5);
  CHECK_THROWS_AS(f5.inv(f5.from_int(10)), std::invalid_argument);
}

TEST_CASE("prime field arithmetic") {
  Field f5 = Field::prime(5);
  CHECK(f5.add(f5.from_int(2), f5.from_int(4)) == f5.from_int(1));
  CHECK(f5.mul(f5.from_int(3), f5.from_int(4)) == f5.from_int(2));
  // 3 * 2 = 6 = 1, so 1/3 = 2
  CHECK(f5.inv(f5.from_int(3)) == f5.from_int(2));
  CHECK(f5.from_int(-1) == f5.from_int(4));
  CHECK(f5.from_int(5) == f5.zero());
  CHECK(f5.characteristic() == 5);
  CHECK(f5.name() == "F5");

  Field f2 = Field::prime(2);
  CHECK(f2.add(f2.one(), f2.one()) == f2.zero());
}

TEST_CASE("prime constructor rejects composites") {
  CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(91), std::invalid_argument);  // 7 * 13
  CHECK_NOTHROW(Field::prime(2));
  CHECK_NOTHROW(Field::prime(97));
}

TEST_CASE("parsing coefficients") {
  Field q = Field::rationals();
  CHECK(q.parse("3") == q.from_int(3));
  CHECK(q.parse("-7/3") == q.from_fraction(-7, 3));
  CHECK(q.parse("0") == q.zero());
  CHECK_THROWS_AS(q.parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(q.parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(q.parse(""), std::invalid_argument);

  Field f5 = Field::prime(5);
  CHECK(f5.parse("7") == f5.from_int(2));
  // 1/2 = 3 since 2 * 3 = 6 = 1
  CHECK(f5.parse("1/2") == f5.from_int(3));
  // denominator divisible by the characteristic is not an element
  CHECK_THROWS_AS(f5.parse("1/5"), std::invalid_argument);
  CHECK_THROWS_AS(f5.parse("3/10"), std::invalid_argument);
}

TEST_CASE("str and parse round trip") {
  Field q = Field::rationals();
  for (const char* s : {"0", "1", "-1", "2/3", "-22/7", "100"}) {
    CHECK(q.str(q.parse(s)) == s);
  }
  Field f7 = Field::prime(7);
  for (int k = 0; k < 7; ++k) {
    Scalar v = f7.from_int(k);
    CHECK(f7.parse(f7.str(v)) == v);
  }
}

TEST_CASE("fields compare by kind and characteristic") {
  CHECK(Field::rationals() == Field::rationals());
  CHECK(Field::prime(5) == Field::prime(5));
  CHECK(Field::prime(5) != Field::prime(7));
  CHECK(Field::rationals() != Field::prime(2));
}
