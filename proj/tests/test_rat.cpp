#include "tropic/rat.hpp"

#include "tropic/errors.hpp"

#include <doctest.h>

using namespace tropic;

TEST_CASE("parse integers, decimals and fractions") {
  CHECK(parse_rat("7") == Rat(7));
  CHECK(parse_rat("-12") == Rat(-12));
  CHECK(parse_rat("+3") == Rat(3));
  CHECK(parse_rat("4.3") == Rat(43, 10));
  CHECK(parse_rat("-0.5") == Rat(-1, 2));
  CHECK(parse_rat(".25") == Rat(1, 4));
  CHECK(parse_rat("43/10") == Rat(43, 10));
  CHECK(parse_rat("-6/4") == Rat(-3, 2));
  CHECK(parse_rat(" 2/6 ") == Rat(1, 3));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_rat("x"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rat("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_rat("1e3"), ParseError);
}

TEST_CASE("canonical form: lowest terms, positive denominator") {
  Rat v = parse_rat("-6/4");
  CHECK(numerator(v) == -3);
  CHECK(denominator(v) == 2);
  CHECK(format_rat(v) == "-3/2");
  CHECK(format_rat(Rat(8, 4)) == "2");
  CHECK(format_rat(Rat(0)) == "0");
}

TEST_CASE("format / parse round trip") {
  // LCG-style sweep over small numerators and denominators
  for (long long n = -50; n <= 50; ++n) {
    for (long long d = 1; d <= 9; ++d) {
      Rat v(n, d);
      CHECK(parse_rat(format_rat(v)) == v);
    }
  }
}

TEST_CASE("exact arithmetic") {
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(43, 10) * Rat(10, 43) == Rat(1));
  CHECK(Rat(1, 3) < Rat(34, 100) );
  CHECK(sign(Rat(-1, 7)) == -1);
  CHECK(sign(Rat(0)) == 0);
  CHECK(sign(Rat(5)) == 1);
}
