/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <string>
#include <vector>

#include "constants.hpp"
#include "qparser.hpp"
#include "support.hpp"

using namespace infobound;
using testutil::rel_eq;

TEST_CASE("syntax trees") {
  CHECK(parse("1 GW * 10 fs").structure() == "((1 * GW) * (10 * fs))");
  CHECK(parse("1 kg * c^2").structure() == "((1 * kg) * (c ^ 2))");
  CHECK(parse("(1 m + 2 m) / 4 s").structure() ==
        "(((1 * m) + (2 * m)) / (4 * s))");
  CHECK(parse("-3 m").structure() == "(-(3 * m))");
}

TEST_CASE("evaluation of the pulse energy") {
  Quantity pulse = eval_expression("1 GW * 10 fs");
  CHECK(rel_eq(pulse.magnitude(), 1e-5, 1e-12));
  CHECK(pulse.dimension() == dim::energy);

  Quantity length = eval_expression("10 fs * c");
  CHECK(rel_eq(length.magnitude(), 2.99792458e-6, 1e-12));
  CHECK(length.dimension() == dim::length);

  Quantity rest = eval_expression("1 kg * c^2");
  CHECK(rel_eq(rest.magnitude(), 8.987551787368176e16, 1e-12));
  CHECK(rest.dimension() == dim::energy);

  Quantity entropy = eval_expression("1e23 kB");
  CHECK(rel_eq(entropy.magnitude(), 1.380649, 1e-12));
  CHECK(entropy.dimension() == dim::entropy);
}

TEST_CASE("precedence fixtures") {
  // left associativity of same-precedence operators
  Quantity v = eval_expression("12 m / 2 s * 3");
  CHECK(rel_eq(v.magnitude(), 18.0, 1e-15));
  CHECK(v.dimension() == dim::speed);

  // power binds tighter than division
  Quantity w = eval_expression("12 / 2 ^ 2");
  CHECK(w.magnitude() == 3.0);
  CHECK(w.dimensionless());

  // multiplication binds tighter than addition
  Quantity x = eval_expression("2 m + 3 m * 2");
  CHECK(x.magnitude() == 8.0);
  CHECK(x.dimension() == dim::length);
}

TEST_CASE("unary minus") {
  CHECK(eval_expression("-3").magnitude() == -3.0);
  CHECK(eval_expression("-3 m").magnitude() == -3.0);
  CHECK(eval_expression("-2 ^ 2").magnitude() == 4.0);
  CHECK(eval_expression("1 - -2").magnitude() == 3.0);
  // '^' applies to the whole juxtaposed atom
  Quantity inv = eval_expression("6 s^-1");
  CHECK(inv.dimension() == -dim::time);
  CHECK(rel_eq(inv.magnitude(), 1.0 / 6.0, 1e-15));
}

TEST_CASE("constants resolve inside expressions") {
  CHECK(eval_expression("c").magnitude() == 299792458.0);
  CHECK(eval_expression("hbar").dimension() == Dimension{1, 2, -1, 0});
  CHECK(eval_expression("G").magnitude() == 6.67430e-11);
  CHECK(eval_expression("kB").magnitude() == 1.380649e-23);
  CHECK(eval_expression("kB").dimension() == dim::entropy);
}

TEST_CASE("parse errors carry offsets") {
  SUBCASE("non-integer exponent") {
    try {
      parse("2 ^ x");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::parse);
      CHECK(e.offset() == 4);
      CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
    }
  }

  SUBCASE("unknown symbol") {
    try {
      parse("1 parsec");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::parse);
      CHECK(e.offset() == 2);
      CHECK(std::string(e.what()).find("parsec") != std::string::npos);
    }
  }

  SUBCASE("malformed inputs never report out-of-range offsets") {
    const std::vector<std::string> bad = {
        "",      "2 +",    "(1 m",  ") m",   "1 !",  "foo",
        "2 ^ x", "1 ** 2", "m s",   "1e999", "^ 2",  "2 ^ 3.5",
        "1 / ",  "((2)",   "2 ^ -", "\xE2\x82\xAC"};
    for (const std::string& text : bad) {
      try {
        parse(text);
        FAIL(("expected a parse error for: " + text).c_str());
      } catch (const Error& e) {
        CHECK(e.code() == errc::parse);
        CHECK(e.offset() <= text.size());
      }
    }
  }
}

TEST_CASE("evaluation errors carry the offending span") {
  try {
    eval(parse("1 m + 1 J"));
    FAIL("expected a dimension error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::dimension);
    CHECK(e.offset() == 0);
    CHECK(e.end_offset() == 9);
    std::string what = e.what();
    CHECK(what.find("dimension mismatch (length vs energy)") !=
          std::string::npos);
    CHECK(what.find("1 m + 1 J") != std::string::npos);
  }

  try {
    eval(parse("2 s + (1 / (0 * s))"));
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::domain);
    CHECK(std::string(e.what()).find("zero divisor") != std::string::npos);
    CHECK(e.offset() <= 19);
  }
}

TEST_CASE("juxtaposition is number-symbol only") {
  CHECK_THROWS_AS(parse("m s"), Error);       // two symbols need '*'
  CHECK_THROWS_AS(parse("2 3"), Error);       // two numbers too
  CHECK(eval_expression("2 c").magnitude() == 2.0 * 299792458.0);
}

TEST_CASE("canonical rendering") {
  CHECK(render(Quantity(2.5, dim::momentum), 6) == "2.5 * kg * m * s^-1");
  CHECK(render(Quantity(42.0, dim::dimensionless), 6) == "42");
  CHECK(render(Quantity(-3.0, dim::length), 6) == "-3 * m");
  CHECK(render(Quantity(0.1, dim::length), 6) == "0.1 * m");
}

TEST_CASE("round trip through render and parse") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    double mag = testutil::log_uniform(rng, 1e-20, 1e20);
    if (testutil::uniform(rng, 0.0, 1.0) < 0.5) mag = -mag;
    Dimension d{testutil::uniform_int(rng, -4, 4),
                testutil::uniform_int(rng, -4, 4),
                testutil::uniform_int(rng, -4, 4),
                testutil::uniform_int(rng, -4, 4)};
    Quantity q(mag, d);
    Quantity back = eval_expression(render(q));
    CHECK(back.dimension() == q.dimension());
    CHECK(rel_eq(back.magnitude(), q.magnitude(), 1e-12));
  }
}

TEST_CASE("value_in") {
  CHECK(rel_eq(value_in(eval_expression("1 GW * 10 fs"), "uJ"), 10.0, 1e-12));
  CHECK(rel_eq(value_in(Quantity(2.577e42, dim::dimensionless), "bit"),
               2.577e42, 1e-12));
  CHECK(rel_eq(value_in(Quantity(1.380649, dim::entropy), "kB"), 1e23, 1e-12));
  CHECK(rel_eq(value_in(Quantity(3.0, dim::entropy), "J / K"), 3.0, 1e-12));
  CHECK_THROWS_AS(value_in(Quantity(1.0, dim::energy), "m"), Error);
  CHECK_THROWS_AS(value_in(Quantity(1.0, dim::energy), "zorg"), Error);
}
