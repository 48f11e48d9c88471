#include <doctest.h>

#include <random>

#include "pathdepth/ideal_io.hpp"
#include "support.hpp"

using namespace pathdepth;

TEST_SUITE("ideal-io") {
  TEST_CASE("parsing builds canonical ideals") {
    const auto a = parse_ideal("x1*x2*x3");
    CHECK(a.num_vars() == 3);
    CHECK(a.generators()[0] == testing::mono({1, 1, 1}));

    const auto b = parse_ideal("x1^2*x2, x2*x3");
    CHECK_FALSE(b.is_squarefree());
    CHECK(b.size() == 2);

    CHECK(parse_ideal("x1*x1") == parse_ideal("x1^2"));
    CHECK(parse_ideal(" x2 * x3 ,x1*x2 ") == parse_ideal("x1*x2, x2*x3"));
    CHECK(parse_ideal("x1", 4).num_vars() == 4);
    CHECK(parse_ideal("0", 3).is_zero());
  }

  TEST_CASE("malformed text reports the offending position") {
    const auto position_of = [](const char* text) -> std::size_t {
      try {
        (void)parse_ideal(text);
      } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
        return e.position();
      }
      FAIL("no parse error for " << text);
      return 0;
    };
    CHECK(position_of("x1*y2") == 3);
    CHECK(position_of("x0") == 1);
    CHECK(position_of("x1,") == 3);
    CHECK(position_of("x1^") == 3);
    CHECK(position_of("") == 0);
  }

  TEST_CASE("parsing rejects the unit and undersized rings") {
    CHECK_THROWS_AS(parse_ideal("x1^0"), Error);
    CHECK_THROWS_AS(parse_ideal("x3", 2), Error);
    CHECK_THROWS_AS(parse_ideal("0"), Error);
  }

  TEST_CASE("printing uses the grammar and the canonical order") {
    CHECK(format_ideal(parse_ideal("x2*x3, x1^2*x3, x1*x2")) == "x1*x2, x2*x3, x1^2*x3");
    CHECK(format_ideal(MonomialIdeal::zero(RingContext(2))) == "0");
  }

  TEST_CASE("print then parse is the identity on random ideals") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + trial % 6;
      const auto i = testing::random_ideal(rng, n, 6, 3);
      CHECK(parse_ideal(format_ideal(i), n) == i);
      CHECK(ideal_from_json(ideal_to_json(i)) == i);
    }
  }

  TEST_CASE("json form lists exponent vectors") {
    const auto j = ideal_to_json(parse_ideal("x1^2*x3, x2", 3));
    CHECK(j.dump() == R"({"generators":[[0,1,0],[2,0,1]],"num_vars":3})");
    CHECK_THROWS(ideal_from_json(nlohmann::json::parse(R"({"num_vars":2,"generators":[[1]]})")));
  }
}
