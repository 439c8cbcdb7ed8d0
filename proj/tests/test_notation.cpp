#include <doctest.h>

#include <random>

#include "affkl/coxeter.hpp"
#include "affkl/lemmas.hpp"
#include "affkl/notation.hpp"

using namespace affkl;

TEST_CASE("format and parse are inverse on canonical forms") {
  for (const char* sel : {"SL:2", "SL:4", "GL:3", "cartan:[[2,-1],[-3,2]]", "cartan:[[2,-1,0],[-1,2,-2],[0,-1,2]]"}) {
    const RootDatum& d = RootDatum::parse(sel);
    std::mt19937_64 rng(51);
    for (int t = 0; t < 100; ++t) {
      const GroupElement g = random_element(d, rng, 10);
      const std::string text = format_element(g);
      CHECK_MESSAGE(parse_element(text, d) == g, sel, " ", text);
      CHECK(format_element(parse_element(text, d)) == text);
    }
  }
}

TEST_CASE("grammar variants") {
  const RootDatum& d = RootDatum::sl(4);
  const GroupElement expected = pi_element(d, 2) * evaluate_word(d, {2, 0, 1});
  for (const char* text : {"pi^2 s2 s0 s1", "pi^{2} s_2 s_0 s_1", "pi pi s2*s0*s1", "pi^2 s_{2} s0 s1", "  pi^2  s2 s0 s1  ",
                           "pi^-2 s2 s0 s1", "pi^6 s2 s0 s1", "[5,2,4,7]", "[ 5, 2, 4, 7 ]"})
    CHECK_MESSAGE(parse_element(text, d) == expected, text);
  CHECK(parse_element("", d) == GroupElement::identity(d));
  CHECK(parse_element("e", d) == GroupElement::identity(d));
  CHECK(parse_element("id", d) == GroupElement::identity(d));
  CHECK(parse_element("[1,3,4,6]", d) == parse_element("pi s0", d));
  CHECK(format_element(GroupElement::identity(d)) == "e");
}

TEST_CASE("normal form formatting") {
  const RootDatum& d = RootDatum::sl(4);
  // The same element written with a different reduced word.
  CHECK(format_element(parse_element("pi^2 s2 s0 s1", d)) == "pi^2 s0 s2 s1");
  CHECK(format_element(pi_element(d, 1)) == "pi");
  const RootDatum& gl = RootDatum::gl(3);
  CHECK(format_element(pi_element(gl, -1)) == "pi^-1");
  CHECK(parse_element("pi^-1", gl) == pi_element(gl, -1));
  const RootDatum& g2 = RootDatum::parse("cartan:[[2,-1],[-3,2]]");
  CHECK(format_element(GroupElement::simple(g2, 0)) == "s0");
}

TEST_CASE("length-zero elements of generic data") {
  const RootDatum& b3 = RootDatum::parse("cartan:[[2,-1,0],[-1,2,-2],[0,-1,2]]");
  for (std::int64_t j = 0; j <= 3; ++j) {
    const GroupElement p = pi_element(b3, j);
    CHECK(p.length() == 0);
    CHECK(parse_element(format_element(p), b3) == p);
  }
}

TEST_CASE("syntax errors report a position") {
  const RootDatum& d = RootDatum::sl(4);
  auto position_of = [&](const char* text) -> std::size_t {
    try {
      parse_element(text, d);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("s1 x2") == 3);
  CHECK(position_of("s1 s9") == 3);
  CHECK(position_of("pi^") != std::string::npos);
  CHECK(position_of("[1,2,3") != std::string::npos);
  CHECK_THROWS_AS(parse_element("[1,3,5,7]", d), std::invalid_argument);
  CHECK_THROWS_AS(element_of(d, Window{1, 3, 5, 7}), WindowError);
  CHECK_THROWS_AS(parse_element("[1,2,3]", d), std::invalid_argument);
  CHECK(parse_element("pi[1]", RootDatum::sl(3)) == pi_element(RootDatum::sl(3), 1));
}

TEST_CASE("windows, words and integer lists") {
  CHECK(format_window(Window{-27, -13, 4, 16, 35}) == "-27 -13 4 16 35");
  CHECK(format_word({2, 0, 1}) == "s2 s0 s1");
  CHECK(format_word({}).empty());
  CHECK(parse_int_list("1,2,-3") == std::vector<std::int64_t>{1, 2, -3});
  CHECK(parse_int_list(" 4 , 5 ") == std::vector<std::int64_t>{4, 5});
  CHECK_THROWS(parse_int_list("1,,2"));
  CHECK(format_vec(Vec{1, 0, 2}, 3) == "[1,0,2]");
}
