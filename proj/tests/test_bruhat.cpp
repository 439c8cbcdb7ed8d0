#include <doctest.h>

#include <algorithm>
#include <random>

#include "affkl/coxeter.hpp"
#include "affkl/lemmas.hpp"
#include "affkl/notation.hpp"
#include "oracles.hpp"

using namespace affkl;

TEST_CASE("Bruhat order agrees with the subword oracle") {
  for (const char* sel : {"SL:2", "SL:3", "GL:3", "cartan:[[2,-1],[-2,2]]", "cartan:[[2,-1],[-3,2]]"}) {
    const RootDatum& d = RootDatum::parse(sel);
    const auto elements = oracle::all_elements(d, 4);
    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t) {
      const GroupElement w = random_element(d, rng, 6);
      for (const auto& x : elements) {
        if (x.length() > w.length()) continue;
        CHECK_MESSAGE(bruhat_leq(x, w) == oracle::subword_leq(x, w), sel, " x = ", format_element(x),
                      " w = ", format_element(w));
      }
    }
  }
}

TEST_CASE("lower intervals are exactly the elements below") {
  for (const char* sel : {"SL:3", "cartan:[[2,-1],[-2,2]]"}) {
    const RootDatum& d = RootDatum::parse(sel);
    const auto elements = oracle::all_elements(d, 6);
    std::mt19937_64 rng(22);
    for (int t = 0; t < 15; ++t) {
      const GroupElement w = random_element(d, rng, 6);
      auto interval = lower_interval(w);
      std::vector<GroupElement> expected;
      for (const auto& x : elements)
        if (x.length() <= w.length() && oracle::subword_leq(x, w)) expected.push_back(x);
      auto by = [](const GroupElement& a, const GroupElement& b) { return structural_less(a, b); };
      std::sort(interval.begin(), interval.end(), by);
      std::sort(expected.begin(), expected.end(), by);
      CHECK(interval == expected);
    }
  }
}

TEST_CASE("interval cap") {
  const RootDatum& d = RootDatum::sl(3);
  const GroupElement w = GroupElement::translation(d, Vec{3, 3});
  REQUIRE(w.length() == 12);
  CHECK_THROWS_AS(lower_interval(w, 10), CapExceeded);
  CHECK_FALSE(lower_interval(w, 12).empty());
}

TEST_CASE("normal forms are reduced and reassemble") {
  for (const char* sel : {"SL:4", "GL:3", "cartan:[[2,-1],[-3,2]]"}) {
    const RootDatum& d = RootDatum::parse(sel);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
      const GroupElement g = random_element(d, rng, 10);
      for (const NormalForm& nf : {normal_form(g), normal_form_largest(g)}) {
        CHECK(nf.pi_part.length() == 0);
        CHECK(static_cast<int>(nf.word.size()) == g.length());
        CHECK(nf.pi_part * evaluate_word(d, nf.word) == g);
      }
      CHECK(pi_part(g) == normal_form(g).pi_part);
      CHECK(pi_element(d, pi_index(g)) == pi_part(g));
    }
  }
}

TEST_CASE("reduced pairs: length additivity agrees with the root criterion") {
  for (const char* sel : {"SL:3", "SL:4", "GL:3", "cartan:[[2,-1],[-3,2]]"}) {
    const RootDatum& d = RootDatum::parse(sel);
    std::mt19937_64 rng(24);
    for (int t = 0; t < 200; ++t) {
      const GroupElement x = random_element(d, rng, 6), y = random_element(d, rng, 6);
      CHECK(is_reduced_pair(x, y) == reduced_pair_root_criterion(x, y));
      CHECK(is_reduced_pair(x, y) == ((x * y).length() == x.length() + y.length()));
    }
  }
}

TEST_CASE("three factor decomposition") {
  for (const char* sel : {"SL:3", "GL:3", "cartan:[[2,-1],[-2,2]]"}) {
    const RootDatum& d = RootDatum::parse(sel);
    const auto fin = finite_weyl_group(d);
    std::mt19937_64 rng(25);
    for (int t = 0; t < 60; ++t) {
      const GroupElement w = random_element(d, rng, 10);
      const ThreeFactor f = three_factor(w);
      CHECK(f.u.is_finite());
      CHECK(f.v.is_finite());
      CHECK(d.is_dominant(f.beta));
      const GroupElement rest = GroupElement::translation(d, f.beta) * f.v;
      CHECK(f.u * rest == w);
      CHECK(w.length() == f.u.length() + rest.length());
      // rest is minimal in its coset W_f rest.
      for (const auto& a : fin) CHECK((a * rest).length() >= rest.length());
    }
  }
}

TEST_CASE("parabolic decompositions") {
  const RootDatum& d = RootDatum::sl(4);
  std::mt19937_64 rng(26);
  const std::vector<std::vector<int>> subsets{{1, 2, 3}, {1, 3}, {0, 2}, {0, 1, 2}};
  for (int t = 0; t < 60; ++t) {
    const GroupElement w = random_element(d, rng, 10);
    for (const auto& J : subsets) {
      const auto [wj, rest] = parabolic_decompose(w, J, Side::kRight);
      CHECK(wj * rest == w);
      CHECK(w.length() == wj.length() + rest.length());
      for (int j : J) CHECK_FALSE(wj.right_descent(j));
      const auto [left, jw] = parabolic_decompose(w, J, Side::kLeft);
      CHECK(left * jw == w);
      CHECK(w.length() == left.length() + jw.length());
      for (int j : J) CHECK_FALSE(jw.left_descent(j));
    }
  }
}

TEST_CASE("longest elements") {
  CHECK(longest_finite(RootDatum::sl(4)).length() == 6);
  CHECK(longest_finite(RootDatum::parse("cartan:[[2,-1],[-3,2]]")).length() == 6);
  CHECK(longest_finite(RootDatum::gl(3)).length() == 3);
  const RootDatum& d = RootDatum::sl(4);
  CHECK(longest_element(d, {0, 1, 2}).length() == 6);
  CHECK(longest_element(d, {0, 2}).length() == 2);
  CHECK(longest_element(d, {}).length() == 0);
  CHECK_THROWS(longest_element(d, {0, 1, 2, 3}));
  const GroupElement& w0 = longest_finite(d);
  for (int i = 1; i <= 3; ++i) {
    CHECK(w0.left_descent(i));
    CHECK(w0.right_descent(i));
    CHECK(w0.act(simple_affine_root(d, i)) == -simple_affine_root(d, d_automorphism(d, i)));
  }
  CHECK(static_cast<int>(finite_weyl_group(d).size()) == 24);
}

TEST_CASE("Psi is a homomorphism onto W_f") {
  const RootDatum& d = RootDatum::sl(3);
  std::mt19937_64 rng(27);
  for (int t = 0; t < 60; ++t) {
    const GroupElement x = random_element(d, rng, 8, false), y = random_element(d, rng, 8, false);
    CHECK(psi(x * y) == psi(x) * psi(y));
    CHECK(psi(x).is_finite());
  }
  const auto& roots = d.positive_roots();
  const auto it = std::find_if(roots.begin(), roots.end(),
                               [&](const RootPair& rp) { return rp.coroot == d.highest_coroot(); });
  REQUIRE(it != roots.end());
  const GroupElement phi = GroupElement::reflection(d, *it);
  CHECK(psi(GroupElement::simple(d, 0)) == phi);
  CHECK_THROWS(psi(pi_generator(d)));
}

TEST_CASE("finite descent sets") {
  const RootDatum& d = RootDatum::sl(4);
  const GroupElement v = parse_element("s1 s3 s2", d);
  CHECK(finite_right_descents(v) == std::vector<int>{2});
  CHECK(finite_left_descents(v) == std::vector<int>{1, 3});
}
