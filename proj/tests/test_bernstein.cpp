#include <doctest.h>

#include <json.hpp>

#include "affkl/bernstein.hpp"
#include "affkl/coxeter.hpp"
#include "oracles.hpp"

using namespace affkl;

namespace {

std::vector<Vec> small_dominant(const RootDatum& d, int max_coord) {
  std::vector<Vec> out{Vec{}};
  for (int i = 1; i <= d.rank(); ++i) {
    std::vector<Vec> next;
    for (const Vec& v : out)
      for (int c = 0; c <= max_coord; ++c) next.push_back(v + std::int64_t{c} * d.fundamental_weight(i));
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("weight multiplicities match Kostka numbers") {
  for (int n : {2, 3, 4}) {
    const RootDatum& d = RootDatum::sl(n);
    for (const Vec& lambda : small_dominant(d, n == 4 ? 1 : 3)) {
      const CharacterPoly mult = weight_multiplicities(d, lambda);
      std::vector<std::int64_t> lam(lambda.c.begin(), lambda.c.begin() + (n - 1));
      for (const auto& [mu, m] : mult) {
        std::vector<std::int64_t> mv(mu.c.begin(), mu.c.begin() + (n - 1));
        CHECK(m == oracle::sl_weight_multiplicity(n, lam, mv));
      }
      long long total = 0;
      for (const auto& [mu, m] : mult) total += m;
      CHECK(total == weyl_dimension(d, lambda));
    }
  }
}

TEST_CASE("Freudenthal and Weyl agree for non-simply-laced types") {
  for (const char* sel : {"cartan:[[2,-1],[-2,2]]", "cartan:[[2,-1],[-3,2]]", "GL:3"}) {
    const RootDatum& d = RootDatum::parse(sel);
    std::vector<Vec> weights;
    if (d.simply_connected()) {
      weights = small_dominant(d, 2);
    } else {
      weights = {Vec{}, Vec{1, 0, 0}, Vec{2, 1, 0}, Vec{3, 1, -1}};
    }
    for (const Vec& lambda : weights) {
      const CharacterPoly mult = weight_multiplicities(d, lambda);
      long long total = 0;
      for (const auto& [mu, m] : mult) {
        total += m;
        // multiplicities are W_f-invariant
        for (int i = 1; i <= d.rank(); ++i) {
          const Vec r = mu - pairing(mu, d.simple_coroot(i)) * d.simple_root(i);
          auto it = mult.find(r);
          REQUIRE(it != mult.end());
          CHECK(it->second == m);
        }
      }
      CHECK(total == weyl_dimension(d, lambda));
    }
  }
  // The 7-dimensional and 14-dimensional representations of G2.
  const RootDatum& g2 = RootDatum::parse("cartan:[[2,-1],[-3,2]]");
  CHECK(std::min(weyl_dimension(g2, g2.fundamental_weight(1)), weyl_dimension(g2, g2.fundamental_weight(2))) == 7);
  CHECK(std::max(weyl_dimension(g2, g2.fundamental_weight(1)), weyl_dimension(g2, g2.fundamental_weight(2))) == 14);
}

TEST_CASE("weight cap") {
  const RootDatum& d = RootDatum::sl(3);
  CHECK_THROWS_AS(weight_multiplicities(d, Vec{10, 10}, 20), CapExceeded);
  CHECK_THROWS(weight_multiplicities(d, Vec{-1, 0}));
}

TEST_CASE("dominant splits") {
  for (const char* sel : {"SL:3", "GL:3"}) {
    const RootDatum& d = RootDatum::parse(sel);
    for (const Vec lambda : {Vec{2, -1, 0}, Vec{-3, 1, 0}, Vec{0, 0, 0}}) {
      Vec l = lambda;
      if (d.dim() == 2) l[2] = 0;
      const DominantSplit s = dominant_split(d, l);
      CHECK(s.mu - s.nu == l);
      CHECK(d.is_dominant(s.mu));
      CHECK(d.is_dominant(s.nu));
    }
  }
}

TEST_CASE("Bernstein generators commute and satisfy the Bernstein relations") {
  for (const char* sel : {"SL:2", "SL:3", "GL:2"}) {
    const RootDatum& d = RootDatum::parse(sel);
    BarCache cache;
    std::vector<Vec> weights;
    for (int i = 1; i <= d.rank(); ++i) {
      weights.push_back(d.fundamental_weight(i));
      weights.push_back(-d.fundamental_weight(i));
    }
    weights.push_back(d.simple_root(1));
    for (const Vec& a : weights)
      for (const Vec& b : weights) {
        const HeckeElt ya = y_element(d, a, cache), yb = y_element(d, b, cache);
        CHECK(t_multiply(ya, yb) == t_multiply(yb, ya));
        CHECK(t_multiply(ya, yb) == y_element(d, a + b, cache));
      }
    for (int i = 1; i <= d.rank(); ++i)
      for (const Vec& a : weights) {
        const auto p = pairing(a, d.simple_coroot(i));
        if (p == 0 || p == 1) CHECK(bernstein_relations_check(d, i, a, cache));
      }
    // Dominant Y^lambda is T_{y^lambda}.
    const Vec rho = d.rho_regular();
    CHECK(y_element(d, rho, cache) == HeckeElt::basis(GroupElement::translation(d, rho)));
  }
}

TEST_CASE("the Bernstein split does not matter") {
  const RootDatum& d = RootDatum::sl(3);
  BarCache cache;
  const Vec lambda{1, -1};
  const DominantSplit s1 = dominant_split(d, lambda);
  const DominantSplit s2{s1.mu + d.rho_regular(), s1.nu + d.rho_regular()};
  CHECK(y_element(d, lambda, s1, cache) == y_element(d, lambda, s2, cache));
  CHECK_THROWS(y_element(d, lambda, DominantSplit{Vec{1, 0}, Vec{0, 0}}, cache));
}

TEST_CASE("characters are central") {
  const RootDatum& d = RootDatum::sl(3);
  BarCache cache;
  for (const Vec lambda : {Vec{1, 0}, Vec{1, 1}, Vec{2, 0}}) {
    const HeckeElt c = chi(d, lambda, cache);
    for (int i = 0; i <= 2; ++i) {
      const HeckeElt t = HeckeElt::basis(GroupElement::simple(d, i));
      CHECK(t_multiply(c, t) == t_multiply(t, c));
    }
    const HeckeElt p = HeckeElt::basis(pi_element(d, 1));
    CHECK(t_multiply(c, p) == t_multiply(p, c));
  }
}

TEST_CASE("character JSON") {
  const RootDatum& d = RootDatum::sl(3);
  const Vec lambda{1, 0};
  const auto j = nlohmann::json::parse(character_to_json(d, lambda, weight_multiplicities(d, lambda)));
  CHECK(j["lambda"] == nlohmann::json::array({1, 0}));
  CHECK(j["weights"].size() == 3);
  CHECK(j["weights"][0]["mu"] == nlohmann::json::array({1, 0}));
}

TEST_CASE("Lusztig's identity on small weights") {
  KLCache cache;
  const RootDatum& d = RootDatum::sl(2);
  for (std::int64_t c = 0; c <= 2; ++c) CHECK(verify_lusztig(d, Vec{c}, cache).ok);
  const RootDatum& g = RootDatum::gl(2);
  KLCache gcache;
  CHECK(verify_lusztig(g, Vec{1, 0}, gcache).ok);
  CHECK(verify_lusztig(g, Vec{2, 1}, gcache).ok);
}
