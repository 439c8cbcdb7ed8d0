#pragma once

#include <map>
#include <string>
#include <utility>

#include "affkl/hecke.hpp"
#include "affkl/kazhdan_lusztig.hpp"

namespace affkl {

inline constexpr int kDefaultWeightCap = 200;

/// A dominant decomposition lambda = mu - nu.
struct DominantSplit {
  Vec mu;
  Vec nu;
};
/// nu = sum max(0, -c_i) varpi_i (simply connected) or t * rho_regular (GL).
DominantSplit dominant_split(const RootDatum& d, const Vec& lambda);

/// Y^lambda = T_{y^mu} T_{y^nu}^{-1}.
HeckeElt y_element(const RootDatum& d, const Vec& lambda, BarCache& cache);
HeckeElt y_element(const RootDatum& d, const Vec& lambda, const DominantSplit& split, BarCache& cache);

/// T_i^{-1} Y^lambda T_i^{-1} = Y^{s_i lambda} when <lambda, alpha_i^vee> = 1,
/// T_i Y^lambda = Y^lambda T_i when it is 0.  Throws for other pairings.
bool bernstein_relations_check(const RootDatum& d, int i, const Vec& lambda, BarCache& cache);

/// Weight multiplicities d_{mu, lambda} of the irreducible module of highest
/// weight lambda (Freudenthal), keyed by weight.
using CharacterPoly = std::map<Vec, long long>;
CharacterPoly weight_multiplicities(const RootDatum& d, const Vec& lambda, int cap = kDefaultWeightCap);
/// Weyl dimension formula.
long long weyl_dimension(const RootDatum& d, const Vec& lambda);
/// Dominant representative of the W_f-orbit of a weight.
Vec dominant_conjugate(const RootDatum& d, Vec mu);

std::string character_to_json(const RootDatum& d, const Vec& lambda, const CharacterPoly& chi, int indent = -1);

/// chi_lambda(Y) = sum d_{mu, lambda} Y^mu.
HeckeElt chi(const RootDatum& d, const Vec& lambda, BarCache& cache, int cap = kDefaultWeightCap);

struct LusztigCheck {
  bool ok = false;
  HeckeElt canonical;  // C_{w_0 y^lambda}
  HeckeElt left;       // chi C_{w_0}
  HeckeElt right;      // C_{w_0} chi
};
/// C_{w_0 y^lambda} = chi_lambda(Y) C_{w_0} = C_{w_0} chi_lambda(Y).
LusztigCheck verify_lusztig(const RootDatum& d, const Vec& lambda, KLCache& cache);

}  // namespace affkl
