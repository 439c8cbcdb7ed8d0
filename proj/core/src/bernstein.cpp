#include "affkl/bernstein.hpp"

#include <set>

#include <json.hpp>

#include "affkl/coxeter.hpp"

namespace affkl {

DominantSplit dominant_split(const RootDatum& d, const Vec& lambda) {
  DominantSplit s;
  if (d.family() == DatumFamily::kGL) {
    std::int64_t t = 0;
    for (int i = 0; i + 1 < d.dim(); ++i) t = std::max(t, lambda[i + 1] - lambda[i]);
    s.nu = t * d.rho_regular();
  } else {
    for (int i = 0; i < d.rank(); ++i) s.nu[i] = std::max<std::int64_t>(0, -lambda[i]);
  }
  s.mu = lambda + s.nu;
  return s;
}

HeckeElt y_element(const RootDatum& d, const Vec& lambda, const DominantSplit& split, BarCache& cache) {
  if (split.mu - split.nu != lambda || !d.is_dominant(split.mu) || !d.is_dominant(split.nu))
    throw std::invalid_argument("y_element: not a dominant decomposition of lambda");
  const HeckeElt tmu = HeckeElt::basis(GroupElement::translation(d, split.mu));
  if (split.nu.is_zero()) return tmu;
  return t_multiply(tmu, t_inverse(GroupElement::translation(d, split.nu), cache));
}

HeckeElt y_element(const RootDatum& d, const Vec& lambda, BarCache& cache) {
  return y_element(d, lambda, dominant_split(d, lambda), cache);
}

bool bernstein_relations_check(const RootDatum& d, int i, const Vec& lambda, BarCache& cache) {
  if (i < 1 || i > d.rank()) throw std::out_of_range("bernstein_relations_check: index must be a finite generator");
  const std::int64_t p = pairing(lambda, d.simple_coroot(i));
  const HeckeElt y = y_element(d, lambda, cache);
  const HeckeElt ti = HeckeElt::basis(GroupElement::simple(d, i));
  if (p == 0) return t_multiply(ti, y) == t_multiply(y, ti);
  if (p == 1) {
    const HeckeElt tinv = t_inverse(GroupElement::simple(d, i), cache);
    const Vec reflected = lambda - d.simple_root(i);
    return t_multiply(t_multiply(tinv, y), tinv) == y_element(d, reflected, cache);
  }
  throw std::invalid_argument("bernstein_relations_check: pairing " + std::to_string(p) +
                              " selects no relation (expected 0 or 1)");
}

Vec dominant_conjugate(const RootDatum& d, Vec mu) {
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 1; i <= d.rank(); ++i) {
      const std::int64_t p = pairing(mu, d.simple_coroot(i));
      if (p < 0) {
        mu -= p * d.simple_root(i);
        progress = true;
      }
    }
  }
  return mu;
}

CharacterPoly weight_multiplicities(const RootDatum& d, const Vec& lambda, int cap) {
  if (!d.is_dominant(lambda)) throw std::invalid_argument("weight_multiplicities: lambda must be dominant");
  // Weights come in layers by the height of lambda - mu.
  std::vector<std::vector<Vec>> layers{{lambda}};
  std::set<Vec> seen{lambda};
  for (;;) {
    std::vector<Vec> next;
    for (const Vec& mu : layers.back())
      for (int i = 1; i <= d.rank(); ++i) {
        const Vec nu = mu - d.simple_root(i);
        if (seen.count(nu) || !d.dominates(lambda, dominant_conjugate(d, nu))) continue;
        seen.insert(nu);
        next.push_back(nu);
      }
    if (next.empty()) break;
    if (static_cast<int>(seen.size()) > cap)
      throw CapExceeded("weight_multiplicities: more than " + std::to_string(cap) + " weights");
    layers.push_back(std::move(next));
  }

  CharacterPoly mult;
  mult[lambda] = 1;
  const Vec& two_rho = d.two_rho();
  const Rational top = d.form(lambda, lambda);
  for (std::size_t h = 1; h < layers.size(); ++h)
    for (const Vec& mu : layers[h]) {
      Rational num = 0;
      for (const auto& rp : d.positive_roots())
        for (Vec nu = mu + rp.root;; nu += rp.root) {
          auto it = mult.find(nu);
          if (it == mult.end()) break;
          num += Rational(2 * it->second) * d.form(nu, rp.root);
        }
      const Rational den = top - d.form(mu, mu) + d.form(lambda - mu, two_rho);
      const Rational m = num / den;
      if (m.denominator() != 1 || m < Rational(0)) throw std::logic_error("Freudenthal recursion gave a non-integral multiplicity");
      if (m != Rational(0)) mult[mu] = m.numerator();
    }
  return mult;
}

long long weyl_dimension(const RootDatum& d, const Vec& lambda) {
  Rational dim = 1;
  const Vec& rho = d.rho_regular();
  for (const auto& rp : d.positive_roots())
    dim *= Rational(pairing(lambda + rho, rp.coroot), pairing(rho, rp.coroot));
  if (dim.denominator() != 1) throw std::logic_error("Weyl dimension formula gave a non-integer");
  return dim.numerator();
}

std::string character_to_json(const RootDatum& d, const Vec& lambda, const CharacterPoly& chi, int indent) {
  auto coords = [&](const Vec& v) {
    std::vector<std::int64_t> c;
    for (int i = 0; i < d.dim(); ++i) c.push_back(v[i]);
    return c;
  };
  nlohmann::ordered_json j;
  j["lambda"] = coords(lambda);
  j["weights"] = nlohmann::ordered_json::array();
  for (auto it = chi.rbegin(); it != chi.rend(); ++it)
    j["weights"].push_back({{"mu", coords(it->first)}, {"mult", it->second}});
  return j.dump(indent);
}

HeckeElt chi(const RootDatum& d, const Vec& lambda, BarCache& cache, int cap) {
  HeckeElt out;
  for (const auto& [mu, m] : weight_multiplicities(d, lambda, cap))
    out += LaurentInt(m) * y_element(d, mu, cache);
  return out;
}

LusztigCheck verify_lusztig(const RootDatum& d, const Vec& lambda, KLCache& cache) {
  const GroupElement& w0 = longest_finite(d);
  LusztigCheck out;
  out.canonical = kl_basis(w0 * GroupElement::translation(d, lambda), cache)->element;
  const HeckeElt c = chi(d, lambda, cache.bars());
  const HeckeElt& cw0 = kl_basis(w0, cache)->element;
  out.left = t_multiply(c, cw0);
  out.right = t_multiply(cw0, c);
  out.ok = out.canonical == out.left && out.canonical == out.right;
  return out;
}

}  // namespace affkl
