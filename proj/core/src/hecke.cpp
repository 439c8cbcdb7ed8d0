#include "affkl/hecke.hpp"

#include <algorithm>

#include "affkl/coxeter.hpp"

namespace affkl {

HeckeElt HeckeElt::basis(const GroupElement& w) { return term(w, 1); }

HeckeElt HeckeElt::term(const GroupElement& w, const LaurentInt& c) {
  HeckeElt h;
  h.add_term(w, c);
  return h;
}

LaurentInt HeckeElt::coeff(const GroupElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentInt() : it->second;
}

void HeckeElt::add_term(const GroupElement& w, const LaurentInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& b) {
  for (const auto& [w, c] : b.terms_) add_term(w, -c);
  return *this;
}

HeckeElt operator*(const LaurentInt& c, const HeckeElt& h) {
  HeckeElt out;
  if (c.is_zero()) return out;
  for (const auto& [w, x] : h.terms_) out.terms_.emplace(w, c * x);
  return out;
}

std::vector<std::pair<GroupElement, LaurentInt>> HeckeElt::sorted_terms() const {
  std::vector<std::pair<GroupElement, LaurentInt>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return structural_less(a.first, b.first); });
  return v;
}

HeckeElt left_mul_simple(int i, const HeckeElt& h, const RootDatum& d) {
  const GroupElement s = GroupElement::simple(d, i);
  const LaurentInt xi = LaurentInt::xi();
  HeckeElt out;
  for (const auto& [z, c] : h.terms()) {
    const GroupElement sz = s * z;
    out.add_term(sz, c);
    if (sz.length() < z.length()) out.add_term(z, xi * c);
  }
  return out;
}

HeckeElt right_mul_simple(const HeckeElt& h, int i, const RootDatum& d) {
  const GroupElement s = GroupElement::simple(d, i);
  const LaurentInt xi = LaurentInt::xi();
  HeckeElt out;
  for (const auto& [z, c] : h.terms()) {
    const GroupElement zs = z * s;
    out.add_term(zs, c);
    if (zs.length() < z.length()) out.add_term(z, xi * c);
  }
  return out;
}

HeckeElt left_mul_length_zero(const GroupElement& p, const HeckeElt& h) {
  HeckeElt out;
  for (const auto& [z, c] : h.terms()) out.add_term(p * z, c);
  return out;
}

HeckeElt right_mul_length_zero(const HeckeElt& h, const GroupElement& p) {
  HeckeElt out;
  for (const auto& [z, c] : h.terms()) out.add_term(z * p, c);
  return out;
}

HeckeElt t_multiply(const HeckeElt& a, const HeckeElt& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const RootDatum& d = a.terms().begin()->first.datum();
  if (&b.terms().begin()->first.datum() != &d) throw DatumMismatch("t_multiply: different root data");
  std::size_t left_cost = 0, right_cost = 0;
  for (const auto& [x, c] : a.terms()) left_cost += static_cast<std::size_t>(x.length()) + 1;
  for (const auto& [y, c] : b.terms()) right_cost += static_cast<std::size_t>(y.length()) + 1;
  left_cost *= b.size();
  right_cost *= a.size();

  HeckeElt out;
  if (left_cost <= right_cost) {
    for (const auto& [x, c] : a.terms()) {
      const NormalForm nf = normal_form(x);
      HeckeElt acc = b;
      for (auto it = nf.word.rbegin(); it != nf.word.rend(); ++it) acc = left_mul_simple(*it, acc, d);
      acc = left_mul_length_zero(nf.pi_part, acc);
      out += c * acc;
    }
  } else {
    for (const auto& [y, c] : b.terms()) {
      const NormalForm nf = normal_form(y);
      HeckeElt acc = right_mul_length_zero(a, nf.pi_part);
      for (int j : nf.word) acc = right_mul_simple(acc, j, d);
      out += c * acc;
    }
  }
  return out;
}

const HeckeElt& BarCache::bar_basis(const GroupElement& w) {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  HeckeElt value;
  if (w.length() == 0) {
    value = HeckeElt::basis(w);
  } else {
    int i = 0;
    while (!w.left_descent(i)) ++i;
    const GroupElement sw = GroupElement::simple(w.datum(), i) * w;
    const HeckeElt& rest = bar_basis(sw);
    // bar(T_s) = T_s^{-1} = T_s - xi.
    value = left_mul_simple(i, rest, w.datum()) - LaurentInt::xi() * rest;
  }
  return memo_.emplace(w, std::move(value)).first->second;
}

void BarCache::merge_from(const BarCache& other) {
  for (const auto& [w, h] : other.memo_) memo_.try_emplace(w, h);
}

HeckeElt bar_basis(const GroupElement& w, BarCache& cache) { return cache.bar_basis(w); }

HeckeElt bar(const HeckeElt& h, BarCache& cache) {
  HeckeElt out;
  for (const auto& [w, c] : h.terms()) out += c.bar() * cache.bar_basis(w);
  return out;
}

HeckeElt bar(const HeckeElt& h) {
  BarCache cache;
  return bar(h, cache);
}

HeckeElt t_inverse(const GroupElement& w, BarCache& cache) { return cache.bar_basis(w.inverse()); }

HeckeElt t_inverse(const GroupElement& w) {
  BarCache cache;
  return t_inverse(w, cache);
}

LaurentInt structure_coeff(const GroupElement& w1, const GroupElement& w2, const GroupElement& w3) {
  return t_multiply(HeckeElt::basis(w1), HeckeElt::basis(w2)).coeff(w3);
}

LatticeCheck lattice_check(const HeckeElt& h) {
  LatticeCheck out;
  out.in_lattice = true;
  for (const auto& [w, c] : h.terms()) {
    if (c.max_exponent() > 0) out.in_lattice = false;
    out.leading.add_term(w, LaurentInt::monomial(c.coeff(0), 0));
  }
  return out;
}

}  // namespace affkl
