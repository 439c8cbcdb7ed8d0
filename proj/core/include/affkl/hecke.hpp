#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "affkl/group_element.hpp"
#include "affkl/laurent.hpp"

namespace affkl {

/// Element of H(W_e) in the T-basis.  Zero coefficients are never stored.
class HeckeElt {
 public:
  using Map = std::unordered_map<GroupElement, LaurentInt>;

  HeckeElt() = default;
  /// T_w.
  static HeckeElt basis(const GroupElement& w);
  static HeckeElt term(const GroupElement& w, const LaurentInt& c);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentInt coeff(const GroupElement& w) const;

  void add_term(const GroupElement& w, const LaurentInt& c);
  HeckeElt& operator+=(const HeckeElt& b);
  HeckeElt& operator-=(const HeckeElt& b);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentInt& c, const HeckeElt& h);
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.terms_ == b.terms_; }

  /// Terms sorted by (length, structure), for deterministic traversal.
  std::vector<std::pair<GroupElement, LaurentInt>> sorted_terms() const;

 private:
  Map terms_;
};

/// T_s * h for s = s_i, or T_p * h for p of length zero.
HeckeElt left_mul_simple(int i, const HeckeElt& h, const RootDatum& d);
HeckeElt right_mul_simple(const HeckeElt& h, int i, const RootDatum& d);
HeckeElt left_mul_length_zero(const GroupElement& p, const HeckeElt& h);
HeckeElt right_mul_length_zero(const HeckeElt& h, const GroupElement& p);

HeckeElt t_multiply(const HeckeElt& a, const HeckeElt& b);

/// Memo of bar(T_w) in the T-basis.  Not synchronised; use one per thread.
class BarCache {
 public:
  const HeckeElt& bar_basis(const GroupElement& w);
  std::size_t size() const { return memo_.size(); }
  void merge_from(const BarCache& other);

 private:
  std::unordered_map<GroupElement, HeckeElt> memo_;
};

/// bar(T_w) = T_{w^{-1}}^{-1}.
HeckeElt bar_basis(const GroupElement& w, BarCache& cache);
HeckeElt bar(const HeckeElt& h, BarCache& cache);
HeckeElt bar(const HeckeElt& h);
/// T_w^{-1}.
HeckeElt t_inverse(const GroupElement& w, BarCache& cache);
HeckeElt t_inverse(const GroupElement& w);

/// Coefficient of T_{w3} in T_{w1} T_{w2}.
LaurentInt structure_coeff(const GroupElement& w1, const GroupElement& w2, const GroupElement& w3);

struct LatticeCheck {
  bool in_lattice = false;
  /// Image modulo u^{-1}L: constant coefficients of each term.
  HeckeElt leading;
};
LatticeCheck lattice_check(const HeckeElt& h);

}  // namespace affkl
