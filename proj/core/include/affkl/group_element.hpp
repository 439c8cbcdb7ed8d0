#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "affkl/lattice.hpp"
#include "affkl/root_datum.hpp"

namespace affkl {

/// beta + k*delta with beta a finite coroot in Y^vee coordinates.
struct AffineRoot {
  Vec beta;
  std::int64_t k = 0;

  bool is_positive(const RootDatum& d) const { return k > 0 || (k == 0 && d.is_positive_coroot(beta)); }
  AffineRoot operator-() const { return {-beta, -k}; }
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

/// alpha_i for i in 0..rank; alpha_0 = delta - theta.
AffineRoot simple_affine_root(const RootDatum& d, int i);

/// An element y^lambda * u of the extended affine Weyl group W_e = Y x| W_f.
///
/// u is stored twice, as its matrix on Y^vee (acting on coroots) and on Y
/// (acting on weights); the two are inverse transposes of each other.  The
/// length is computed at construction so it is always available.
class GroupElement {
 public:
  /// Null element, only useful as a placeholder in containers.
  GroupElement() = default;

  static GroupElement identity(const RootDatum& d);
  /// s_i for i in 0..rank.
  static GroupElement simple(const RootDatum& d, int i);
  static GroupElement translation(const RootDatum& d, const Vec& lambda);
  /// The finite reflection in a positive root.
  static GroupElement reflection(const RootDatum& d, const RootPair& rp);
  /// y^lambda * u where u must be finite.
  static GroupElement from_parts(const Vec& lambda, const GroupElement& u);

  bool valid() const { return datum_ != nullptr; }
  const RootDatum& datum() const { return *datum_; }
  const Vec& trans() const { return trans_; }
  /// The finite part u as a group element.
  GroupElement fin() const;
  bool is_finite() const { return trans_.is_zero(); }
  /// True iff the element lies in the affine Weyl group W_a (trans in Q').
  bool in_affine_subgroup() const;
  int length() const { return length_; }

  Vec fin_on_coroot(const Vec& beta) const { return coroot_map_.apply(beta, datum_->dim()); }
  Vec fin_on_weight(const Vec& lambda) const { return weight_map_.apply(lambda, datum_->dim()); }
  /// Affine action y^lambda u (beta, k) = (u beta, k - <lambda, u beta>).
  AffineRoot act(const AffineRoot& r) const;
  /// Action on the weight lattice (translation then linear part).
  Vec act_on_weight(const Vec& p) const { return fin_on_weight(p) + trans_; }

  GroupElement operator*(const GroupElement& rhs) const;
  GroupElement inverse() const;

  /// s_i g < g.
  bool left_descent(int i) const;
  /// g s_i < g.
  bool right_descent(int i) const;

  std::size_t hash() const;
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.datum_ == b.datum_ && a.trans_ == b.trans_ && a.weight_map_ == b.weight_map_;
  }
  /// Deterministic structural total order (length first).
  friend bool structural_less(const GroupElement& a, const GroupElement& b);

 private:
  GroupElement(const RootDatum* d, const Vec& trans, const SmallMatrix& coroot_map, const SmallMatrix& weight_map);
  void compute_length();

  const RootDatum* datum_ = nullptr;
  Vec trans_;
  SmallMatrix coroot_map_;
  SmallMatrix weight_map_;
  int length_ = 0;
};

bool structural_less(const GroupElement& a, const GroupElement& b);

class DatumMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace affkl

template <>
struct std::hash<affkl::GroupElement> {
  std::size_t operator()(const affkl::GroupElement& g) const noexcept { return g.hash(); }
};
