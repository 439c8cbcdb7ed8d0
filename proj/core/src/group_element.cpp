#include "affkl/group_element.hpp"

#include <tuple>

namespace affkl {

AffineRoot simple_affine_root(const RootDatum& d, int i) {
  if (i < 0 || i > d.rank() || d.rank() == 0) throw std::out_of_range("simple root index out of range");
  if (i == 0) return {-d.highest_coroot(), 1};
  return {d.simple_coroot(i), 0};
}

GroupElement::GroupElement(const RootDatum* d, const Vec& trans, const SmallMatrix& coroot_map,
                           const SmallMatrix& weight_map)
    : datum_(d), trans_(trans), coroot_map_(coroot_map), weight_map_(weight_map) {
  compute_length();
}

GroupElement GroupElement::identity(const RootDatum& d) {
  const auto id = SmallMatrix::identity(d.dim());
  return {&d, Vec{}, id, id};
}

GroupElement GroupElement::reflection(const RootDatum& d, const RootPair& rp) {
  const int n = d.dim();
  SmallMatrix m, w;
  // beta -> beta - <alpha, beta> alpha^vee ; lambda -> lambda - <lambda, alpha^vee> alpha
  for (int c = 0; c < n; ++c) {
    const Vec e = unit_vec(c);
    const Vec mb = e - pairing(rp.root, e) * rp.coroot;
    const Vec wb = e - pairing(e, rp.coroot) * rp.root;
    for (int r = 0; r < n; ++r) {
      m.at(r, c) = static_cast<std::int8_t>(mb[r]);
      w.at(r, c) = static_cast<std::int8_t>(wb[r]);
    }
  }
  return {&d, Vec{}, m, w};
}

GroupElement GroupElement::simple(const RootDatum& d, int i) {
  if (i < 0 || i > d.rank() || d.rank() == 0) throw std::out_of_range("generator index s" + std::to_string(i) + " out of range for " + d.descriptor());
  if (i == 0) {
    const RootPair top{d.dominant_short_root(), d.highest_coroot()};
    return from_parts(d.dominant_short_root(), reflection(d, top));
  }
  return reflection(d, RootPair{d.simple_root(i), d.simple_coroot(i)});
}

GroupElement GroupElement::translation(const RootDatum& d, const Vec& lambda) {
  const auto id = SmallMatrix::identity(d.dim());
  return {&d, lambda, id, id};
}

GroupElement GroupElement::from_parts(const Vec& lambda, const GroupElement& u) {
  if (!u.is_finite()) throw std::invalid_argument("from_parts: second argument must be finite");
  return {u.datum_, lambda, u.coroot_map_, u.weight_map_};
}

GroupElement GroupElement::fin() const { return {datum_, Vec{}, coroot_map_, weight_map_}; }

bool GroupElement::in_affine_subgroup() const { return datum_->in_root_lattice(trans_); }

AffineRoot GroupElement::act(const AffineRoot& r) const {
  const Vec g = fin_on_coroot(r.beta);
  return {g, r.k - pairing(trans_, g)};
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  if (datum_ != rhs.datum_) throw DatumMismatch("cannot multiply elements of different root data");
  const int n = datum_->dim();
  return {datum_, trans_ + fin_on_weight(rhs.trans_), coroot_map_.compose(rhs.coroot_map_, n),
          weight_map_.compose(rhs.weight_map_, n)};
}

GroupElement GroupElement::inverse() const {
  const int n = datum_->dim();
  // u^{-1} on Y^vee is the transpose of u on Y, and vice versa.
  const SmallMatrix m = weight_map_.transposed(n);
  const SmallMatrix w = coroot_map_.transposed(n);
  return {datum_, -w.apply(trans_, n), m, w};
}

bool GroupElement::left_descent(int i) const {
  const AffineRoot a = simple_affine_root(*datum_, i);
  const int n = datum_->dim();
  // g^{-1}(beta, k) = (u^{-1} beta, k + <lambda, beta>)
  const AffineRoot img{weight_map_.transposed(n).apply(a.beta, n), a.k + pairing(trans_, a.beta)};
  return !img.is_positive(*datum_);
}

bool GroupElement::right_descent(int i) const { return !act(simple_affine_root(*datum_, i)).is_positive(*datum_); }

void GroupElement::compute_length() {
  std::int64_t count = 0;
  for (const auto& rp : datum_->positive_roots()) {
    const Vec g = fin_on_coroot(rp.coroot);
    const std::int64_t m = pairing(trans_, g);
    const bool pos = datum_->is_positive_coroot(g);
    if (m >= 0) count += m + (pos ? 0 : 1);
    if (m <= -1) count += (-m - 1) + (pos ? 1 : 0);
  }
  length_ = static_cast<int>(count);
}

std::size_t GroupElement::hash() const {
  Fnv1a h;
  h.add_bytes(&datum_, sizeof datum_);
  h.add_bytes(trans_.c.data(), sizeof trans_.c);
  h.add_bytes(weight_map_.a.data(), weight_map_.a.size());
  return static_cast<std::size_t>(h.value());
}

bool structural_less(const GroupElement& a, const GroupElement& b) {
  return std::tie(a.length_, a.trans_, a.weight_map_) < std::tie(b.length_, b.trans_, b.weight_map_);
}

}  // namespace affkl
