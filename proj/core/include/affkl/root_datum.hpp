#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "affkl/lattice.hpp"

namespace affkl {

using Rational = boost::rational<std::int64_t>;
using IntMatrix = std::vector<std::vector<int>>;

class DatumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class DatumFamily { kSL, kGL, kCartan };

/// A positive finite root together with its coroot: root lives in Y,
/// coroot in Y^vee.
struct RootPair {
  Vec root;
  Vec coroot;
};

/// Finite root datum (Y, alpha'_i, alpha'^vee_i) specifying the extended
/// affine Weyl group Y x| W_f.
///
/// Data are interned: every constructor returns a reference to a registry
/// entry that lives for the whole program, so group elements may hold a raw
/// pointer and compare data by address.
///
/// Lattice conventions:
///  - SL_n and generic Cartan data are simply connected; Y has the
///    fundamental-weight basis, so simple coroots are unit vectors and simple
///    roots are the columns of the Cartan matrix.
///  - GL_n uses Y = Z^n in epsilon coordinates.
/// Finite simple reflections are indexed 1..n, the affine one is 0.
class RootDatum {
 public:
  static const RootDatum& sl(int n);
  static const RootDatum& gl(int n);
  static const RootDatum& from_cartan(const IntMatrix& cartan);
  /// Accepts `SL:n`, `GL:n` and `cartan:[[a,b],[c,d]]`.
  static const RootDatum& parse(std::string_view selector);

  RootDatum(const RootDatum&) = delete;
  RootDatum& operator=(const RootDatum&) = delete;

  DatumFamily family() const { return family_; }
  const std::string& descriptor() const { return descriptor_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  /// Number of simple reflections of the affine Coxeter system (rank + 1,
  /// or 0 for the trivial datum).
  int num_generators() const { return rank_ == 0 ? 0 : rank_ + 1; }
  bool simply_connected() const { return family_ != DatumFamily::kGL; }
  bool is_type_a() const { return family_ != DatumFamily::kCartan; }
  /// For type A data, the n of SL_n / GL_n.
  int type_a_n() const { return type_a_n_; }

  const IntMatrix& cartan() const { return cartan_; }
  /// i in 1..rank.
  const Vec& simple_root(int i) const { return simple_roots_[static_cast<std::size_t>(i - 1)]; }
  const Vec& simple_coroot(int i) const { return simple_coroots_[static_cast<std::size_t>(i - 1)]; }
  std::span<const RootPair> positive_roots() const { return positive_roots_; }
  /// Highest coroot theta and the dominant short root phi' with theta = phi'^vee.
  const Vec& highest_coroot() const { return highest_coroot_; }
  const Vec& dominant_short_root() const { return dominant_short_root_; }
  /// A weight pairing to 1 with every simple coroot.
  const Vec& rho_regular() const { return rho_regular_; }
  /// Sum of the positive roots.
  const Vec& two_rho() const { return two_rho_; }

  /// Sign of a coroot (or any vector in the coroot cone) via rho_regular.
  bool is_positive_coroot(const Vec& beta) const { return pairing(rho_regular_, beta) > 0; }
  bool is_coroot(const Vec& beta) const;

  /// Simple-root coordinates of a weight, if it lies in the rational span of
  /// the roots.
  std::optional<std::vector<Rational>> root_coordinates(const Vec& weight) const;
  /// True iff the weight lies in the root lattice Q'.
  bool in_root_lattice(const Vec& weight) const;
  /// True iff lambda - mu is a non-negative integer combination of simple roots.
  bool dominates(const Vec& lambda, const Vec& mu) const;
  bool is_dominant(const Vec& weight) const;
  /// W-invariant symmetric form on Y.
  Rational form(const Vec& a, const Vec& b) const;

  /// Fundamental weight i (1..rank); only meaningful for simply connected data.
  Vec fundamental_weight(int i) const;
  void require_simply_connected(std::string_view what) const;

 private:
  RootDatum() = default;
  void finish_construction();

  DatumFamily family_ = DatumFamily::kCartan;
  std::string descriptor_;
  int rank_ = 0;
  int dim_ = 0;
  int type_a_n_ = 0;
  IntMatrix cartan_;
  std::vector<Vec> simple_roots_;
  std::vector<Vec> simple_coroots_;
  std::vector<RootPair> positive_roots_;
  Vec highest_coroot_;
  Vec dominant_short_root_;
  Vec rho_regular_;
  Vec two_rho_;
  std::vector<std::vector<Rational>> cartan_inverse_;
  std::vector<std::vector<Rational>> form_;  // dim x dim

  friend struct DatumRegistry;
};

/// Validates a generalized Cartan matrix of finite type; throws DatumError.
void validate_finite_cartan(const IntMatrix& cartan);

}  // namespace affkl
