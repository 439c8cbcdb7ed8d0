#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "affkl/group_element.hpp"

namespace affkl {

inline constexpr int kDefaultIntervalCap = 14;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {alpha in R_+ : g(alpha) in R_-}, found by scanning delta-coefficients and
/// testing signs directly (independent of the closed-form length count).
std::vector<AffineRoot> inversion_set(const GroupElement& g);

/// Length by greedy left-descent stripping.
int length_by_stripping(const GroupElement& g);

/// g = pi_part * s_{word[0]} * ... * s_{word.back()}, reduced, where each
/// letter is the smallest left descent of what remains.
struct NormalForm {
  GroupElement pi_part;
  std::vector<int> word;
};
NormalForm normal_form(const GroupElement& g);

/// Same shape, but every letter is the largest available left descent; a
/// second reduced word for cross-checks.
NormalForm normal_form_largest(const GroupElement& g);

GroupElement pi_part(const GroupElement& g);

/// Index of the Pi-component: k with pi-part pi^k for type A (mod n for SL_n,
/// any integer for GL_n); for generic data the smallest j with
/// varpi_j = lambda mod Q' (0 for the trivial class).
std::int64_t pi_index(const GroupElement& g);
/// The length-zero element with the given index.
GroupElement pi_element(const RootDatum& d, std::int64_t k);

GroupElement evaluate_word(const RootDatum& d, const std::vector<int>& word);

/// l(xy) = l(x) + l(y).
bool is_reduced_pair(const GroupElement& x, const GroupElement& y);
/// x(y(R_+) cap R_-) lies in R_-.
bool reduced_pair_root_criterion(const GroupElement& x, const GroupElement& y);

bool bruhat_leq(const GroupElement& x, const GroupElement& w);
/// Bruhat comparison of x against pi * s_{word[0]} ... with the given word
/// assumed reduced.
bool bruhat_leq_word(const GroupElement& x, const GroupElement& pi, const std::vector<int>& word);

/// All x <= w, materialized via subwords; throws CapExceeded when l(w) > cap.
std::vector<GroupElement> lower_interval(const GroupElement& w, int cap = kDefaultIntervalCap);

/// w = u * (y^beta v), u and v finite, y^beta v minimal in W_f w.
struct ThreeFactor {
  GroupElement u;
  Vec beta;
  GroupElement v;
};
ThreeFactor three_factor(const GroupElement& w);

enum class Side { kLeft, kRight };
/// kRight: w = w^J * w_J with w^J minimal in w W_J, returns (w^J, w_J).
/// kLeft: w = w_J * ^J w with ^J w minimal in W_J w, returns (w_J, ^J w).
std::pair<GroupElement, GroupElement> parabolic_decompose(const GroupElement& w, const std::vector<int>& J,
                                                          Side side);

/// Longest element of the parabolic generated by J (indices in 0..rank);
/// throws if J generates an infinite group.
GroupElement longest_element(const RootDatum& d, const std::vector<int>& J);
/// w_0 of W_f (cached per datum).
const GroupElement& longest_finite(const RootDatum& d);
/// w_0(alpha_i) = -alpha_{d(i)}, i in 1..rank.
int d_automorphism(const RootDatum& d, int i);

/// Finite part of an element of W_a.
GroupElement psi(const GroupElement& x);

/// All of W_f, sorted by (length, structure).
std::vector<GroupElement> finite_weyl_group(const RootDatum& d);

/// Right descent set of a finite element within 1..rank.
std::vector<int> finite_right_descents(const GroupElement& v);
std::vector<int> finite_left_descents(const GroupElement& v);

}  // namespace affkl
