#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "affkl/group_element.hpp"

namespace affkl {

using Window = std::vector<std::int64_t>;

class WindowError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// epsilon-coordinates (length n) of a weight of a type A datum.  For SL_n the
/// lift is normalised to have last coordinate 0.
std::vector<std::int64_t> eps_lift(const RootDatum& d, const Vec& lambda);
/// Inverse of eps_lift; for SL_n any constant shift of the input is ignored.
Vec from_eps(const RootDatum& d, const std::vector<std::int64_t>& eps);

/// The one-line finite permutation of a finite element, p(i) in 1..n.
std::vector<int> permutation_of(const GroupElement& u);
GroupElement element_of_permutation(const RootDatum& d, const std::vector<int>& p);

/// w(1..n).  For SL_n the window is normalised so that
/// sum(w_i - i) / n lies in [0, n).
Window window_of(const GroupElement& w);
/// Window of an SL_n element with the prescribed value of sum(w_i - i) / n,
/// which must agree with the normalised one mod n.
Window window_with_exponent(const GroupElement& w, std::int64_t exponent);
std::int64_t window_exponent(const Window& w);
/// Throws WindowError for windows violating the residue or sum conditions.
GroupElement element_of(const RootDatum& d, const Window& window);
/// Equality of windows for the datum (mod global shifts by n for SL_n).
bool windows_equivalent(const RootDatum& d, const Window& a, const Window& b);

/// The rotation pi = y^{eps_1} s_1 ... s_{n-1}.
GroupElement pi_generator(const RootDatum& d);

void require_type_a(const RootDatum& d, const char* what);

}  // namespace affkl
