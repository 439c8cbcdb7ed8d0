#pragma once

#include <optional>
#include <vector>

#include "affkl/group_element.hpp"
#include "affkl/type_a.hpp"

namespace affkl {

/// Box B_lambda containing w(A_0), read off at the barycenter of A_0 with
/// exact integer arithmetic.  Requires a simply connected datum.
Vec box_of(const GroupElement& w);

/// w(alpha_i) in R_+ or R_- + delta for every finite simple root.
bool is_primitive(const GroupElement& w);
/// w^{-1}(A_0) lies in B_0.
bool is_primitive_geometric(const GroupElement& w);
/// w w_0 = y^{v(lambda)} v with lambda = sum of varpi_i over i not in R(v).
bool is_primitive_factored(const GroupElement& w);
/// 1 <= x_{i+1} - x_i <= n for the window of an SL_n element.
bool is_primitive_word(const Window& x);

enum class PrimitiveCriterion { kGeometric, kRoot, kFactored, kWord };

struct PrimitiveCertificate {
  GroupElement w;
  GroupElement v;
  std::vector<int> J;
  Vec lambda;
  PrimitiveCriterion criterion_used = PrimitiveCriterion::kFactored;
};

/// sum of varpi_i over i in 1..rank not in J.
Vec weight_off_set(const RootDatum& d, const std::vector<int>& J);
PrimitiveCertificate primitive_from_finite(const GroupElement& v);
/// Inverse of primitive_from_finite; throws for non-primitive input.
GroupElement finite_from_primitive(const GroupElement& w);
/// For type A: sum of i over i not in J, the exponent sum(w_i - i)/n of the
/// window v y^lambda w_0 before any reduction mod n.
std::int64_t natural_exponent(const PrimitiveCertificate& c);

/// All primitive elements, sorted by (length, window) for type A and
/// (length, normal form) otherwise.
std::vector<PrimitiveCertificate> enumerate_primitive(const RootDatum& d);

/// w = v1 . w_0 y^lambda . v2 with v1 and v2^{-1} primitive, lambda dominant.
struct CellFactorization {
  GroupElement w;
  GroupElement v1;
  Vec lambda;
  GroupElement v2;

  friend bool operator==(const CellFactorization&, const CellFactorization&) = default;
};

/// Checks reassembly, the two reduced factorizations, dominance and primitivity.
bool validate_cell_factorization(const CellFactorization& cf);
/// Some(cf) iff w lies in the lowest two-sided cell.
std::optional<CellFactorization> lowest_cell_factorize(const GroupElement& w);
/// Dominant weights with l(y^lambda) <= budget.
std::vector<Vec> dominant_weights_up_to(const RootDatum& d, int budget);
/// Elements of the lowest two-sided cell of length <= max_len, sorted by
/// (length, normal form).
std::vector<CellFactorization> enumerate_lowest_cell(const RootDatum& d, int max_len);

}  // namespace affkl
