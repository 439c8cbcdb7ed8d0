#include "affkl/primitive.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "affkl/coxeter.hpp"
#include "affkl/notation.hpp"

namespace affkl {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Vec box_of(const GroupElement& w) {
  const RootDatum& d = w.datum();
  d.require_simply_connected("box_of");
  const int n = d.rank();
  if (n == 0) return {};
  // Vertices of A_0 are 0 and varpi_i / c_i with theta = sum c_i alpha_i^vee.
  const Vec& theta = d.highest_coroot();
  std::int64_t l = 1;
  for (int i = 0; i < n; ++i) l = std::lcm(l, theta[i]);
  const std::int64_t scale = (n + 1) * l;
  Vec p;
  for (int i = 0; i < n; ++i) p[i] = l / theta[i];
  const Vec img = w.fin_on_weight(p) + scale * w.trans();
  Vec box;
  for (int i = 0; i < n; ++i) box[i] = floor_div(img[i], scale);
  return box;
}

bool is_primitive(const GroupElement& w) {
  const RootDatum& d = w.datum();
  d.require_simply_connected("is_primitive");
  for (int i = 1; i <= d.rank(); ++i) {
    const AffineRoot r = w.act(simple_affine_root(d, i));
    const bool pos = d.is_positive_coroot(r.beta);
    if (!((r.k == 0 && pos) || (r.k == 1 && !pos))) return false;
  }
  return true;
}

bool is_primitive_geometric(const GroupElement& w) { return box_of(w.inverse()).is_zero(); }

Vec weight_off_set(const RootDatum& d, const std::vector<int>& J) {
  Vec lambda;
  for (int i = 1; i <= d.rank(); ++i)
    if (std::find(J.begin(), J.end(), i) == J.end()) lambda += d.fundamental_weight(i);
  return lambda;
}

bool is_primitive_factored(const GroupElement& w) {
  const RootDatum& d = w.datum();
  d.require_simply_connected("is_primitive_factored");
  const GroupElement m = w * longest_finite(d);
  const GroupElement v = m.fin();
  const Vec lambda = v.inverse().fin_on_weight(m.trans());
  return lambda == weight_off_set(d, finite_right_descents(v));
}

bool is_primitive_word(const Window& x) {
  const auto n = static_cast<std::int64_t>(x.size());
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const std::int64_t diff = x[i + 1] - x[i];
    if (diff < 1 || diff > n) return false;
  }
  return true;
}

PrimitiveCertificate primitive_from_finite(const GroupElement& v) {
  const RootDatum& d = v.datum();
  d.require_simply_connected("primitive_from_finite");
  if (!v.is_finite()) throw std::invalid_argument("primitive_from_finite: argument must lie in W_f");
  PrimitiveCertificate c;
  c.v = v;
  c.J = finite_right_descents(v);
  c.lambda = weight_off_set(d, c.J);
  c.w = v * GroupElement::translation(d, c.lambda) * longest_finite(d);
  c.criterion_used = PrimitiveCriterion::kFactored;
  return c;
}

GroupElement finite_from_primitive(const GroupElement& w) {
  if (!is_primitive(w)) throw std::invalid_argument("finite_from_primitive: " + format_element(w) + " is not primitive");
  return (w * longest_finite(w.datum())).fin();
}

std::int64_t natural_exponent(const PrimitiveCertificate& c) {
  std::int64_t k = 0;
  for (int i = 1; i <= c.w.datum().rank(); ++i)
    if (std::find(c.J.begin(), c.J.end(), i) == c.J.end()) k += i;
  return k;
}

std::vector<PrimitiveCertificate> enumerate_primitive(const RootDatum& d) {
  d.require_simply_connected("enumerate_primitive");
  std::vector<PrimitiveCertificate> out;
  for (const auto& v : finite_weyl_group(d)) out.push_back(primitive_from_finite(v));
  if (d.is_type_a()) {
    std::vector<std::pair<Window, PrimitiveCertificate>> keyed;
    for (auto& c : out) keyed.emplace_back(window_with_exponent(c.w, natural_exponent(c)), std::move(c));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      if (a.second.w.length() != b.second.w.length()) return a.second.w.length() < b.second.w.length();
      return a.first < b.first;
    });
    out.clear();
    for (auto& [w, c] : keyed) out.push_back(std::move(c));
  } else {
    std::vector<std::pair<std::string, PrimitiveCertificate>> keyed;
    for (auto& c : out) keyed.emplace_back(format_element(c.w), std::move(c));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      if (a.second.w.length() != b.second.w.length()) return a.second.w.length() < b.second.w.length();
      return a.first < b.first;
    });
    out.clear();
    for (auto& [s, c] : keyed) out.push_back(std::move(c));
  }
  return out;
}

bool validate_cell_factorization(const CellFactorization& cf) {
  const RootDatum& d = cf.w.datum();
  const GroupElement& w0 = longest_finite(d);
  if (!d.is_dominant(cf.lambda)) return false;
  if (!is_primitive(cf.v1) || !is_primitive(cf.v2.inverse())) return false;
  const GroupElement t = GroupElement::translation(d, cf.lambda);
  const GroupElement middle = w0 * t;
  if (middle.length() != w0.length() + t.length()) return false;
  if (cf.v1 * middle * cf.v2 != cf.w) return false;
  if (cf.w.length() != cf.v1.length() + middle.length() + cf.v2.length()) return false;
  // Same factorization with w_0 y^lambda rewritten as y^{w_0 lambda} w_0.
  const GroupElement rewritten = GroupElement::translation(d, w0.fin_on_weight(cf.lambda)) * w0;
  return rewritten == middle && cf.w.length() == cf.v1.length() + rewritten.length() + cf.v2.length();
}

std::optional<CellFactorization> lowest_cell_factorize(const GroupElement& w) {
  const RootDatum& d = w.datum();
  d.require_simply_connected("lowest_cell_factorize");
  const GroupElement& w0 = longest_finite(d);
  std::vector<int> finite;
  for (int i = 1; i <= d.rank(); ++i) finite.push_back(i);

  const GroupElement z = parabolic_decompose(w, finite, Side::kLeft).second;
  const GroupElement v2 = GroupElement::translation(d, -box_of(z)) * z;
  const GroupElement x = parabolic_decompose(w, finite, Side::kRight).first;
  const GroupElement v1 = x * GroupElement::translation(d, box_of(x.inverse()));
  const GroupElement m = v1.inverse() * w * v2.inverse();
  if (m.fin() != w0) return std::nullopt;
  CellFactorization cf{w, v1, w0.fin_on_weight(m.trans()), v2};
  if (!validate_cell_factorization(cf)) return std::nullopt;
  return cf;
}

std::vector<Vec> dominant_weights_up_to(const RootDatum& d, int budget) {
  const int n = d.rank();
  std::vector<std::int64_t> cost(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    cost[i] = GroupElement::translation(d, d.fundamental_weight(i + 1)).length();
  std::vector<Vec> out;
  Vec cur;
  std::int64_t used = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      Vec lambda;
      for (int j = 0; j < n; ++j) lambda += cur[j] * d.fundamental_weight(j + 1);
      out.push_back(lambda);
      return;
    }
    for (cur[i] = 0; used + cur[i] * cost[i] <= budget; ++cur[i]) {
      used += cur[i] * cost[i];
      self(self, i + 1);
      used -= cur[i] * cost[i];
    }
    cur[i] = 0;
  };
  if (budget >= 0) rec(rec, 0);
  return out;
}

std::vector<CellFactorization> enumerate_lowest_cell(const RootDatum& d, int max_len) {
  d.require_simply_connected("enumerate_lowest_cell");
  const GroupElement& w0 = longest_finite(d);
  const int budget = max_len - w0.length();
  std::vector<CellFactorization> out;
  if (budget < 0) return out;
  std::vector<GroupElement> left, right;
  for (const auto& c : enumerate_primitive(d)) {
    if (c.w.length() <= budget) {
      left.push_back(c.w);
      right.push_back(c.w.inverse());
    }
  }
  std::unordered_set<GroupElement> seen;
  for (const Vec& lambda : dominant_weights_up_to(d, budget)) {
    const GroupElement middle = w0 * GroupElement::translation(d, lambda);
    for (const auto& v1 : left) {
      if (v1.length() + middle.length() > max_len) continue;
      const GroupElement a = v1 * middle;
      for (const auto& v2 : right) {
        if (a.length() + v2.length() > max_len) continue;
        CellFactorization cf{a * v2, v1, lambda, v2};
        if (!validate_cell_factorization(cf))
          throw std::logic_error("lowest cell enumeration produced a non-reduced triple for " + format_element(cf.w));
        if (!seen.insert(cf.w).second)
          throw std::logic_error("lowest cell enumeration produced a duplicate element " + format_element(cf.w));
        out.push_back(std::move(cf));
      }
    }
  }
  std::vector<std::pair<std::string, CellFactorization>> keyed;
  for (auto& cf : out) keyed.emplace_back(format_element(cf.w), std::move(cf));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.w.length() != b.second.w.length()) return a.second.w.length() < b.second.w.length();
    return a.first < b.first;
  });
  out.clear();
  for (auto& [s, cf] : keyed) out.push_back(std::move(cf));
  return out;
}

}  // namespace affkl
