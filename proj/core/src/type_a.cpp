#include "affkl/type_a.hpp"

#include <algorithm>
#include <numeric>

namespace affkl {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

}  // namespace

void require_type_a(const RootDatum& d, const char* what) {
  if (!d.is_type_a()) throw DatumError(std::string(what) + " requires a builtin SL:n or GL:n datum");
}

std::vector<std::int64_t> eps_lift(const RootDatum& d, const Vec& lambda) {
  require_type_a(d, "eps_lift");
  const int n = d.type_a_n();
  std::vector<std::int64_t> L(static_cast<std::size_t>(n), 0);
  if (d.family() == DatumFamily::kGL) {
    for (int i = 0; i < n; ++i) L[i] = lambda[i];
  } else {
    for (int i = n - 2; i >= 0; --i) L[i] = L[i + 1] + lambda[i];
  }
  return L;
}

Vec from_eps(const RootDatum& d, const std::vector<std::int64_t>& eps) {
  require_type_a(d, "from_eps");
  const int n = d.type_a_n();
  if (static_cast<int>(eps.size()) != n) throw WindowError("epsilon vector has the wrong length");
  Vec v;
  if (d.family() == DatumFamily::kGL) {
    for (int i = 0; i < n; ++i) v[i] = eps[i];
  } else {
    for (int i = 0; i + 1 < n; ++i) v[i] = eps[i] - eps[i + 1];
  }
  return v;
}

std::vector<int> permutation_of(const GroupElement& u) {
  const RootDatum& d = u.datum();
  require_type_a(d, "permutation_of");
  const int n = d.type_a_n();
  std::vector<Vec> basis;
  for (int a = 0; a < n; ++a) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
    e[a] = 1;
    basis.push_back(from_eps(d, e));
  }
  std::vector<int> p(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    const Vec img = u.fin_on_weight(basis[a]);
    const auto it = std::find(basis.begin(), basis.end(), img);
    if (it == basis.end()) throw std::logic_error("finite part does not permute epsilon vectors");
    p[a] = static_cast<int>(it - basis.begin()) + 1;
  }
  return p;
}

GroupElement element_of_permutation(const RootDatum& d, const std::vector<int>& p) {
  require_type_a(d, "element_of_permutation");
  const int n = d.type_a_n();
  if (static_cast<int>(p.size()) != n) throw WindowError("permutation has the wrong length");
  std::vector<int> q = p;
  std::vector<int> word;
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 0; i + 1 < n; ++i)
      if (q[i] > q[i + 1]) {
        std::swap(q[i], q[i + 1]);
        word.push_back(i + 1);
        progress = true;
      }
  }
  std::vector<int> sorted(static_cast<std::size_t>(n));
  std::iota(sorted.begin(), sorted.end(), 1);
  if (q != sorted) throw WindowError("not a permutation of 1..n");
  GroupElement g = GroupElement::identity(d);
  for (int i : word) g = GroupElement::simple(d, i) * g;
  return g;
}

std::int64_t window_exponent(const Window& w) {
  const auto n = static_cast<std::int64_t>(w.size());
  std::int64_t s = 0;
  for (std::int64_t i = 0; i < n; ++i) s += w[i] - (i + 1);
  return floor_div(s, n);
}

Window window_of(const GroupElement& w) {
  const RootDatum& d = w.datum();
  require_type_a(d, "window_of");
  const int n = d.type_a_n();
  const auto p = permutation_of(w.fin());
  const auto L = eps_lift(d, w.trans());
  Window out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = p[i] + static_cast<std::int64_t>(n) * L[p[i] - 1];
  if (d.family() == DatumFamily::kSL) {
    const std::int64_t shift = -floor_div(window_exponent(out), n);
    for (auto& x : out) x += shift * n;
  }
  return out;
}

Window window_with_exponent(const GroupElement& w, std::int64_t exponent) {
  Window out = window_of(w);
  const std::int64_t n = static_cast<std::int64_t>(out.size());
  const std::int64_t diff = exponent - window_exponent(out);
  if (diff != 0 && (w.datum().family() != DatumFamily::kSL || mod(diff, n) != 0))
    throw WindowError("exponent " + std::to_string(exponent) + " is not compatible with the element");
  for (auto& x : out) x += diff;
  return out;
}

GroupElement element_of(const RootDatum& d, const Window& window) {
  require_type_a(d, "element_of");
  const int n = d.type_a_n();
  if (static_cast<int>(window.size()) != n)
    throw WindowError("window must have " + std::to_string(n) + " entries, got " + std::to_string(window.size()));
  std::vector<int> p(static_cast<std::size_t>(n));
  std::vector<std::int64_t> L(static_cast<std::size_t>(n), 0);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::int64_t sum = 0;
  for (int i = 0; i < n; ++i) {
    const std::int64_t r = mod(window[i] - 1, n) + 1;
    if (seen[r - 1]) throw WindowError("window entries must be pairwise distinct mod " + std::to_string(n));
    seen[r - 1] = true;
    p[i] = static_cast<int>(r);
    L[r - 1] = (window[i] - r) / n;
    sum += window[i] - (i + 1);
  }
  if (mod(sum, n) != 0) throw WindowError("window must satisfy sum(w_i - i) = 0 mod " + std::to_string(n));
  return GroupElement::from_parts(from_eps(d, L), element_of_permutation(d, p));
}

bool windows_equivalent(const RootDatum& d, const Window& a, const Window& b) {
  require_type_a(d, "windows_equivalent");
  if (a.size() != b.size()) return false;
  if (a.empty() || d.family() == DatumFamily::kGL) return a == b;
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  const std::int64_t diff = a[0] - b[0];
  if (mod(diff, n) != 0) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] - b[i] != diff) return false;
  return true;
}

GroupElement pi_generator(const RootDatum& d) {
  require_type_a(d, "pi_generator");
  const int n = d.type_a_n();
  std::vector<std::int64_t> e1(static_cast<std::size_t>(n), 0);
  e1[0] = 1;
  GroupElement u = GroupElement::identity(d);
  for (int i = 1; i < n; ++i) u = u * GroupElement::simple(d, i);
  return GroupElement::from_parts(from_eps(d, e1), u);
}

}  // namespace affkl
