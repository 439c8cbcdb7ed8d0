#include "affkl/coxeter.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

namespace affkl {

std::vector<AffineRoot> inversion_set(const GroupElement& g) {
  const RootDatum& d = g.datum();
  std::vector<AffineRoot> out;
  for (const auto& rp : d.positive_roots()) {
    const std::int64_t bound = std::abs(pairing(g.trans(), g.fin_on_coroot(rp.coroot))) + 1;
    for (std::int64_t k = 0; k <= bound; ++k) {
      const AffineRoot a{rp.coroot, k};
      if (!g.act(a).is_positive(d)) out.push_back(a);
      if (k == 0) continue;
      const AffineRoot b{-rp.coroot, k};
      if (!g.act(b).is_positive(d)) out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int first_left_descent(const GroupElement& g, bool largest) {
  const int n = g.datum().num_generators();
  if (largest) {
    for (int i = n - 1; i >= 0; --i)
      if (g.left_descent(i)) return i;
  } else {
    for (int i = 0; i < n; ++i)
      if (g.left_descent(i)) return i;
  }
  return -1;
}

NormalForm strip(const GroupElement& g, bool largest) {
  NormalForm nf;
  GroupElement cur = g;
  for (;;) {
    const int i = first_left_descent(cur, largest);
    if (i < 0) break;
    nf.word.push_back(i);
    cur = GroupElement::simple(g.datum(), i) * cur;
  }
  nf.pi_part = cur;
  return nf;
}

}  // namespace

int length_by_stripping(const GroupElement& g) { return static_cast<int>(strip(g, false).word.size()); }

NormalForm normal_form(const GroupElement& g) {
  // Stripping from the left gives g = s_{i1} ... s_{il} p; rewrite as
  // p * (p^{-1} s_{i1} ... s_{il} p) and strip that W_a element instead.
  const GroupElement p = strip(g, false).pi_part;
  NormalForm nf = strip(p.inverse() * g, false);
  nf.pi_part = p;
  return nf;
}

NormalForm normal_form_largest(const GroupElement& g) {
  const GroupElement p = strip(g, false).pi_part;
  NormalForm nf = strip(p.inverse() * g, true);
  nf.pi_part = p;
  return nf;
}

GroupElement pi_part(const GroupElement& g) { return strip(g, false).pi_part; }

std::int64_t pi_index(const GroupElement& g) {
  const RootDatum& d = g.datum();
  const Vec& t = g.trans();
  switch (d.family()) {
    case DatumFamily::kGL: {
      std::int64_t s = 0;
      for (int i = 0; i < d.dim(); ++i) s += t[i];
      return s;
    }
    case DatumFamily::kSL: {
      const int n = d.type_a_n();
      std::int64_t s = 0;
      for (int i = 0; i < d.dim(); ++i) s += (i + 1) * t[i];
      return ((s % n) + n) % n;
    }
    case DatumFamily::kCartan:
      break;
  }
  if (d.in_root_lattice(t)) return 0;
  for (int j = 1; j <= d.rank(); ++j)
    if (d.in_root_lattice(t - d.fundamental_weight(j))) return j;
  throw std::logic_error("weight class not represented by a fundamental weight");
}

GroupElement pi_element(const RootDatum& d, std::int64_t k) {
  Vec rep;
  switch (d.family()) {
    case DatumFamily::kGL:
      if (d.dim() > 0) rep[0] = k;
      break;
    case DatumFamily::kSL:
      if (d.dim() > 0) rep[0] = ((k % d.type_a_n()) + d.type_a_n()) % d.type_a_n();
      break;
    case DatumFamily::kCartan:
      if (k < 0 || k > d.rank()) throw std::out_of_range("pi index out of range");
      if (k > 0) rep = d.fundamental_weight(static_cast<int>(k));
      break;
  }
  return pi_part(GroupElement::translation(d, rep));
}

GroupElement evaluate_word(const RootDatum& d, const std::vector<int>& word) {
  GroupElement g = GroupElement::identity(d);
  for (int i : word) g = g * GroupElement::simple(d, i);
  return g;
}

bool is_reduced_pair(const GroupElement& x, const GroupElement& y) {
  return (x * y).length() == x.length() + y.length();
}

bool reduced_pair_root_criterion(const GroupElement& x, const GroupElement& y) {
  for (const auto& a : inversion_set(y))
    if (x.act(y.act(a)).is_positive(x.datum())) return false;
  return true;
}

bool bruhat_leq_word(const GroupElement& x, const GroupElement& pi, const std::vector<int>& word) {
  GroupElement cur = pi.inverse() * x;
  if (!cur.in_affine_subgroup()) return false;
  const RootDatum& d = x.datum();
  for (int i : word) {
    if (cur.length() == 0) break;
    if (cur.left_descent(i)) cur = GroupElement::simple(d, i) * cur;
  }
  return cur.length() == 0;
}

bool bruhat_leq(const GroupElement& x, const GroupElement& w) {
  if (&x.datum() != &w.datum()) throw DatumMismatch("bruhat_leq: different root data");
  if (x.length() > w.length()) return false;
  if (!x.datum().in_root_lattice(x.trans() - w.trans())) return false;
  const NormalForm nf = normal_form(w);
  return bruhat_leq_word(x, nf.pi_part, nf.word);
}

std::vector<GroupElement> lower_interval(const GroupElement& w, int cap) {
  if (w.length() > cap)
    throw CapExceeded("Bruhat interval of an element of length " + std::to_string(w.length()) +
                      " exceeds the cap " + std::to_string(cap));
  const RootDatum& d = w.datum();
  const NormalForm nf = normal_form(w);
  std::unordered_set<GroupElement> set{GroupElement::identity(d)};
  for (auto it = nf.word.rbegin(); it != nf.word.rend(); ++it) {
    const GroupElement s = GroupElement::simple(d, *it);
    std::vector<GroupElement> add;
    for (const auto& x : set) add.push_back(s * x);
    set.insert(add.begin(), add.end());
  }
  std::vector<GroupElement> out;
  out.reserve(set.size());
  for (const auto& x : set) out.push_back(nf.pi_part * x);
  std::sort(out.begin(), out.end(), structural_less);
  return out;
}

ThreeFactor three_factor(const GroupElement& w) {
  const RootDatum& d = w.datum();
  GroupElement z = w;
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 1; i <= d.rank(); ++i)
      if (z.left_descent(i)) {
        z = GroupElement::simple(d, i) * z;
        progress = true;
        break;
      }
  }
  return {w * z.inverse(), z.trans(), z.fin()};
}

namespace {

bool in_set(const std::vector<int>& J, int i) { return std::find(J.begin(), J.end(), i) != J.end(); }

}  // namespace

std::pair<GroupElement, GroupElement> parabolic_decompose(const GroupElement& w, const std::vector<int>& J,
                                                          Side side) {
  const RootDatum& d = w.datum();
  for (int j : J)
    if (j < 0 || j > d.rank() || d.rank() == 0) throw std::out_of_range("parabolic index out of range");
  GroupElement m = w;
  for (bool progress = true; progress;) {
    progress = false;
    for (int j : J) {
      const bool desc = side == Side::kRight ? m.right_descent(j) : m.left_descent(j);
      if (!desc) continue;
      const GroupElement s = GroupElement::simple(d, j);
      m = side == Side::kRight ? m * s : s * m;
      progress = true;
      break;
    }
  }
  if (side == Side::kRight) return {m, m.inverse() * w};
  return {w * m.inverse(), m};
}

GroupElement longest_element(const RootDatum& d, const std::vector<int>& J) {
  bool full = d.rank() > 0;
  for (int i = 0; i <= d.rank() && full; ++i) full = in_set(J, i);
  if (full) throw std::invalid_argument("longest_element: the full affine generating set gives an infinite group");
  for (int j : J)
    if (j < 0 || j > d.rank() || d.rank() == 0) throw std::out_of_range("parabolic index out of range");
  GroupElement w = GroupElement::identity(d);
  for (bool progress = true; progress;) {
    progress = false;
    for (int j : J)
      if (!w.right_descent(j)) {
        w = w * GroupElement::simple(d, j);
        progress = true;
        break;
      }
  }
  return w;
}

const GroupElement& longest_finite(const RootDatum& d) {
  static std::mutex mutex;
  static std::map<const RootDatum*, GroupElement> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(&d);
  if (it == cache.end()) {
    std::vector<int> J;
    for (int i = 1; i <= d.rank(); ++i) J.push_back(i);
    it = cache.emplace(&d, longest_element(d, J)).first;
  }
  return it->second;
}

int d_automorphism(const RootDatum& d, int i) {
  const AffineRoot img = longest_finite(d).act(simple_affine_root(d, i));
  for (int j = 1; j <= d.rank(); ++j)
    if (img.beta == -d.simple_coroot(j) && img.k == 0) return j;
  throw std::logic_error("w0 does not map a simple root to a negative simple root");
}

GroupElement psi(const GroupElement& x) {
  if (!x.in_affine_subgroup()) throw std::invalid_argument("psi: element is not in the affine Weyl group W_a");
  return x.fin();
}

std::vector<GroupElement> finite_weyl_group(const RootDatum& d) {
  std::unordered_set<GroupElement> seen{GroupElement::identity(d)};
  std::vector<GroupElement> frontier{GroupElement::identity(d)};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier)
      for (int i = 1; i <= d.rank(); ++i) {
        GroupElement h = g * GroupElement::simple(d, i);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  std::vector<GroupElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), structural_less);
  return out;
}

std::vector<int> finite_right_descents(const GroupElement& v) {
  std::vector<int> out;
  for (int i = 1; i <= v.datum().rank(); ++i)
    if (v.right_descent(i)) out.push_back(i);
  return out;
}

std::vector<int> finite_left_descents(const GroupElement& v) {
  std::vector<int> out;
  for (int i = 1; i <= v.datum().rank(); ++i)
    if (v.left_descent(i)) out.push_back(i);
  return out;
}

}  // namespace affkl
