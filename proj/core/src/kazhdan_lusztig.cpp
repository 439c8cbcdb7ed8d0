#include "affkl/kazhdan_lusztig.hpp"

#include <algorithm>

#include "affkl/notation.hpp"
#include "affkl/serialize.hpp"

namespace affkl {

std::shared_ptr<const KLRecord> KLCache::find(const GroupElement& w) const {
  auto it = records_.find(w);
  return it == records_.end() ? nullptr : it->second;
}

void KLCache::insert(std::shared_ptr<const KLRecord> rec) { records_.try_emplace(rec->w, std::move(rec)); }

void KLCache::merge_from(const KLCache& other) {
  bars_.merge_from(other.bars_);
  for (const auto& [w, r] : other.records_) records_.try_emplace(w, r);
}

std::vector<std::shared_ptr<const KLRecord>> KLCache::records() const {
  std::vector<std::shared_ptr<const KLRecord>> out;
  out.reserve(records_.size());
  for (const auto& [w, r] : records_) out.push_back(r);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return structural_less(a->w, b->w); });
  return out;
}

namespace {

/// Triangular solve over [e, x] for x in W_a.
HeckeElt solve_affine(const GroupElement& x, KLCache& cache) {
  std::vector<GroupElement> interval = lower_interval(x, cache.interval_cap());
  std::stable_sort(interval.begin(), interval.end(),
                   [](const GroupElement& a, const GroupElement& b) { return a.length() > b.length(); });
  std::unordered_map<GroupElement, LaurentInt> acc;
  HeckeElt result;
  for (const auto& y : interval) {
    LaurentInt p;
    if (y == x) {
      p = 1;
    } else {
      auto it = acc.find(y);
      if (it == acc.end()) continue;
      const LaurentInt& a = it->second;
      // a = p - bar(p) with p in u^{-1}Z[u^{-1}].
      p = a.negative_part();
      if (a.coeff(0) != 0 || a.positive_part() != -p.bar())
        throw std::logic_error("Kazhdan-Lusztig solve: inconsistent bar data at " + format_element(y));
      acc.erase(it);
    }
    if (p.is_zero()) continue;
    result.add_term(y, p);
    const LaurentInt pb = p.bar();
    for (const auto& [z, r] : cache.bars().bar_basis(y).terms()) {
      if (z == y) continue;
      LaurentInt& slot = acc[z];
      slot += pb * r;
    }
  }
  return result;
}

}  // namespace

std::shared_ptr<const KLRecord> kl_basis(const GroupElement& w, KLCache& cache) {
  if (auto hit = cache.find(w)) return hit;
  if (!cache.persist_dir().empty()) {
    if (auto loaded = load_kl_record(cache.persist_dir(), w)) {
      auto rec = std::make_shared<const KLRecord>(std::move(*loaded));
      cache.insert(rec);
      return rec;
    }
  }
  auto rec = std::make_shared<KLRecord>();
  rec->w = w;
  const GroupElement p = pi_part(w);
  if (p.length() == 0 && p == GroupElement::identity(w.datum())) {
    rec->element = solve_affine(w, cache);
  } else {
    const auto inner = kl_basis(p.inverse() * w, cache);
    rec->element = left_mul_length_zero(p, inner->element);
  }
  if (!cache.persist_dir().empty()) save_kl_record(cache.persist_dir(), *rec);
  cache.insert(rec);
  return rec;
}

KLRecord kl_basis(const GroupElement& w) {
  KLCache cache;
  return *kl_basis(w, cache);
}

ArrowBasisElt arrow_basis(const GroupElement& v, Side side, KLCache& cache) {
  const GroupElement& w0 = longest_finite(v.datum());
  const bool left = side == Side::kLeft;
  const GroupElement target = left ? v * w0 : w0 * v;
  if (target.length() != v.length() + w0.length())
    throw std::invalid_argument(std::string("arrow_basis: ") + (left ? "v.w_0" : "w_0.v") +
                                " is not a reduced factorization for v = " + format_element(v));
  const auto big = kl_basis(target, cache);
  ArrowBasisElt out{v, side, {}};
  for (const auto& [y, c] : big->element.terms()) {
    const GroupElement x = left ? y * w0 : w0 * y;
    if (x.length() + w0.length() == y.length()) out.elt.add_term(x, c);
  }
  const auto cw0 = kl_basis(w0, cache);
  const HeckeElt check = left ? t_multiply(out.elt, cw0->element) : t_multiply(cw0->element, out.elt);
  if (!(check == big->element))
    throw std::logic_error("arrow_basis: defining identity with C_{w_0} fails for " + format_element(v));
  return out;
}

}  // namespace affkl
