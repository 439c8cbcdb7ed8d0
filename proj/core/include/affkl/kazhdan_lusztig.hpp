#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "affkl/coxeter.hpp"
#include "affkl/hecke.hpp"

namespace affkl {

/// C_w = sum_x P'_{x,w} T_x.
struct KLRecord {
  GroupElement w;
  HeckeElt element;

  LaurentInt coeff(const GroupElement& x) const { return element.coeff(x); }
};

/// Memo for bar(T_x) and computed canonical basis elements.  Not
/// synchronised: give each worker its own and merge afterwards.
class KLCache {
 public:
  explicit KLCache(int interval_cap = kDefaultIntervalCap) : interval_cap_(interval_cap) {}

  int interval_cap() const { return interval_cap_; }
  BarCache& bars() { return bars_; }

  std::shared_ptr<const KLRecord> find(const GroupElement& w) const;
  void insert(std::shared_ptr<const KLRecord> rec);
  void merge_from(const KLCache& other);
  /// All records, sorted structurally by w.
  std::vector<std::shared_ptr<const KLRecord>> records() const;
  std::size_t size() const { return records_.size(); }

  /// Directory for persisted records; empty disables persistence.
  void set_persist_dir(std::string dir) { persist_dir_ = std::move(dir); }
  const std::string& persist_dir() const { return persist_dir_; }

 private:
  int interval_cap_;
  BarCache bars_;
  std::unordered_map<GroupElement, std::shared_ptr<const KLRecord>> records_;
  std::string persist_dir_;
};

/// The canonical basis element C_w.  Throws CapExceeded when l(w) exceeds the
/// cache's interval cap.
std::shared_ptr<const KLRecord> kl_basis(const GroupElement& w, KLCache& cache);
KLRecord kl_basis(const GroupElement& w);

/// C'<-_v (side kLeft, requires v.w_0 reduced) or C'->_v (side kRight,
/// requires w_0.v reduced).  The defining identity with C_{w_0} is checked.
struct ArrowBasisElt {
  GroupElement v;
  Side side;
  HeckeElt elt;
};
ArrowBasisElt arrow_basis(const GroupElement& v, Side side, KLCache& cache);

}  // namespace affkl
