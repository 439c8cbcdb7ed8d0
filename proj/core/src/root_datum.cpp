#include "affkl/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

namespace affkl {

std::string to_string(const Vec& v, int dim) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < dim; ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Gauss-Jordan inverse over Q; throws on a singular matrix.
RationalMatrix invert(const IntMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(std::int64_t{m[i][j]});
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == Rational(0)) ++piv;
    if (piv == n) throw DatumError("Cartan matrix is singular");
    std::swap(a[piv], a[col]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == Rational(0)) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

/// Symmetrizing factors d_i with d_i A_ij = d_j A_ji; throws if none exist.
std::vector<Rational> symmetrizer(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, Rational(0));
  for (std::size_t start = 0; start < n; ++start) {
    if (d[start] != Rational(0)) continue;
    d[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0 || d[j] != Rational(0)) continue;
        d[j] = d[i] * Rational(std::int64_t{a[i][j]}, std::int64_t{a[j][i]});
        queue.push_back(j);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i] * Rational(a[i][j]) != d[j] * Rational(a[j][i])) throw DatumError("Cartan matrix is not symmetrizable");
  return d;
}

bool connected(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[j] && a[i][j] != 0) {
        seen[j] = true;
        queue.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

IntMatrix type_a_cartan(int rank) {
  IntMatrix a(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) {
    a[i][i] = 2;
    if (i + 1 < rank) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

std::string cartan_descriptor(const IntMatrix& a) {
  std::ostringstream os;
  os << "cartan:[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < a[i].size(); ++j) os << (j ? "," : "") << a[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace

void validate_finite_cartan(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n > static_cast<std::size_t>(kMaxDim))
    throw DatumError("rank exceeds the supported maximum of " + std::to_string(kMaxDim));
  for (const auto& row : a)
    if (row.size() != n) throw DatumError("Cartan matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && a[i][j] != 2) throw DatumError("Cartan matrix diagonal must be 2");
      if (i != j && a[i][j] > 0) throw DatumError("Cartan matrix off-diagonal entries must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0)) throw DatumError("Cartan matrix zero pattern must be symmetric");
    }
  const auto d = symmetrizer(a);
  // Sylvester: D A must be positive definite for finite type.
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = d[i] * Rational(a[i][j]);
  for (std::size_t k = 0; k < n; ++k) {
    if (b[k][k] <= Rational(0)) throw DatumError("Cartan matrix is not of finite type");
    for (std::size_t r = k + 1; r < n; ++r) {
      const Rational f = b[r][k] / b[k][k];
      for (std::size_t c = k; c < n; ++c) b[r][c] -= f * b[k][c];
    }
  }
}

struct DatumRegistry {
  std::mutex mutex;
  std::map<std::string, std::unique_ptr<RootDatum>> data;

  static DatumRegistry& instance() {
    static DatumRegistry registry;
    return registry;
  }

  template <typename Build>
  const RootDatum& get(const std::string& key, Build&& build) {
    std::lock_guard lock(mutex);
    auto it = data.find(key);
    if (it != data.end()) return *it->second;
    std::unique_ptr<RootDatum> d(new RootDatum());
    d->descriptor_ = key;
    build(*d);
    d->finish_construction();
    return *data.emplace(key, std::move(d)).first->second;
  }
};

const RootDatum& RootDatum::sl(int n) {
  if (n < 1 || n - 1 > kMaxDim) throw DatumError("SL:n requires 1 <= n <= " + std::to_string(kMaxDim + 1));
  return DatumRegistry::instance().get("SL:" + std::to_string(n), [n](RootDatum& d) {
    d.family_ = DatumFamily::kSL;
    d.type_a_n_ = n;
    d.rank_ = d.dim_ = n - 1;
    d.cartan_ = type_a_cartan(n - 1);
  });
}

const RootDatum& RootDatum::gl(int n) {
  if (n < 1 || n > kMaxDim) throw DatumError("GL:n requires 1 <= n <= " + std::to_string(kMaxDim));
  return DatumRegistry::instance().get("GL:" + std::to_string(n), [n](RootDatum& d) {
    d.family_ = DatumFamily::kGL;
    d.type_a_n_ = n;
    d.rank_ = n - 1;
    d.dim_ = n;
    d.cartan_ = type_a_cartan(n - 1);
  });
}

const RootDatum& RootDatum::from_cartan(const IntMatrix& cartan) {
  validate_finite_cartan(cartan);
  if (!connected(cartan)) throw DatumError("Cartan matrix must be irreducible (connected Dynkin diagram)");
  return DatumRegistry::instance().get(cartan_descriptor(cartan), [&](RootDatum& d) {
    d.family_ = DatumFamily::kCartan;
    d.rank_ = d.dim_ = static_cast<int>(cartan.size());
    d.cartan_ = cartan;
  });
}

const RootDatum& RootDatum::parse(std::string_view selector) {
  auto int_after = [&](std::size_t pos) {
    const std::string rest(selector.substr(pos));
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size()) throw DatumError("malformed datum selector '" + std::string(selector) + "'");
    return v;
  };
  if (selector.starts_with("SL:")) return sl(int_after(3));
  if (selector.starts_with("GL:")) return gl(int_after(3));
  if (selector.starts_with("cartan:")) {
    IntMatrix m;
    try {
      const auto j = nlohmann::json::parse(selector.substr(7));
      m = j.get<IntMatrix>();
    } catch (const nlohmann::json::exception& e) {
      throw DatumError("malformed Cartan matrix in '" + std::string(selector) + "': " + e.what());
    }
    if (m.empty()) throw DatumError("Cartan matrix must be non-empty");
    return from_cartan(m);
  }
  throw DatumError("unknown datum selector '" + std::string(selector) + "' (expected SL:n, GL:n or cartan:[[...]])");
}

void RootDatum::finish_construction() {
  const int n = rank_;
  simple_roots_.assign(static_cast<std::size_t>(n), Vec{});
  simple_coroots_.assign(static_cast<std::size_t>(n), Vec{});
  if (family_ == DatumFamily::kGL) {
    for (int i = 0; i < n; ++i) {
      simple_roots_[i][i] = simple_coroots_[i][i] = 1;
      simple_roots_[i][i + 1] = simple_coroots_[i][i + 1] = -1;
    }
    for (int i = 0; i < dim_; ++i) rho_regular_[i] = dim_ - 1 - i;
  } else {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) simple_roots_[j][i] = cartan_[i][j];
      simple_coroots_[j][j] = 1;
      rho_regular_[j] = 1;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pairing(simple_roots_[j], simple_coroots_[i]) != cartan_[i][j])
        throw std::logic_error("root datum construction is inconsistent");

  // Positive roots in simple-root coordinates, each with its coroot in
  // simple-coroot coordinates, closed under simple reflections.
  std::vector<std::pair<Vec, Vec>> found;
  std::set<Vec> seen;
  std::deque<std::size_t> queue;
  for (int j = 0; j < n; ++j) {
    found.emplace_back(unit_vec(j), unit_vec(j));
    seen.insert(unit_vec(j));
    queue.push_back(found.size() - 1);
  }
  while (!queue.empty()) {
    const auto [m, mc] = found[queue.front()];
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      std::int64_t p = 0, q = 0;
      for (int j = 0; j < n; ++j) {
        p += cartan_[i][j] * m[j];
        q += cartan_[j][i] * mc[j];
      }
      Vec r = m, rc = mc;
      r[i] -= p;
      rc[i] -= q;
      bool positive = !r.is_zero();
      for (int j = 0; j < n; ++j) positive = positive && r[j] >= 0;
      if (!positive || seen.count(r)) continue;
      if (found.size() > 4096) throw DatumError("root system too large");
      seen.insert(r);
      found.emplace_back(r, rc);
      queue.push_back(found.size() - 1);
    }
  }
  std::int64_t best_height = -1;
  for (const auto& [m, mc] : found) {
    RootPair rp;
    std::int64_t height = 0;
    for (int j = 0; j < n; ++j) {
      rp.root += m[j] * simple_roots_[j];
      rp.coroot += mc[j] * simple_coroots_[j];
      height += mc[j];
    }
    if (height > best_height) {
      best_height = height;
      highest_coroot_ = rp.coroot;
      dominant_short_root_ = rp.root;
    }
    two_rho_ += rp.root;
    positive_roots_.push_back(rp);
  }
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const RootPair& a, const RootPair& b) { return a.coroot < b.coroot; });

  if (n > 0) cartan_inverse_ = invert(cartan_);

  form_.assign(static_cast<std::size_t>(dim_), std::vector<Rational>(static_cast<std::size_t>(dim_), Rational(0)));
  if (family_ == DatumFamily::kGL) {
    for (int i = 0; i < dim_; ++i) form_[i][i] = 1;
  } else if (n > 0) {
    const auto d = symmetrizer(cartan_);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) form_[i][j] = d[i] * cartan_inverse_[i][j];
  }
}

bool RootDatum::is_coroot(const Vec& beta) const {
  for (const auto& rp : positive_roots_)
    if (rp.coroot == beta || rp.coroot == -beta) return true;
  return false;
}

std::optional<std::vector<Rational>> RootDatum::root_coordinates(const Vec& weight) const {
  const int n = rank_;
  std::vector<Rational> m(static_cast<std::size_t>(n), Rational(0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m[j] += cartan_inverse_[j][i] * Rational(pairing(weight, simple_coroots_[i]));
  for (int k = 0; k < dim_; ++k) {
    Rational s = 0;
    for (int j = 0; j < n; ++j) s += m[j] * Rational(simple_roots_[j][k]);
    if (s != Rational(weight[k])) return std::nullopt;
  }
  return m;
}

bool RootDatum::in_root_lattice(const Vec& weight) const {
  const auto m = root_coordinates(weight);
  return m && std::all_of(m->begin(), m->end(), [](const Rational& r) { return r.denominator() == 1; });
}

bool RootDatum::dominates(const Vec& lambda, const Vec& mu) const {
  const auto m = root_coordinates(lambda - mu);
  return m && std::all_of(m->begin(), m->end(), [](const Rational& r) { return r.denominator() == 1 && r >= Rational(0); });
}

bool RootDatum::is_dominant(const Vec& weight) const {
  for (int i = 1; i <= rank_; ++i)
    if (pairing(weight, simple_coroot(i)) < 0) return false;
  return true;
}

Rational RootDatum::form(const Vec& a, const Vec& b) const {
  Rational s = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (a[i] != 0 && b[j] != 0) s += form_[i][j] * Rational(a[i] * b[j]);
  return s;
}

Vec RootDatum::fundamental_weight(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("fundamental weight index out of range");
  Vec v;
  if (family_ == DatumFamily::kGL) {
    for (int k = 0; k < i; ++k) v[k] = 1;
  } else {
    v[i - 1] = 1;
  }
  return v;
}

void RootDatum::require_simply_connected(std::string_view what) const {
  if (!simply_connected())
    throw DatumError(std::string(what) + " requires a simply connected datum; " + descriptor_ + " is not");
}

}  // namespace affkl
