#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace affkl {

/// Largest lattice dimension supported by the fixed-size storage below.
inline constexpr int kMaxDim = 8;

/// Integer vector in Y or Y^vee. Coordinates past the datum's dimension are
/// always zero, so equality and hashing may look at the whole array.
struct Vec {
  std::array<std::int64_t, kMaxDim> c{};

  std::int64_t& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  std::int64_t operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  bool is_zero() const {
    for (auto x : c)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Vec&, const Vec&) = default;
  friend auto operator<=>(const Vec&, const Vec&) = default;

  friend Vec operator+(Vec a, const Vec& b) {
    for (int i = 0; i < kMaxDim; ++i) a[i] += b[i];
    return a;
  }
  friend Vec operator-(Vec a, const Vec& b) {
    for (int i = 0; i < kMaxDim; ++i) a[i] -= b[i];
    return a;
  }
  friend Vec operator-(Vec a) {
    for (auto& x : a.c) x = -x;
    return a;
  }
  friend Vec operator*(std::int64_t s, Vec a) {
    for (auto& x : a.c) x *= s;
    return a;
  }
  Vec& operator+=(const Vec& b) { return *this = *this + b; }
  Vec& operator-=(const Vec& b) { return *this = *this - b; }
};

/// The natural pairing of Y with Y^vee in dual coordinates.
inline std::int64_t pairing(const Vec& a, const Vec& b) {
  std::int64_t s = 0;
  for (int i = 0; i < kMaxDim; ++i) s += a[i] * b[i];
  return s;
}

inline Vec unit_vec(int i) {
  Vec v;
  v[i] = 1;
  return v;
}

/// Square integer matrix with small entries; Weyl group elements in the
/// bases used here have entries bounded by the highest coroot coefficients.
struct SmallMatrix {
  std::array<std::int8_t, kMaxDim * kMaxDim> a{};

  std::int8_t& at(int r, int c) { return a[static_cast<std::size_t>(r * kMaxDim + c)]; }
  std::int8_t at(int r, int c) const { return a[static_cast<std::size_t>(r * kMaxDim + c)]; }

  static SmallMatrix identity(int dim) {
    SmallMatrix m;
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  SmallMatrix transposed(int dim) const {
    SmallMatrix t;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  Vec apply(const Vec& v, int dim) const {
    Vec out;
    for (int r = 0; r < dim; ++r) {
      std::int64_t s = 0;
      for (int c = 0; c < dim; ++c) s += at(r, c) * v[c];
      out[r] = s;
    }
    return out;
  }

  SmallMatrix compose(const SmallMatrix& rhs, int dim) const {
    SmallMatrix out;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        int s = 0;
        for (int k = 0; k < dim; ++k) s += at(r, k) * rhs.at(k, c);
        out.at(r, c) = static_cast<std::int8_t>(s);
      }
    return out;
  }

  friend bool operator==(const SmallMatrix&, const SmallMatrix&) = default;
  friend auto operator<=>(const SmallMatrix&, const SmallMatrix&) = default;
};

/// FNV-1a, used for hashing and for stable content digests.
class Fnv1a {
 public:
  void add_bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h_ ^= p[i];
      h_ *= 1099511628211ull;
    }
  }
  void add(std::int64_t x) { add_bytes(&x, sizeof x); }
  void add(const std::string& s) {
    add_bytes(s.data(), s.size());
    add_bytes("\0", 1);
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 1469598103934665603ull;
};

std::string to_string(const Vec& v, int dim);

}  // namespace affkl
