#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace affkl {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in u, stored as exponent-sorted (exponent,
/// coefficient) pairs with no zero coefficients.
class LaurentInt {
 public:
  using Term = std::pair<int, BigInt>;

  LaurentInt() = default;
  LaurentInt(long long c);  // NOLINT(google-explicit-constructor): constants promote
  static LaurentInt monomial(const BigInt& c, int exponent);
  /// u^e.
  static LaurentInt u(int e = 1) { return monomial(1, e); }
  /// xi = u - u^{-1}.
  static LaurentInt xi();

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int exponent) const;
  /// Requires a nonzero polynomial.
  int min_exponent() const { return terms_.front().first; }
  int max_exponent() const { return terms_.back().first; }

  /// p(u^{-1}).
  LaurentInt bar() const;
  /// u^e * p.
  LaurentInt shifted(int e) const;
  /// Terms with exponent < 0.
  LaurentInt negative_part() const;
  /// Terms with exponent > 0.
  LaurentInt positive_part() const;

  LaurentInt& operator+=(const LaurentInt& b);
  LaurentInt& operator-=(const LaurentInt& b);
  LaurentInt& operator*=(const LaurentInt& b) { return *this = *this * b; }
  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
  LaurentInt operator-() const;
  friend bool operator==(const LaurentInt&, const LaurentInt&) = default;

  /// E.g. "u^2 - 3 + u^-1"; "0" for zero.
  std::string to_string() const;

 private:
  void add_scaled(const LaurentInt& b, int sign);
  std::vector<Term> terms_;
};

/// Coefficients a_0, a_1, ... with p = sum a_k xi^k, or nothing if p is not a
/// polynomial in xi.
std::optional<std::vector<BigInt>> xi_form(const LaurentInt& p);

}  // namespace affkl
