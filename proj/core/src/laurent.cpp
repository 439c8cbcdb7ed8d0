#include "affkl/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace affkl {

LaurentInt::LaurentInt(long long c) {
  if (c != 0) terms_.emplace_back(0, BigInt(c));
}

LaurentInt LaurentInt::monomial(const BigInt& c, int exponent) {
  LaurentInt p;
  if (c != 0) p.terms_.emplace_back(exponent, c);
  return p;
}

LaurentInt LaurentInt::xi() { return u(1) - u(-1); }

BigInt LaurentInt::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  return (it != terms_.end() && it->first == exponent) ? it->second : BigInt(0);
}

LaurentInt LaurentInt::bar() const {
  LaurentInt p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
  return p;
}

LaurentInt LaurentInt::shifted(int e) const {
  LaurentInt p = *this;
  for (auto& t : p.terms_) t.first += e;
  return p;
}

LaurentInt LaurentInt::negative_part() const {
  LaurentInt p;
  for (const auto& t : terms_)
    if (t.first < 0) p.terms_.push_back(t);
  return p;
}

LaurentInt LaurentInt::positive_part() const {
  LaurentInt p;
  for (const auto& t : terms_)
    if (t.first > 0) p.terms_.push_back(t);
  return p;
}

void LaurentInt::add_scaled(const LaurentInt& b, int sign) {
  if (b.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  while (i != terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      out.emplace_back(j->first, sign > 0 ? j->second : BigInt(-j->second));
      ++j;
    } else {
      BigInt c = i->second;
      if (sign > 0)
        c += j->second;
      else
        c -= j->second;
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& b) {
  add_scaled(b, 1);
  return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& b) {
  add_scaled(b, -1);
  return *this;
}

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1 && b.terms_[0].second == 1) return a.shifted(b.terms_[0].first);
  if (a.terms_.size() == 1 && a.terms_[0].second == 1) return b.shifted(a.terms_[0].first);
  std::map<int, BigInt> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  LaurentInt p;
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.emplace_back(e, std::move(c));
  return p;
}

LaurentInt LaurentInt::operator-() const {
  LaurentInt p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

std::string LaurentInt::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'u';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::optional<std::vector<BigInt>> xi_form(const LaurentInt& p) {
  std::vector<BigInt> coeffs;
  LaurentInt rest = p;
  while (!rest.is_zero()) {
    const int d = rest.max_exponent();
    if (d < 0) return std::nullopt;
    const BigInt c = rest.coeff(d);
    if (coeffs.size() < static_cast<std::size_t>(d) + 1) coeffs.resize(static_cast<std::size_t>(d) + 1);
    coeffs[static_cast<std::size_t>(d)] = c;
    LaurentInt power = 1;
    for (int k = 0; k < d; ++k) power *= LaurentInt::xi();
    rest -= LaurentInt::monomial(c, 0) * power;
  }
  return coeffs;
}

}  // namespace affkl
