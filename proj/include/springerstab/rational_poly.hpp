#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "springerstab/numbers.hpp"

namespace springerstab {

// Univariate polynomial with exact rational coefficients, stored ascending
// by power with trailing zeros trimmed. The zero polynomial has empty
// storage and degree() == -1.
class RationalPoly {
 public:
  RationalPoly() = default;

  explicit RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static RationalPoly constant(Rational c) {
    return RationalPoly(std::vector<Rational>{std::move(c)});
  }

  static RationalPoly monomial(Rational c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = std::move(c);
    return RationalPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
  }

  Rational leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
  }

  bool operator==(const RationalPoly&) const = default;

  RationalPoly& operator+=(const RationalPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
      coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }

  RationalPoly& operator-=(const RationalPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
      coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
  }

  RationalPoly& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) {
    a += b;
    return a;
  }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) {
    a -= b;
    return a;
  }
  friend RationalPoly operator*(RationalPoly a, const Rational& c) {
    a *= c;
    return a;
  }
  friend RationalPoly operator*(const Rational& c, RationalPoly a) {
    a *= c;
    return a;
  }

  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPoly(std::move(out));
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  Rational operator()(const Int& x) const { return (*this)(Rational(x)); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

// p(x + s), by Horner over the shifted variable.
inline RationalPoly shifted(const RationalPoly& p, const Rational& s) {
  if (p.is_zero()) return {};
  RationalPoly axis(std::vector<Rational>{s, Rational(1)});
  RationalPoly out;
  for (std::size_t i = p.coefficients().size(); i-- > 0;)
    out = out * axis + RationalPoly::constant(p.coefficients()[i]);
  return out;
}

// The unique polynomial P with P(x) = Σ_{i=from}^{x-1} p(i) for every
// integer x >= from (so P(from) = 0 and P(x+1) - P(x) = p(x)). Computed in
// the binomial basis C(x-from, j), where summation is an index shift:
// the basis coefficients are the forward differences of p at from, and
// Σ_{i} C(i-from, j) telescopes to C(x-from, j+1).
inline RationalPoly discrete_sum(const RationalPoly& p, const Int& from) {
  if (p.is_zero()) return {};
  const int d = p.degree();
  std::vector<Rational> diffs(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) diffs[static_cast<std::size_t>(j)] = p(Int(from + j));
  for (int level = 1; level <= d; ++level)
    for (int j = d; j >= level; --j)
      diffs[static_cast<std::size_t>(j)] -= diffs[static_cast<std::size_t>(j - 1)];

  RationalPoly basis = RationalPoly::constant(1);
  RationalPoly out;
  Int fact = 1;
  for (int j = 0; j <= d; ++j) {
    // basis becomes (x-from)(x-from-1)...(x-from-j), the numerator of
    // C(x-from, j+1)
    basis = basis * RationalPoly(std::vector<Rational>{Rational(-(from + j)), Rational(1)});
    fact *= j + 1;
    out += basis * (diffs[static_cast<std::size_t>(j)] / Rational(fact));
  }
  return out;
}

// Common-denominator display form, e.g. "(x^2-x-2)/2" or "x-1".
inline std::string to_display_string(const RationalPoly& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  Int common = 1;
  for (const auto& c : p.coefficients())
    common = boost::multiprecision::lcm(common, denominator(c));

  std::string body;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Int scaled = numerator(c) * (common / denominator(c));
    if (body.empty())
      body += scaled < 0 ? "-" : "";
    else
      body += scaled < 0 ? "-" : "+";
    Int mag = abs(scaled);
    if (i == 0) {
      body += mag.str();
    } else {
      if (mag != 1) body += mag.str();
      body += var;
      if (i > 1) body += "^" + std::to_string(i);
    }
  }
  if (common == 1) return body;
  return "(" + body + ")/" + common.str();
}

// Same content as to_display_string, typeset as \frac{1}{d}\left(...\right).
inline std::string to_latex_string(const RationalPoly& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  Int common = 1;
  for (const auto& c : p.coefficients())
    common = boost::multiprecision::lcm(common, denominator(c));

  std::string body;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Int scaled = numerator(c) * (common / denominator(c));
    if (body.empty())
      body += scaled < 0 ? "-" : "";
    else
      body += scaled < 0 ? "-" : "+";
    Int mag = abs(scaled);
    if (i == 0) {
      body += mag.str();
    } else {
      if (mag != 1) body += mag.str();
      body += var;
      if (i > 9)
        body += "^{" + std::to_string(i) + "}";
      else if (i > 1)
        body += "^" + std::to_string(i);
    }
  }
  if (common == 1) return body;
  return "\\frac{1}{" + common.str() + "}\\left(" + body + "\\right)";
}

}  // namespace springerstab
