#pragma once

#include <span>
#include <string>
#include <vector>

#include "graphcalc/rational.hpp"

namespace graphcalc {

/// Univariate polynomial in the connection parameter γ with exact rational
/// coefficients. Coefficients are stored in ascending powers with no trailing
/// zeros, so the zero polynomial is the empty list.
class GammaPoly {
 public:
  GammaPoly() = default;
  GammaPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  GammaPoly(long constant);             // NOLINT(google-explicit-constructor)

  static GammaPoly gamma();
  static GammaPoly from_coeffs(std::vector<Rational> ascending);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational coeff(std::size_t power) const;
  /// Constant term; only meaningful when is_constant().
  Rational constant_term() const { return coeff(0); }

  Rational evaluate(const Rational& value) const;

  GammaPoly& operator+=(const GammaPoly& rhs);
  GammaPoly& operator-=(const GammaPoly& rhs);
  GammaPoly& operator*=(const GammaPoly& rhs);
  GammaPoly& operator*=(const Rational& rhs);
  GammaPoly operator-() const;

  friend GammaPoly operator+(GammaPoly a, const GammaPoly& b) { return a += b; }
  friend GammaPoly operator-(GammaPoly a, const GammaPoly& b) { return a -= b; }
  friend GammaPoly operator*(const GammaPoly& a, const GammaPoly& b);
  friend GammaPoly operator*(GammaPoly a, const Rational& b) { return a *= b; }
  friend bool operator==(const GammaPoly& a, const GammaPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// ASCII rendering with `g` standing for γ, e.g. "2*g - g^2".
std::string to_string(const GammaPoly& p);

}  // namespace graphcalc
