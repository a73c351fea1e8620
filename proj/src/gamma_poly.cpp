#include "graphcalc/gamma_poly.hpp"

#include <algorithm>

namespace graphcalc {

GammaPoly::GammaPoly(const Rational& constant) {
  if (constant != 0) {
    coeffs_.push_back(constant);
    coeffs_.back().canonicalize();
  }
}

GammaPoly::GammaPoly(long constant) : GammaPoly(Rational(constant)) {}

GammaPoly GammaPoly::gamma() { return from_coeffs({Rational(0), Rational(1)}); }

GammaPoly GammaPoly::from_coeffs(std::vector<Rational> ascending) {
  GammaPoly p;
  p.coeffs_ = std::move(ascending);
  for (Rational& c : p.coeffs_) c.canonicalize();
  p.trim();
  return p;
}

Rational GammaPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational GammaPoly::evaluate(const Rational& value) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * value + *it;
  }
  return acc;
}

void GammaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

GammaPoly& GammaPoly::operator+=(const GammaPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

GammaPoly& GammaPoly::operator-=(const GammaPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

GammaPoly operator*(const GammaPoly& a, const GammaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return GammaPoly::from_coeffs(std::move(out));
}

GammaPoly& GammaPoly::operator*=(const GammaPoly& rhs) { return *this = *this * rhs; }

GammaPoly& GammaPoly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
  } else {
    Rational factor = rhs;
    factor.canonicalize();
    for (auto& c : coeffs_) c *= factor;
  }
  return *this;
}

GammaPoly GammaPoly::operator-() const {
  GammaPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::string to_string(const GammaPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += "g";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace graphcalc
