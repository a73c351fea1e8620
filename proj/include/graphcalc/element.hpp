#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "graphcalc/gamma_poly.hpp"
#include "graphcalc/path.hpp"

namespace graphcalc {

/// Sparse, degree-homogeneous linear combination of path monomials with
/// γ-polynomial coefficients. Zero coefficients are never stored and terms
/// iterate in lexicographic path order.
class Element {
 public:
  using Terms = std::map<Path, GammaPoly>;

  explicit Element(int degree = 0) : degree_(degree) {}

  /// c·e_{v1...}; the zero element of degree |v|-1 when the path is degenerate.
  static Element monomial(const std::vector<Vertex>& vertices, const GammaPoly& coeff = 1);
  static Element monomial(const Path& path, const GammaPoly& coeff = 1);
  static Element monomial(std::initializer_list<Vertex> vertices, const GammaPoly& coeff = 1) {
    return monomial(std::vector<Vertex>(vertices), coeff);
  }

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// True when every coefficient is a constant (γ-free).
  bool is_constant() const;

  GammaPoly coeff(const Path& p) const;
  /// Adds c·p; throws std::invalid_argument if p has the wrong degree.
  void add_term(const Path& p, const GammaPoly& c);
  void add_scaled(const Element& x, const GammaPoly& c);
  void add_scaled(const Element& x, const Rational& c);

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const GammaPoly& c);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const GammaPoly& c) { return a *= c; }
  friend Element operator*(const GammaPoly& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Terms whose path satisfies `keep`.
  Element filter(const std::function<bool(const Path&)>& keep) const;
  /// The S_ij component: terms starting at i and ending at j.
  Element block(Vertex i, Vertex j) const;
  /// Substitutes a concrete value for γ.
  Element evaluate(const Rational& gamma) const;
  /// The coefficient of γ^power in every term (a constant element).
  Element layer(std::size_t power) const;
  /// Highest γ power across all terms; -1 for zero.
  int gamma_degree() const;

 private:
  int degree_;
  Terms terms_;
};

/// Signed sum of monomials, e.g. "e_121 + e_123 - (1 - g)*e_231"; "0" for zero.
std::string to_string(const Element& x);

}  // namespace graphcalc
