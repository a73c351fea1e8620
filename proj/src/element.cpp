#include "graphcalc/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphcalc {

Element Element::monomial(const std::vector<Vertex>& vertices, const GammaPoly& coeff) {
  Element x(static_cast<int>(vertices.size()) - 1);
  if (auto p = Path::make(vertices)) x.add_term(*p, coeff);
  return x;
}

Element Element::monomial(const Path& path, const GammaPoly& coeff) {
  Element x(path.degree());
  x.add_term(path, coeff);
  return x;
}

bool Element::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_constant(); });
}

GammaPoly Element::coeff(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? GammaPoly{} : it->second;
}

void Element::add_term(const Path& p, const GammaPoly& c) {
  if (p.degree() != degree_) {
    throw std::invalid_argument("path " + to_string(p) + " does not have degree " + std::to_string(degree_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::add_scaled(const Element& x, const GammaPoly& c) {
  if (c.is_zero()) return;
  for (const auto& [p, v] : x.terms_) add_term(p, v * c);
}

void Element::add_scaled(const Element& x, const Rational& c) {
  if (c == 0) return;
  for (const auto& [p, v] : x.terms_) add_term(p, v * c);
}

Element& Element::operator+=(const Element& rhs) {
  for (const auto& [p, v] : rhs.terms_) add_term(p, v);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  for (const auto& [p, v] : rhs.terms_) add_term(p, -v);
  return *this;
}

Element& Element::operator*=(const GammaPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [p, v] : out.terms_) v = -v;
  return out;
}

Element Element::filter(const std::function<bool(const Path&)>& keep) const {
  Element out(degree_);
  for (const auto& [p, v] : terms_) {
    if (keep(p)) out.terms_.emplace_hint(out.terms_.end(), p, v);
  }
  return out;
}

Element Element::block(Vertex i, Vertex j) const {
  return filter([i, j](const Path& p) { return p.first() == i && p.last() == j; });
}

Element Element::evaluate(const Rational& gamma) const {
  Element out(degree_);
  for (const auto& [p, v] : terms_) out.add_term(p, v.evaluate(gamma));
  return out;
}

Element Element::layer(std::size_t power) const {
  Element out(degree_);
  for (const auto& [p, v] : terms_) out.add_term(p, v.coeff(power));
  return out;
}

int Element::gamma_degree() const {
  int d = -1;
  for (const auto& [p, v] : terms_) d = std::max(d, v.degree());
  return d;
}

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : x.terms()) {
    // Pull a leading minus out of single-term coefficients.
    const bool single = std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                      [](const Rational& r) { return r != 0; }) == 1;
    const bool negative = single && c.coeff(static_cast<std::size_t>(c.degree())) < 0;
    const GammaPoly shown = negative ? -c : c;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (shown == GammaPoly(1)) {
      // bare monomial
    } else if (single) {
      out += to_string(shown) + "*";
    } else {
      out += "(" + to_string(shown) + ")*";
    }
    out += to_string(p);
  }
  return out;
}

}  // namespace graphcalc
