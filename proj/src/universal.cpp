#include "graphcalc/universal.hpp"

#include "graphcalc/errors.hpp"

namespace graphcalc {

UniversalContext::UniversalContext(int n_points) : n_points_(n_points) {
  if (n_points < 2) {
    throw InvalidInput("need at least 2 points (N = " + std::to_string(n_points) + " has no 1-forms)");
  }
}

std::uint64_t omega_dimension(int n_points, int degree) {
  std::uint64_t dim = static_cast<std::uint64_t>(n_points);
  for (int k = 0; k < degree; ++k) dim *= static_cast<std::uint64_t>(n_points - 1);
  return dim;
}

std::vector<Path> omega_basis(const UniversalContext& ctx, int degree) {
  const int n = ctx.n_points();
  std::vector<Path> out;
  out.reserve(omega_dimension(n, degree));
  std::vector<Vertex> v(static_cast<std::size_t>(degree) + 1, 1);
  // Odometer over 1..N with the no-repeat constraint checked on completion.
  while (true) {
    if (auto p = Path::make(v)) out.push_back(std::move(*p));
    int k = degree;
    while (k >= 0 && v[k] == n) v[k--] = 1;
    if (k < 0) break;
    ++v[k];
  }
  return out;
}

Element differential(const UniversalContext& ctx, const Element& x) {
  const int n = ctx.n_points();
  Element out(x.degree() + 1);
  std::vector<Vertex> buf;
  for (const auto& [p, c] : x.terms()) {
    const auto& v = p.vertices();
    for (std::size_t slot = 0; slot <= v.size(); ++slot) {
      const GammaPoly signed_c = slot % 2 == 0 ? c : -c;
      for (Vertex k = 1; k <= n; ++k) {
        if ((slot > 0 && v[slot - 1] == k) || (slot < v.size() && v[slot] == k)) continue;
        buf.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(slot));
        buf.push_back(k);
        buf.insert(buf.end(), v.begin() + static_cast<std::ptrdiff_t>(slot), v.end());
        out.add_term(*Path::make(buf), signed_c);
      }
    }
  }
  return out;
}

Element multiply(const Element& x, const Element& y) {
  Element out(x.degree() + y.degree());
  for (const auto& [p, a] : x.terms()) {
    for (const auto& [q, b] : y.terms()) {
      if (auto r = p.concat(q)) out.add_term(*r, a * b);
    }
  }
  return out;
}

Element function_element(std::span<const Rational> values) {
  Element f(0);
  for (std::size_t k = 0; k < values.size(); ++k) {
    f.add_term(Path{static_cast<Vertex>(k + 1)}, values[k]);
  }
  return f;
}

Element unit(const UniversalContext& ctx) {
  return function_element(std::vector<Rational>(static_cast<std::size_t>(ctx.n_points()), Rational(1)));
}

Element module_action(Side side, Vertex k, const Element& x) {
  if (side == Side::left) return x.filter([k](const Path& p) { return p.first() == k; });
  return x.filter([k](const Path& p) { return p.last() == k; });
}

}  // namespace graphcalc
