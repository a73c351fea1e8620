#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphcalc/element.hpp"

namespace graphcalc {

/// The algebra of functions on N points together with its universal
/// differential algebra Ω. Requires N >= 2.
class UniversalContext {
 public:
  /// Throws InvalidInput for N < 2 (a single point has Ω¹ = 0).
  explicit UniversalContext(int n_points);

  int n_points() const { return n_points_; }
  bool contains(Vertex v) const { return v >= 1 && v <= n_points_; }

 private:
  int n_points_;
};

/// dim Ω^n = N (N-1)^n.
std::uint64_t omega_dimension(int n_points, int degree);

/// All paths of length degree+1 over 1..N without repeated consecutive
/// vertices, in lexicographic order.
std::vector<Path> omega_basis(const UniversalContext& ctx, int degree);

/// The universal differential. On a monomial it is the alternating sum of
/// inserting 1 = Σ_k e_k at every slot; degenerate paths drop out.
Element differential(const UniversalContext& ctx, const Element& x);

/// Product of forms: concatenation of composable paths, zero otherwise.
/// Identical to the tensor product over A.
Element multiply(const Element& x, const Element& y);

/// f = Σ_k values[k-1] e_k as a degree-0 element.
Element function_element(std::span<const Rational> values);

/// The unit 1 = Σ_k e_k.
Element unit(const UniversalContext& ctx);

enum class Side { left, right };

/// e_k · x (left) or x · e_k (right): keeps terms starting (ending) at k.
Element module_action(Side side, Vertex k, const Element& x);

}  // namespace graphcalc
