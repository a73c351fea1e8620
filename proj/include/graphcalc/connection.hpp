#pragma once

#include <map>
#include <optional>
#include <tuple>

#include "graphcalc/digraph.hpp"
#include "graphcalc/element.hpp"
#include "graphcalc/tower.hpp"
#include "graphcalc/universal.hpp"

namespace graphcalc {

/// Free data of a linear connection on the complete symmetric graph with
/// σ = -1. Γ_ij^{ija} = Γ_ij^{aij} = 1 are fixed, every other Γ vanishes
/// except the free Γ_ij^{iaj} (a ≠ i, j); the stored value is 1 + Γ_ij^{iaj}.
class ConnectionParams {
 public:
  /// (i, j, a) with i, j, a pairwise distinct.
  using Key = std::tuple<Vertex, Vertex, Vertex>;

  /// The permutation-invariant family: 1 + Γ_ij^{iaj} = gamma for all i, j, a.
  static ConnectionParams symmetric(GammaPoly gamma);
  /// Arbitrary per-(i, j, a) values of 1 + Γ_ij^{iaj}.
  static ConnectionParams general(std::map<Key, GammaPoly> table);

  /// True for symmetric() and for general tables that happen to be constant.
  bool is_symmetric() const;
  /// The common value in the symmetric case.
  std::optional<GammaPoly> symmetric_value() const;

  /// 1 + Γ_ij^{iaj}. Throws InvalidInput if a general table lacks the key.
  GammaPoly free_value(Vertex i, Vertex j, Vertex a) const;
  /// Γ_ij^{klm}, zero when i = j, k = l or l = m.
  GammaPoly christoffel(Vertex i, Vertex j, Vertex k, Vertex l, Vertex m) const;
  /// Throws InvalidInput unless every (i, j, a) over 1..N is covered.
  void validate(int n_points) const;

 private:
  std::optional<GammaPoly> symmetric_;
  std::map<Key, GammaPoly> table_;
};

// ---- complete symmetric graph ------------------------------------------------

/// D(e_ij) = de_i ⊗ de_j + Σ_a (1 + Γ_ij^{iaj}) e_iaj. Throws IndexError for i == j.
Element connection_D(const UniversalContext& ctx, const ConnectionParams& params, Vertex i, Vertex j);
/// Linear extension of D to any 1-form.
Element connection_D(const UniversalContext& ctx, const ConnectionParams& params, const Element& omega);
/// D(e_ij) = Σ_{klm} Γ_ij^{klm} e_klm, straight from the Christoffel table.
Element connection_D_from_christoffel(const UniversalContext& ctx, const ConnectionParams& params, Vertex i,
                                      Vertex j);

/// T = d - π∘D with π = 1.
Element torsion_T(const UniversalContext& ctx, const ConnectionParams& params, Vertex i, Vertex j);
Element torsion_T(const UniversalContext& ctx, const ConnectionParams& params, const Element& omega);

/// D_1(ω ⊗ ω') = dω ⊗ ω' - ω ⊗ Dω' extended linearly over 2-forms.
Element extend_D1(const UniversalContext& ctx, const ConnectionParams& params, const Element& x);
/// D_2(ω ⊗ ω') = Dω ⊗ ω' - ω ⊗ Dω' (σ = -1).
Element extend_D2(const UniversalContext& ctx, const ConnectionParams& params, const Element& x);

enum class CurvatureKind { d1d, d2d };

/// D_1 D e_ij or D_2 D e_ij by composing the maps above.
Element curvature_composed(const UniversalContext& ctx, const ConnectionParams& params, CurvatureKind kind,
                           Vertex i, Vertex j);
/// Closed form in terms of the Christoffel symbols (valid for any table).
Element curvature_closed_form(const UniversalContext& ctx, const ConnectionParams& params, CurvatureKind kind,
                              Vertex i, Vertex j);
/// Closed form of the symmetric family, written directly in γ.
Element curvature_symmetric_closed_form(const UniversalContext& ctx, const GammaPoly& gamma, CurvatureKind kind,
                                        Vertex i, Vertex j);
/// Closed form, verified against the composition. Throws CrossCheckFailure
/// on disagreement.
Element curvature_complete(const UniversalContext& ctx, const ConnectionParams& params, CurvatureKind kind,
                           Vertex i, Vertex j);

struct Bilinearized {
  Element bilinear;
  Element dropped;
};

/// Keeps the S_ij block (paths from i to j); everything else is dropped.
Bilinearized bilinearize(const Element& x, Vertex i, Vertex j);

struct CurvatureReport {
  Edge edge;
  Element raw;
  Element bilinear;
  Element dropped;
};

CurvatureReport complete_curvature_report(const UniversalContext& ctx, const ConnectionParams& params,
                                          CurvatureKind kind, Vertex i, Vertex j);

// ---- subgraphs --------------------------------------------------------------
//
// Tensor products K¹ ⊗_A ... ⊗_A K¹ are represented by paths all of whose
// steps are edges; φ1 ⊗ ... ⊗ φ1 drops every other path.

/// Paths of x supported by the graph.
Element restrict_to_graph(const Digraph& g, const Element& x);

/// ∇e_ij = (φ1 ⊗ φ1)(D e_ij). Throws EdgeNotInGraph.
Element nabla_edge(const CalculusTower& tower, const ConnectionParams& params, Vertex i, Vertex j);
/// Linear extension over K¹.
Element nabla(const CalculusTower& tower, const ConnectionParams& params, const Element& omega);

/// p_12 = P_{1,1} ⊗ 1 on a degree-3 tensor: φ2 on the first two factors.
Element apply_p12(const CalculusTower& tower, const Element& x);

/// ∇_1(ω ⊗ ω') = δω ⊗ ω' - p_12(ω ⊗ ∇ω'), on a K¹ ⊗ K¹ element x.
Element nabla1(const CalculusTower& tower, const ConnectionParams& params, const Element& x);
/// (φ2 ⊗ φ1) ∘ D_1 ∘ (j1 ⊗ j1).
Element nabla1_definitional(const CalculusTower& tower, const ConnectionParams& params, const Element& x);
/// ∇_2(ω ⊗ ω') = ∇ω ⊗ ω' - ω ⊗ ∇ω' (τ = -1).
Element nabla2(const CalculusTower& tower, const ConnectionParams& params, const Element& x);
/// (φ1 ⊗ φ1 ⊗ φ1) ∘ D_2 ∘ (j1 ⊗ j1).
Element nabla2_definitional(const CalculusTower& tower, const ConnectionParams& params, const Element& x);

/// which = 1: raw = ∇_1 ∇ e_ij. which = 2: raw = p_12 ∇_2 ∇ e_ij.
/// Throws EdgeNotInGraph, std::invalid_argument for other `which`.
CurvatureReport nabla_curvature(const CalculusTower& tower, const ConnectionParams& params, int which, Vertex i,
                                Vertex j);

/// T_∇ = δ - p∘∇.
Element torsion_nabla(const CalculusTower& tower, const ConnectionParams& params, Vertex i, Vertex j);
Element torsion_nabla(const CalculusTower& tower, const ConnectionParams& params, const Element& omega);

// ---- metric -----------------------------------------------------------------

/// g(e_ij ⊗ e_jk) = μ δ_ik e_i with one μ for all points.
struct Metric {
  Rational mu;
};

/// g applied to a 2-form, giving a function.
Element apply_metric(const Metric& g, const Element& x);
/// (1 ⊗ g) applied to a 3-form, giving a 1-form.
Element apply_one_tensor_metric(const Metric& g, const Element& x);

/// dg(e_iji) - (1 ⊗ g) D_2(e_iji) for every ordered pair (i, j).
/// Throws DegenerateMetric for μ = 0.
std::map<Edge, Element> metric_check(const UniversalContext& ctx, const ConnectionParams& params,
                                     const Metric& g);
bool metric_compatible(const std::map<Edge, Element>& discrepancies);

}  // namespace graphcalc
