#pragma once

#include <cstdint>
#include <vector>

#include "graphcalc/digraph.hpp"
#include "graphcalc/echelon.hpp"
#include "graphcalc/universal.hpp"

namespace graphcalc {

/// The calculus (K^n, δ) of a digraph up to a fixed degree.
///
/// ker φ_1 is spanned by the 1-forms of missing arrows, and ker φ_n is the
/// bimodule generated by d(ker φ_{n-1}). Every kernel is stored as the RREF
/// of its generators; since each generator lies in a single block S_ij the
/// RREF rows are block-pure, and the non-pivot paths of each block span the
/// complement Q^n. K^n elements are represented by their image in Q^n, which
/// makes the splitting map j_n the inclusion and φ_n the echelon reduction.
class CalculusTower {
 public:
  struct Block {
    Vertex first;
    Vertex last;
    std::vector<Element> kernel_rows;
    std::vector<Path> complement;
  };

  const Digraph& graph() const { return graph_; }
  const UniversalContext& context() const { return context_; }
  int max_degree() const { return static_cast<int>(kernels_.size()); }

  /// Echelon basis of ker φ_n, 1 <= n <= max_degree.
  const EchelonBasis& kernel(int n) const;
  /// Non-pivot paths of degree n: a basis of Q^n ≅ K^n, lexicographic.
  std::vector<Path> complement_basis(int n) const;
  std::vector<Block> blocks(int n) const;

  std::uint64_t dim_omega(int n) const;
  std::uint64_t dim_kernel(int n) const;
  std::uint64_t dim_k(int n) const;

  /// φ_n(x) expressed in Q^n, n = x.degree(). Identity on degree 0.
  Element project(const Element& x) const;
  bool in_kernel(const Element& x) const;
  /// δv = φ_{n+1}(d v) for a Q^n representative v; needs n+1 <= max_degree.
  Element delta(const Element& v) const;
  /// P_{n,m}(v, w) = φ_{n+m}(v · w).
  Element product(const Element& v, const Element& w) const;

 private:
  friend CalculusTower build_tower(const Digraph&, int);
  friend CalculusTower build_tower_serial(const Digraph&, int);
  CalculusTower(Digraph g, std::vector<EchelonBasis> kernels);

  Digraph graph_;
  UniversalContext context_;
  std::vector<EchelonBasis> kernels_;  // kernels_[n-1] = ker φ_n
};

/// Builds the tower with per-degree work split across OpenMP threads: d is
/// applied to kernel rows in parallel, then every block S_ab is echelonized
/// independently. Throws InvalidInput for an empty edge set or max_degree < 1.
CalculusTower build_tower(const Digraph& g, int max_degree);

/// Single-threaded reference: one global echelonization per degree, without
/// using the block decomposition. Produces a tower identical to build_tower.
CalculusTower build_tower_serial(const Digraph& g, int max_degree);

}  // namespace graphcalc
