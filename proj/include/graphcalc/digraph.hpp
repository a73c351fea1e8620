#pragma once

#include <set>
#include <utility>
#include <vector>

#include "graphcalc/path.hpp"

namespace graphcalc {

using Edge = std::pair<Vertex, Vertex>;

/// Directed graph on vertices 1..N without loops. Its edge set selects the
/// 1-forms e_ij that survive in the first-order calculus K¹.
class Digraph {
 public:
  /// Throws InvalidInput for N < 2, loops, out-of-range or duplicate edges.
  Digraph(int n_points, const std::vector<Edge>& edges);

  /// All ordered pairs i != j.
  static Digraph complete(int n_points);

  int n_points() const { return n_points_; }
  const std::set<Edge>& edges() const { return edges_; }
  bool has_edge(Vertex i, Vertex j) const { return edges_.contains({i, j}); }
  bool is_complete() const;
  /// Connectivity of the underlying undirected graph.
  bool is_connected() const;
  /// True when every consecutive pair of p is an edge.
  bool supports(const Path& p) const;

 private:
  int n_points_;
  std::set<Edge> edges_;
};

}  // namespace graphcalc
