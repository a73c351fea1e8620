#include "graphcalc/digraph.hpp"

#include <numeric>
#include <string>

#include "graphcalc/errors.hpp"

namespace graphcalc {

namespace {

std::string edge_name(const Edge& e) {
  return "[" + std::to_string(e.first) + ", " + std::to_string(e.second) + "]";
}

}  // namespace

Digraph::Digraph(int n_points, const std::vector<Edge>& edges) : n_points_(n_points) {
  if (n_points < 2) throw InvalidInput("vertices: need at least 2 points, got " + std::to_string(n_points));
  for (const auto& e : edges) {
    if (e.first < 1 || e.first > n_points || e.second < 1 || e.second > n_points) {
      throw InvalidInput("edges: " + edge_name(e) + " has a vertex outside 1.." + std::to_string(n_points));
    }
    if (e.first == e.second) throw InvalidInput("edges: loop " + edge_name(e) + " is not allowed");
    if (!edges_.insert(e).second) throw InvalidInput("edges: duplicate edge " + edge_name(e));
  }
}

Digraph Digraph::complete(int n_points) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n_points; ++i) {
    for (Vertex j = 1; j <= n_points; ++j) {
      if (i != j) edges.emplace_back(i, j);
    }
  }
  return Digraph(n_points, edges);
}

bool Digraph::is_complete() const {
  return edges_.size() == static_cast<std::size_t>(n_points_) * static_cast<std::size_t>(n_points_ - 1);
}

bool Digraph::is_connected() const {
  std::vector<int> parent(static_cast<std::size_t>(n_points_) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : edges_) parent[find(a)] = find(b);
  const int root = find(1);
  for (Vertex v = 2; v <= n_points_; ++v) {
    if (find(v) != root) return false;
  }
  return true;
}

bool Digraph::supports(const Path& p) const {
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    if (!has_edge(p[k], p[k + 1])) return false;
  }
  return true;
}

}  // namespace graphcalc
