#include "graphcalc/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphcalc {

bool is_valid_path(const std::vector<Vertex>& vertices) {
  if (vertices.empty()) return false;
  return std::adjacent_find(vertices.begin(), vertices.end()) == vertices.end();
}

Path::Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (!is_valid_path(vertices_)) throw std::invalid_argument("degenerate path monomial");
}

std::optional<Path> Path::make(std::vector<Vertex> vertices) {
  if (!is_valid_path(vertices)) return std::nullopt;
  return Path(Unchecked{}, std::move(vertices));
}

std::optional<Path> Path::concat(const Path& rhs) const {
  if (last() != rhs.first()) return std::nullopt;
  std::vector<Vertex> v;
  v.reserve(vertices_.size() + rhs.vertices_.size() - 1);
  v.insert(v.end(), vertices_.begin(), vertices_.end());
  v.insert(v.end(), rhs.vertices_.begin() + 1, rhs.vertices_.end());
  return Path(Unchecked{}, std::move(v));
}

Path Path::slice(std::size_t from, std::size_t to) const {
  return Path(Unchecked{}, std::vector<Vertex>(vertices_.begin() + from, vertices_.begin() + to));
}

std::string to_string(const Path& p) {
  const bool compact = std::all_of(p.vertices().begin(), p.vertices().end(),
                                   [](Vertex v) { return v >= 0 && v < 10; });
  std::string out = "e_";
  if (compact) {
    for (Vertex v : p.vertices()) out += std::to_string(v);
    return out;
  }
  out += "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(p[k]);
  }
  return out + ")";
}

}  // namespace graphcalc
