#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace graphcalc {

/// 1-based vertex index.
using Vertex = int;

/// Vertex sequence (i1, ..., i_{n+1}) naming the basis form e_{i1...i_{n+1}} of
/// degree n. Consecutive entries are distinct; sequences with a repeated
/// consecutive entry denote the zero form and are never represented.
class Path {
 public:
  /// Throws std::invalid_argument for an empty or degenerate sequence.
  explicit Path(std::vector<Vertex> vertices);
  Path(std::initializer_list<Vertex> vertices) : Path(std::vector<Vertex>(vertices)) {}

  /// nullopt when some i_k == i_{k+1}, i.e. the form vanishes.
  static std::optional<Path> make(std::vector<Vertex> vertices);

  int degree() const { return static_cast<int>(vertices_.size()) - 1; }
  Vertex first() const { return vertices_.front(); }
  Vertex last() const { return vertices_.back(); }
  Vertex operator[](std::size_t k) const { return vertices_[k]; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  /// e_{i..k} · e_{k..j} = e_{i..k..j}; nullopt when the paths do not compose.
  std::optional<Path> concat(const Path& rhs) const;
  /// The sub-path covering vertices [from, to).
  Path slice(std::size_t from, std::size_t to) const;

  friend auto operator<=>(const Path&, const Path&) = default;
  friend bool operator==(const Path&, const Path&) = default;

 private:
  struct Unchecked {};
  Path(Unchecked, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

  std::vector<Vertex> vertices_;
};

bool is_valid_path(const std::vector<Vertex>& vertices);

/// "e_121", or "e_(1,10,2)" once any index has more than one digit.
std::string to_string(const Path& p);

}  // namespace graphcalc
