#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "graphcalc/element.hpp"

namespace graphcalc {

/// Sparse constant-coefficient row, sorted by path.
using SparseRow = std::vector<std::pair<Path, Rational>>;

/// Reduced row-echelon basis of a span of constant-coefficient elements of
/// one degree. Columns are ordered lexicographically by path; each row has a
/// unit coefficient at its pivot (its smallest path) and zeros at every other
/// pivot. The basis is canonical for the span, so it does not depend on the
/// order in which rows were inserted.
class EchelonBasis {
 public:
  explicit EchelonBasis(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds a row to the span. Returns true when the rank grew.
  /// Throws NonConstantCoefficient for γ-dependent input.
  bool insert(const Element& row);
  /// Merges the rows of a basis whose pivots and supports are disjoint from
  /// this one (used to assemble per-block results).
  void absorb_disjoint(const EchelonBasis& other);

  /// x minus its component along the span; the result has no pivot terms.
  /// Accepts γ-dependent coefficients: the reduction matrix is constant, so
  /// every γ power is reduced independently.
  Element reduce(const Element& x) const;
  /// Membership test. Throws NonConstantCoefficient for γ-dependent input.
  bool contains(const Element& x) const;

  bool is_pivot(const Path& p) const { return rows_.contains(p); }
  std::vector<Path> pivots() const;
  std::vector<Element> rows() const;
  Element row(const Path& pivot) const;

  friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
    return a.degree_ == b.degree_ && a.rows_ == b.rows_;
  }

 private:
  SparseRow to_row(const Element& x) const;
  void reduce_in_place(SparseRow& r) const;

  int degree_;
  std::map<Path, SparseRow> rows_;  // keyed by pivot
};

struct EchelonResult {
  std::vector<Element> pivot_basis;
  std::vector<Path> pivot_monomials;
};

/// RREF of the span of `rows`. All rows must share one degree.
EchelonResult echelonize(std::span<const Element> rows);

bool in_span(const Element& x, const EchelonBasis& basis);

}  // namespace graphcalc
