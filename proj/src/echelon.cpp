#include "graphcalc/echelon.hpp"

#include <algorithm>
#include <stdexcept>

#include "graphcalc/errors.hpp"

namespace graphcalc {

namespace {

// a += c * b, both sorted.
void axpy(SparseRow& a, const Rational& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(std::move(*ia++));
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, c * ib->second);
      ++ib;
    } else {
      Rational v = ia->second + c * ib->second;
      if (v != 0) out.emplace_back(std::move(ia->first), std::move(v));
      ++ia;
      ++ib;
    }
  }
  a = std::move(out);
}

const Rational* find_entry(const SparseRow& r, const Path& p) {
  auto it = std::lower_bound(r.begin(), r.end(), p, [](const auto& e, const Path& q) { return e.first < q; });
  return it != r.end() && it->first == p ? &it->second : nullptr;
}

}  // namespace

SparseRow EchelonBasis::to_row(const Element& x) const {
  if (x.degree() != degree_) {
    throw std::invalid_argument("echelon basis of degree " + std::to_string(degree_) +
                                " given an element of degree " + std::to_string(x.degree()));
  }
  SparseRow r;
  r.reserve(x.size());
  for (const auto& [p, c] : x.terms()) {
    if (!c.is_constant()) throw NonConstantCoefficient("γ-dependent coefficient on " + to_string(p));
    r.emplace_back(p, c.constant_term());
  }
  return r;
}

void EchelonBasis::reduce_in_place(SparseRow& r) const {
  // Rows carry zeros at foreign pivots, so the pivot coefficients of r can be
  // read off once up front.
  std::vector<std::pair<Rational, const SparseRow*>> hits;
  for (const auto& [p, c] : r) {
    if (auto it = rows_.find(p); it != rows_.end()) hits.emplace_back(-c, &it->second);
  }
  for (const auto& [c, row] : hits) axpy(r, c, *row);
}

bool EchelonBasis::insert(const Element& x) {
  SparseRow r = to_row(x);
  reduce_in_place(r);
  if (r.empty()) return false;
  const Path pivot = r.front().first;
  const Rational inv = 1 / r.front().second;
  for (auto& e : r) e.second *= inv;
  for (auto& [p, row] : rows_) {
    if (const Rational* c = find_entry(row, pivot)) {
      const Rational factor = -*c;
      axpy(row, factor, r);
    }
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

void EchelonBasis::absorb_disjoint(const EchelonBasis& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("degree mismatch in absorb_disjoint");
  for (const auto& [p, row] : other.rows_) rows_.emplace(p, row);
}

Element EchelonBasis::reduce(const Element& x) const {
  if (x.degree() != degree_) {
    throw std::invalid_argument("reduce: degree mismatch");
  }
  Element out = x;
  for (const auto& [p, c] : x.terms()) {
    auto it = rows_.find(p);
    if (it == rows_.end()) continue;
    for (const auto& [q, v] : it->second) out.add_term(q, c * (-v));
  }
  return out;
}

bool EchelonBasis::contains(const Element& x) const {
  SparseRow r = to_row(x);
  reduce_in_place(r);
  return r.empty();
}

std::vector<Path> EchelonBasis::pivots() const {
  std::vector<Path> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

Element EchelonBasis::row(const Path& pivot) const {
  Element x(degree_);
  for (const auto& [q, v] : rows_.at(pivot)) x.add_term(q, v);
  return x;
}

std::vector<Element> EchelonBasis::rows() const {
  std::vector<Element> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(this->row(p));
  return out;
}

EchelonResult echelonize(std::span<const Element> rows) {
  if (rows.empty()) return {};
  EchelonBasis basis(rows.front().degree());
  for (const auto& r : rows) basis.insert(r);
  return {basis.rows(), basis.pivots()};
}

bool in_span(const Element& x, const EchelonBasis& basis) { return basis.contains(x); }

}  // namespace graphcalc
