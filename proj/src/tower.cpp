#include "graphcalc/tower.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "graphcalc/errors.hpp"

namespace graphcalc {

namespace {

void check_build_input(const Digraph& g, int max_degree) {
  if (max_degree < 1) throw InvalidInput("max_degree must be at least 1");
  if (g.edges().empty()) throw InvalidInput("edges: empty edge set, the calculus is zero");
}

EchelonBasis first_kernel(const Digraph& g, const UniversalContext& ctx) {
  EchelonBasis basis(1);
  for (const Path& p : omega_basis(ctx, 1)) {
    if (!g.has_edge(p.first(), p.last())) basis.insert(Element::monomial(p));
  }
  return basis;
}

// Splits x into its S_ab components, indexed by (a-1)*N + (b-1).
std::vector<std::pair<std::size_t, Element>> split_blocks(const Element& x, int n) {
  std::map<std::size_t, Element> pieces;
  for (const auto& [p, c] : x.terms()) {
    const auto key = static_cast<std::size_t>((p.first() - 1) * n + (p.last() - 1));
    pieces.try_emplace(key, x.degree()).first->second.add_term(p, c);
  }
  return {pieces.begin(), pieces.end()};
}

}  // namespace

CalculusTower::CalculusTower(Digraph g, std::vector<EchelonBasis> kernels)
    : graph_(std::move(g)), context_(graph_.n_points()), kernels_(std::move(kernels)) {}

const EchelonBasis& CalculusTower::kernel(int n) const {
  if (n < 1 || n > max_degree()) {
    throw std::out_of_range("degree " + std::to_string(n) + " outside the tower (1.." +
                            std::to_string(max_degree()) + ")");
  }
  return kernels_[static_cast<std::size_t>(n - 1)];
}

std::vector<Path> CalculusTower::complement_basis(int n) const {
  const EchelonBasis& ker = kernel(n);
  std::vector<Path> out;
  for (Path& p : omega_basis(context_, n)) {
    if (!ker.is_pivot(p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<CalculusTower::Block> CalculusTower::blocks(int n) const {
  std::map<std::pair<Vertex, Vertex>, Block> by_key;
  auto slot = [&](const Path& p) -> Block& {
    auto [it, inserted] = by_key.try_emplace({p.first(), p.last()});
    if (inserted) {
      it->second.first = p.first();
      it->second.last = p.last();
    }
    return it->second;
  };
  for (const Element& row : kernel(n).rows()) slot(row.terms().begin()->first).kernel_rows.push_back(row);
  for (const Path& p : complement_basis(n)) slot(p).complement.push_back(p);
  std::vector<Block> out;
  out.reserve(by_key.size());
  for (auto& [key, b] : by_key) out.push_back(std::move(b));
  return out;
}

std::uint64_t CalculusTower::dim_omega(int n) const { return omega_dimension(context_.n_points(), n); }
std::uint64_t CalculusTower::dim_kernel(int n) const { return kernel(n).rank(); }
std::uint64_t CalculusTower::dim_k(int n) const { return dim_omega(n) - dim_kernel(n); }

Element CalculusTower::project(const Element& x) const {
  if (x.degree() == 0) return x;
  return kernel(x.degree()).reduce(x);
}

bool CalculusTower::in_kernel(const Element& x) const { return project(x).is_zero(); }

Element CalculusTower::delta(const Element& v) const { return project(differential(context_, v)); }

Element CalculusTower::product(const Element& v, const Element& w) const { return project(multiply(v, w)); }

CalculusTower build_tower(const Digraph& g, int max_degree) {
  check_build_input(g, max_degree);
  const UniversalContext ctx(g.n_points());
  const int n_points = g.n_points();
  const auto n_blocks = static_cast<std::size_t>(n_points) * static_cast<std::size_t>(n_points);

  std::vector<EchelonBasis> kernels;
  kernels.push_back(first_kernel(g, ctx));
  for (int n = 2; n <= max_degree; ++n) {
    const std::vector<Element> rows = kernels.back().rows();
    const auto n_rows = static_cast<std::ptrdiff_t>(rows.size());

    std::vector<std::vector<std::pair<std::size_t, Element>>> pieces(rows.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t k = 0; k < n_rows; ++k) {
      pieces[static_cast<std::size_t>(k)] = split_blocks(differential(ctx, rows[static_cast<std::size_t>(k)]), n_points);
    }

    std::vector<std::vector<const Element*>> by_block(n_blocks);
    for (const auto& row_pieces : pieces) {
      for (const auto& [key, piece] : row_pieces) by_block[key].push_back(&piece);
    }

    std::vector<EchelonBasis> per_block(n_blocks, EchelonBasis(n));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(n_blocks); ++b) {
      const auto ub = static_cast<std::size_t>(b);
      for (const Element* piece : by_block[ub]) per_block[ub].insert(*piece);
    }

    EchelonBasis merged(n);
    for (const auto& basis : per_block) merged.absorb_disjoint(basis);
    kernels.push_back(std::move(merged));
  }
  return CalculusTower(g, std::move(kernels));
}

CalculusTower build_tower_serial(const Digraph& g, int max_degree) {
  check_build_input(g, max_degree);
  const UniversalContext ctx(g.n_points());

  std::vector<EchelonBasis> kernels;
  kernels.push_back(first_kernel(g, ctx));
  for (int n = 2; n <= max_degree; ++n) {
    EchelonBasis next(n);
    for (const Element& u : kernels.back().rows()) {
      const Element du = differential(ctx, u);
      for (Vertex a = 1; a <= g.n_points(); ++a) {
        const Element left = module_action(Side::left, a, du);
        if (left.is_zero()) continue;
        for (Vertex b = 1; b <= g.n_points(); ++b) {
          const Element piece = module_action(Side::right, b, left);
          if (!piece.is_zero()) next.insert(piece);
        }
      }
    }
    kernels.push_back(std::move(next));
  }
  return CalculusTower(g, std::move(kernels));
}

}  // namespace graphcalc
