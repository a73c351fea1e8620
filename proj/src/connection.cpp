#include "graphcalc/connection.hpp"

#include <stdexcept>
#include <string>

#include "graphcalc/errors.hpp"

namespace graphcalc {

namespace {

std::string pair_name(Vertex i, Vertex j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

Element edge_form(Vertex i, Vertex j) { return Element::monomial(Path{i, j}); }

Element vertex_form(Vertex i) { return Element::monomial(Path{i}); }

void require_distinct(Vertex i, Vertex j) {
  if (i == j) throw IndexError("connection undefined on e_ii, got i = j = " + std::to_string(i));
}

void require_edge(const Digraph& g, Vertex i, Vertex j) {
  if (!g.has_edge(i, j)) throw EdgeNotInGraph("edge " + pair_name(i, j) + " is not in the graph");
}

// Accumulates c·e_{path} into x, skipping degenerate paths.
void add_monomial(Element& x, std::vector<Vertex> path, const GammaPoly& c) {
  if (c.is_zero()) return;
  if (auto p = Path::make(std::move(path))) x.add_term(*p, c);
}

}  // namespace

// ---- parameters ---------------------------------------------------------------

ConnectionParams ConnectionParams::symmetric(GammaPoly gamma) {
  ConnectionParams p;
  p.symmetric_ = std::move(gamma);
  return p;
}

ConnectionParams ConnectionParams::general(std::map<Key, GammaPoly> table) {
  for (const auto& [key, value] : table) {
    const auto [i, j, a] = key;
    if (i == j || a == i || a == j) {
      throw InvalidInput("connection table: key (" + std::to_string(i) + "," + std::to_string(j) + "," +
                         std::to_string(a) + ") must have distinct entries");
    }
  }
  ConnectionParams p;
  p.table_ = std::move(table);
  return p;
}

bool ConnectionParams::is_symmetric() const { return symmetric_value().has_value(); }

std::optional<GammaPoly> ConnectionParams::symmetric_value() const {
  if (symmetric_) return symmetric_;
  if (table_.empty()) return std::nullopt;
  const GammaPoly& first = table_.begin()->second;
  for (const auto& [key, value] : table_) {
    if (!(value == first)) return std::nullopt;
  }
  return first;
}

GammaPoly ConnectionParams::free_value(Vertex i, Vertex j, Vertex a) const {
  if (symmetric_) return *symmetric_;
  auto it = table_.find({i, j, a});
  if (it == table_.end()) {
    throw InvalidInput("connection table has no entry for (" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(a) + ")");
  }
  return it->second;
}

GammaPoly ConnectionParams::christoffel(Vertex i, Vertex j, Vertex k, Vertex l, Vertex m) const {
  if (i == j || k == l || l == m) return {};
  GammaPoly value;
  if (k == i && l == j) value += 1;
  if (l == i && m == j) value += 1;
  if (k == i && m == j && l != i && l != j) value += free_value(i, j, l) - 1;
  return value;
}

void ConnectionParams::validate(int n_points) const {
  if (symmetric_) return;
  for (Vertex i = 1; i <= n_points; ++i) {
    for (Vertex j = 1; j <= n_points; ++j) {
      for (Vertex a = 1; a <= n_points; ++a) {
        if (i != j && a != i && a != j) free_value(i, j, a);
      }
    }
  }
}

// ---- complete graph -----------------------------------------------------------

Element connection_D(const UniversalContext& ctx, const ConnectionParams& params, Vertex i, Vertex j) {
  require_distinct(i, j);
  Element out = multiply(differential(ctx, vertex_form(i)), differential(ctx, vertex_form(j)));
  for (Vertex a = 1; a <= ctx.n_points(); ++a) {
    if (a != i && a != j) out.add_term(Path{i, a, j}, params.free_value(i, j, a));
  }
  return out;
}

Element connection_D(const UniversalContext& ctx, const ConnectionParams& params, const Element& omega) {
  Element out(2);
  for (const auto& [p, c] : omega.terms()) out.add_scaled(connection_D(ctx, params, p.first(), p.last()), c);
  return out;
}

Element connection_D_from_christoffel(const UniversalContext& ctx, const ConnectionParams& params, Vertex i,
                                      Vertex j) {
  require_distinct(i, j);
  Element out(2);
  for (const Path& p : omega_basis(ctx, 2)) out.add_term(p, params.christoffel(i, j, p[0], p[1], p[2]));
  return out;
}

Element torsion_T(const UniversalContext& ctx, const ConnectionParams& params, Vertex i, Vertex j) {
  return differential(ctx, edge_form(i, j)) - connection_D(ctx, params, i, j);
}

Element torsion_T(const UniversalContext& ctx, const ConnectionParams& params, const Element& omega) {
  return differential(ctx, omega) - connection_D(ctx, params, omega);
}

Element extend_D1(const UniversalContext& ctx, const ConnectionParams& params, const Element& x) {
  Element out(3);
  for (const auto& [p, c] : x.terms()) {
    const Element first = edge_form(p[0], p[1]);
    const Element second = edge_form(p[1], p[2]);
    out.add_scaled(multiply(differential(ctx, first), second), c);
    out.add_scaled(multiply(first, connection_D(ctx, params, p[1], p[2])), -c);
  }
  return out;
}

Element extend_D2(const UniversalContext& ctx, const ConnectionParams& params, const Element& x) {
  Element out(3);
  for (const auto& [p, c] : x.terms()) {
    const Element first = edge_form(p[0], p[1]);
    const Element second = edge_form(p[1], p[2]);
    out.add_scaled(multiply(connection_D(ctx, params, p[0], p[1]), second), c);
    out.add_scaled(multiply(first, connection_D(ctx, params, p[1], p[2])), -c);
  }
  return out;
}

Element curvature_composed(const UniversalContext& ctx, const ConnectionParams& params, CurvatureKind kind,
                           Vertex i, Vertex j) {
  const Element d = connection_D(ctx, params, i, j);
  return kind == CurvatureKind::d1d ? extend_D1(ctx, params, d) : extend_D2(ctx, params, d);
}

Element curvature_closed_form(const UniversalContext& ctx, const ConnectionParams& params, CurvatureKind kind,
                              Vertex i, Vertex j) {
  require_distinct(i, j);
  const auto G = [&](Vertex a, Vertex b, Vertex k, Vertex l, Vertex m) { return params.christoffel(a, b, k, l, m); };
  const bool first = kind == CurvatureKind::d1d;
  Element out(3);
  for (Vertex l = 1; l <= ctx.n_points(); ++l) {
    if (l != i) {
      // e_ijlj
      const GammaPoly c = first ? -(1 + G(i, j, i, l, j)) : -(1 - G(i, j, i, l, j) * G(i, l, i, j, l));
      add_monomial(out, {i, j, l, j}, c);
    }
    if (l != j) add_monomial(out, {i, l, i, j}, 1 - G(i, j, i, l, j) * G(l, j, l, i, j));
    for (Vertex m = 1; m <= ctx.n_points(); ++m) {
      if (l != j && m != i) {
        const GammaPoly c = first ? -(G(i, j, i, m, j) + G(i, j, i, l, j) * G(l, j, l, m, j))
                                  : G(i, j, i, m, j) * G(i, m, i, l, m) - G(i, j, i, l, j) * G(l, j, l, m, j);
        add_monomial(out, {i, l, m, j}, c);
      }
      if (m != j) add_monomial(out, {i, j, l, m}, -(1 + G(j, m, j, l, m)));
      if (first) {
        add_monomial(out, {i, l, j, m}, -(1 + G(i, j, i, l, j)));
      } else if (l != i) {
        add_monomial(out, {l, m, i, j}, 1 + G(l, i, l, m, i));
      }
    }
  }
  return out;
}

Element curvature_symmetric_closed_form(const UniversalContext& ctx, const GammaPoly& gamma, CurvatureKind kind,
                                        Vertex i, Vertex j) {
  require_distinct(i, j);
  const int n = ctx.n_points();
  Element out(3);
  if (kind == CurvatureKind::d1d) {
    for (Vertex l = 1; l <= n; ++l) {
      if (l != i) add_monomial(out, {i, j, l, j}, -gamma);
      if (l != j) add_monomial(out, {i, l, i, j}, gamma * (2 - gamma));
      for (Vertex m = 1; m <= n; ++m) {
        if (l != j && m != i) add_monomial(out, {i, l, m, j}, gamma * (1 - gamma));
        if (m != j) add_monomial(out, {i, j, l, m}, -gamma);
        add_monomial(out, {i, l, j, m}, -gamma);
      }
    }
  } else {
    for (Vertex l = 1; l <= n; ++l) {
      if (l != i) add_monomial(out, {i, j, l, j}, gamma * (gamma - 2));
      if (l != j) add_monomial(out, {i, l, i, j}, gamma * (2 - gamma));
      for (Vertex m = 1; m <= n; ++m) {
        if (m != j) add_monomial(out, {i, j, l, m}, -gamma);
        if (l != i) add_monomial(out, {l, m, i, j}, gamma);
      }
    }
  }
  return out;
}

Element curvature_complete(const UniversalContext& ctx, const ConnectionParams& params, CurvatureKind kind,
                           Vertex i, Vertex j) {
  Element closed = curvature_closed_form(ctx, params, kind, i, j);
  const Element composed = curvature_composed(ctx, params, kind, i, j);
  if (!(closed == composed)) {
    throw CrossCheckFailure("closed-form curvature of e" + pair_name(i, j) + " disagrees with the composition: " +
                            to_string(closed) + " vs " + to_string(composed));
  }
  return closed;
}

Bilinearized bilinearize(const Element& x, Vertex i, Vertex j) {
  Bilinearized out{Element(x.degree()), Element(x.degree())};
  out.bilinear = x.block(i, j);
  out.dropped = x - out.bilinear;
  return out;
}

CurvatureReport complete_curvature_report(const UniversalContext& ctx, const ConnectionParams& params,
                                          CurvatureKind kind, Vertex i, Vertex j) {
  Element raw = curvature_complete(ctx, params, kind, i, j);
  auto [bilinear, dropped] = bilinearize(raw, i, j);
  return {{i, j}, std::move(raw), std::move(bilinear), std::move(dropped)};
}

// ---- subgraphs ----------------------------------------------------------------

Element restrict_to_graph(const Digraph& g, const Element& x) {
  return x.filter([&g](const Path& p) { return g.supports(p); });
}

Element nabla_edge(const CalculusTower& tower, const ConnectionParams& params, Vertex i, Vertex j) {
  require_edge(tower.graph(), i, j);
  return restrict_to_graph(tower.graph(), connection_D(tower.context(), params, i, j));
}

Element nabla(const CalculusTower& tower, const ConnectionParams& params, const Element& omega) {
  Element out(2);
  const Element supported = restrict_to_graph(tower.graph(), omega);
  for (const auto& [p, c] : supported.terms()) {
    out.add_scaled(nabla_edge(tower, params, p.first(), p.last()), c);
  }
  return out;
}

Element apply_p12(const CalculusTower& tower, const Element& x) {
  Element out(x.degree());
  for (const auto& [p, c] : x.terms()) {
    const Element head = tower.project(Element::monomial(p.slice(0, 3)));
    out.add_scaled(multiply(head, Element::monomial(p.slice(2, p.size()))), c);
  }
  return out;
}

Element nabla1(const CalculusTower& tower, const ConnectionParams& params, const Element& x) {
  Element out(3);
  const Element supported = restrict_to_graph(tower.graph(), x);
  for (const auto& [p, c] : supported.terms()) {
    const Element first = edge_form(p[0], p[1]);
    const Element second = edge_form(p[1], p[2]);
    out.add_scaled(multiply(tower.delta(first), second), c);
    out.add_scaled(apply_p12(tower, multiply(first, nabla_edge(tower, params, p[1], p[2]))), -c);
  }
  return out;
}

Element nabla1_definitional(const CalculusTower& tower, const ConnectionParams& params, const Element& x) {
  const Element lifted = extend_D1(tower.context(), params, restrict_to_graph(tower.graph(), x));
  Element out(3);
  for (const auto& [p, c] : lifted.terms()) {
    if (!tower.graph().has_edge(p[2], p[3])) continue;
    const Element head = tower.project(Element::monomial(p.slice(0, 3)));
    out.add_scaled(multiply(head, edge_form(p[2], p[3])), c);
  }
  return out;
}

Element nabla2(const CalculusTower& tower, const ConnectionParams& params, const Element& x) {
  Element out(3);
  const Element supported = restrict_to_graph(tower.graph(), x);
  for (const auto& [p, c] : supported.terms()) {
    out.add_scaled(multiply(nabla_edge(tower, params, p[0], p[1]), edge_form(p[1], p[2])), c);
    out.add_scaled(multiply(edge_form(p[0], p[1]), nabla_edge(tower, params, p[1], p[2])), -c);
  }
  return out;
}

Element nabla2_definitional(const CalculusTower& tower, const ConnectionParams& params, const Element& x) {
  return restrict_to_graph(tower.graph(),
                           extend_D2(tower.context(), params, restrict_to_graph(tower.graph(), x)));
}

CurvatureReport nabla_curvature(const CalculusTower& tower, const ConnectionParams& params, int which, Vertex i,
                                Vertex j) {
  const Element connection = nabla_edge(tower, params, i, j);
  Element raw(3);
  if (which == 1) {
    raw = nabla1(tower, params, connection);
  } else if (which == 2) {
    raw = apply_p12(tower, nabla2(tower, params, connection));
  } else {
    throw std::invalid_argument("curvature kind must be 1 or 2, got " + std::to_string(which));
  }
  auto [bilinear, dropped] = bilinearize(raw, i, j);
  return {{i, j}, std::move(raw), std::move(bilinear), std::move(dropped)};
}

Element torsion_nabla(const CalculusTower& tower, const ConnectionParams& params, Vertex i, Vertex j) {
  require_edge(tower.graph(), i, j);
  return tower.delta(edge_form(i, j)) - tower.project(nabla_edge(tower, params, i, j));
}

Element torsion_nabla(const CalculusTower& tower, const ConnectionParams& params, const Element& omega) {
  Element out(2);
  const Element supported = restrict_to_graph(tower.graph(), omega);
  for (const auto& [p, c] : supported.terms()) {
    out.add_scaled(torsion_nabla(tower, params, p.first(), p.last()), c);
  }
  return out;
}

// ---- metric -------------------------------------------------------------------

Element apply_metric(const Metric& g, const Element& x) {
  Element out(0);
  for (const auto& [p, c] : x.terms()) {
    if (p[0] == p[2]) out.add_term(Path{p[0]}, c * g.mu);
  }
  return out;
}

Element apply_one_tensor_metric(const Metric& g, const Element& x) {
  Element out(1);
  for (const auto& [p, c] : x.terms()) {
    if (p[1] == p[3]) out.add_term(Path{p[0], p[1]}, c * g.mu);
  }
  return out;
}

std::map<Edge, Element> metric_check(const UniversalContext& ctx, const ConnectionParams& params,
                                     const Metric& g) {
  if (g.mu == 0) throw DegenerateMetric("metric with mu = 0 is degenerate");
  std::map<Edge, Element> out;
  for (Vertex i = 1; i <= ctx.n_points(); ++i) {
    for (Vertex j = 1; j <= ctx.n_points(); ++j) {
      if (i == j) continue;
      const Element form = Element::monomial(Path{i, j, i});
      const Element lhs = differential(ctx, apply_metric(g, form));
      const Element rhs = apply_one_tensor_metric(g, extend_D2(ctx, params, form));
      out.emplace(Edge{i, j}, lhs - rhs);
    }
  }
  return out;
}

bool metric_compatible(const std::map<Edge, Element>& discrepancies) {
  for (const auto& [pair, x] : discrepancies) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace graphcalc
