#include "graphcalc/verify.hpp"

#include <initializer_list>
#include <utility>

#include "graphcalc/connection.hpp"
#include "graphcalc/echelon.hpp"
#include "graphcalc/errors.hpp"
#include "graphcalc/tower.hpp"

namespace graphcalc {

namespace {

using Term = std::pair<std::vector<Vertex>, GammaPoly>;

const GammaPoly g = GammaPoly::gamma();

Element el(int degree, std::initializer_list<Term> terms) {
  Element x(degree);
  for (const auto& [path, c] : terms) x.add_term(Path(path), c);
  return x;
}

Element sum_of(int degree, std::initializer_list<std::vector<Vertex>> paths) {
  Element x(degree);
  for (const auto& p : paths) x.add_term(Path(p), 1);
  return x;
}

std::string edge_name(Vertex i, Vertex j) { return "e" + std::to_string(i) + std::to_string(j); }

std::string path_list(const std::vector<Path>& paths) {
  std::string s = "{";
  for (std::size_t k = 0; k < paths.size(); ++k) s += (k ? ", " : "") + to_string(Element::monomial(paths[k]));
  return s + "}";
}

std::vector<Path> paths_of(std::initializer_list<std::vector<Vertex>> paths) {
  std::vector<Path> out;
  for (const auto& p : paths) out.emplace_back(p);
  return out;
}

class Recorder {
 public:
  void element(std::string id, int criterion, std::string description, const Element& expected,
               const Element& computed) {
    results_.push_back({std::move(id), criterion, std::move(description), expected == computed, to_string(expected),
                        to_string(computed)});
  }

  void truth(std::string id, int criterion, std::string description, bool passed, std::string expected,
             std::string computed) {
    results_.push_back(
        {std::move(id), criterion, std::move(description), passed, std::move(expected), std::move(computed)});
  }

  void count(std::string id, int criterion, std::string description, std::uint64_t expected,
             std::uint64_t computed) {
    truth(std::move(id), criterion, std::move(description), expected == computed, std::to_string(expected),
          std::to_string(computed));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

bool same_span(const std::vector<Element>& rows, const EchelonBasis& basis) {
  EchelonBasis other(basis.degree());
  for (const auto& r : rows) other.insert(r);
  return other == basis;
}

Digraph ex1_graph() { return Digraph(3, {{1, 2}, {2, 3}, {1, 3}}); }
Digraph ex2_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= 4; ++i) {
    for (Vertex j = 1; j <= 4; ++j) {
      if (i != j && !(i == 1 && j == 4) && !(i == 4 && j == 1)) edges.emplace_back(i, j);
    }
  }
  return Digraph(4, edges);
}
Digraph ex3_graph() { return Digraph(3, {{1, 2}, {2, 3}, {3, 1}}); }
Digraph ex4_graph() { return Digraph(2, {{1, 2}}); }
Digraph ex5_graph() { return Digraph(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}}); }
Digraph ex6_graph() { return Digraph(3, {{1, 2}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}); }

void example1(Recorder& r) {
  const auto tower = build_tower(ex1_graph(), 4);
  r.truth("ex1.ker1", 1, "Example 1: ker phi1 spanned by e21, e32, e31",
          same_span({sum_of(1, {{2, 1}}), sum_of(1, {{3, 2}}), sum_of(1, {{3, 1}})}, tower.kernel(1)),
          "span{e_21, e_31, e_32}", path_list(tower.kernel(1).pivots()));
  const auto k2 = paths_of({{1, 2, 3}});
  r.truth("ex1.k2", 1, "Example 1: K^2 = <e123>", tower.complement_basis(2) == k2, path_list(k2),
          path_list(tower.complement_basis(2)));
  r.count("ex1.dim_k2", 1, "Example 1: dim K^2", 1, tower.dim_k(2));
  r.count("ex1.dim_k3", 1, "Example 1: K^3 = 0", 0, tower.dim_k(3));
  r.count("ex1.dim_k4", 1, "Example 1: K^4 = 0", 0, tower.dim_k(4));
  r.element("ex1.project_e123", 1, "Example 1: project(e123) = e123", sum_of(2, {{1, 2, 3}}),
            tower.project(sum_of(2, {{1, 2, 3}})));

  const auto second = build_tower(ex5_graph(), 2);
  r.truth("ex1.second.ker1", 1, "Example 1 (second graph): ker phi1 spanned by e13, e31",
          same_span({sum_of(1, {{1, 3}}), sum_of(1, {{3, 1}})}, second.kernel(1)), "span{e_13, e_31}",
          path_list(second.kernel(1).pivots()));
  const auto k2b = paths_of({{1, 2, 1}, {2, 1, 2}, {2, 3, 2}, {3, 2, 3}});
  r.truth("ex1.second.k2", 1, "Example 1 (second graph): K^2 = <e121, e212, e232, e323>",
          second.complement_basis(2) == k2b, path_list(k2b), path_list(second.complement_basis(2)));
}

void example2(Recorder& r) {
  const auto tower = build_tower(ex2_graph(), 2);
  const std::vector<Element> generators = {
      sum_of(2, {{1, 4, 1}}), sum_of(2, {{1, 4, 2}}), sum_of(2, {{1, 4, 3}}),
      sum_of(2, {{2, 1, 4}}), sum_of(2, {{2, 4, 1}}), sum_of(2, {{3, 1, 4}}),
      sum_of(2, {{3, 4, 1}}), sum_of(2, {{4, 1, 2}}), sum_of(2, {{4, 1, 3}}),
      sum_of(2, {{4, 1, 4}}), sum_of(2, {{1, 2, 4}, {1, 3, 4}}), sum_of(2, {{4, 2, 1}, {4, 3, 1}}),
  };
  bool listed_in_kernel = true;
  for (const auto& x : generators) listed_in_kernel = listed_in_kernel && in_span(x, tower.kernel(2));
  r.truth("ex2.listed_in_kernel", 2, "Example 2: the 12 listed generators lie in ker phi2", listed_in_kernel,
          "true", listed_in_kernel ? "true" : "false");
  EchelonBasis listed(2);
  for (const auto& x : generators) listed.insert(x);
  bool kernel_in_listed = true;
  for (const auto& row : tower.kernel(2).rows()) kernel_in_listed = kernel_in_listed && in_span(row, listed);
  r.truth("ex2.kernel_in_listed", 2, "Example 2: ker phi2 lies in the span of the 12 generators",
          kernel_in_listed, "true", kernel_in_listed ? "true" : "false");
  r.count("ex2.rank", 2, "Example 2: rank of ker phi2", 12, tower.dim_kernel(2));
  r.count("ex2.dim_k2", 2, "Example 2: dim K^2", 24, tower.dim_k(2));
  r.element("ex2.project_e124", 2, "Example 2: e124 = -e134 modulo ker phi2", el(2, {{{1, 3, 4}, -1}}),
            tower.project(sum_of(2, {{1, 2, 4}})));
}

void example3(Recorder& r) {
  const auto tower = build_tower(ex3_graph(), 4);
  r.count("ex3.ker2", 3, "Example 3: ker phi2 = Omega^2", tower.dim_omega(2), tower.dim_kernel(2));
  for (int n = 2; n <= 4; ++n) {
    r.count("ex3.dim_k" + std::to_string(n), 3, "Example 3: K^" + std::to_string(n) + " = 0", 0, tower.dim_k(n));
  }
  r.element("ex3.p11", 3, "Example 3: P11(e12, e23) = 0", Element(2),
            tower.product(sum_of(1, {{1, 2}}), sum_of(1, {{2, 3}})));
}

void example4(Recorder& r) {
  const auto tower = build_tower(ex4_graph(), 3);
  const auto params = ConnectionParams::symmetric(g);
  r.element("ex4.nabla_e12", 0, "Example 4: K1 (x) K1 = 0, so nabla e12 = 0", Element(2),
            nabla_edge(tower, params, 1, 2));
  r.element("ex4.torsion", 0, "Example 4: T_nabla(e12) = delta e12", tower.delta(sum_of(1, {{1, 2}})),
            torsion_nabla(tower, params, 1, 2));
  const UniversalContext ctx(2);
  for (auto kind : {CurvatureKind::d1d, CurvatureKind::d2d}) {
    const std::string k = kind == CurvatureKind::d1d ? "D1D" : "D2D";
    for (const auto& [i, j] : std::vector<Edge>{{1, 2}, {2, 1}}) {
      r.element("ex4." + k + "." + edge_name(i, j), 0, "Example 4: " + k + " " + edge_name(i, j) + " = 0 on N=2",
                Element(3), curvature_composed(ctx, params, kind, i, j));
    }
  }
}

struct EdgeValue {
  Edge edge;
  Element value;
};

void example5(Recorder& r) {
  const auto tower = build_tower(ex5_graph(), 4);
  const auto params = ConnectionParams::symmetric(g);
  const auto ker2 = paths_of({{1, 2, 3}, {1, 3, 1}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 1, 3}, {3, 2, 1}});
  std::vector<Element> ker2_rows;
  for (const auto& p : ker2) ker2_rows.push_back(Element::monomial(p));
  r.truth("ex5.ker2", 7, "Example 5: ker phi2", same_span(ker2_rows, tower.kernel(2)), path_list(ker2),
          path_list(tower.kernel(2).pivots()));

  const std::vector<EdgeValue> delta = {
      {{1, 2}, sum_of(2, {{1, 2, 1}, {2, 1, 2}})},
      {{2, 1}, sum_of(2, {{1, 2, 1}, {2, 1, 2}})},
      {{2, 3}, sum_of(2, {{2, 3, 2}, {3, 2, 3}})},
      {{3, 2}, sum_of(2, {{2, 3, 2}, {3, 2, 3}})},
  };
  const std::vector<EdgeValue> nab = {
      {{1, 2}, sum_of(2, {{1, 2, 1}, {1, 2, 3}, {2, 1, 2}})},
      {{2, 1}, sum_of(2, {{1, 2, 1}, {2, 1, 2}, {3, 2, 1}})},
      {{2, 3}, sum_of(2, {{1, 2, 3}, {2, 3, 2}, {3, 2, 3}})},
      {{3, 2}, sum_of(2, {{2, 3, 2}, {3, 2, 1}, {3, 2, 3}})},
  };
  const std::vector<EdgeValue> nabla1_nabla = {
      {{1, 2}, Element(3)},
      {{2, 1}, el(3, {{{2, 3, 2, 1}, 1}, {{2, 1, 2, 3}, -1}})},
      {{2, 3}, el(3, {{{2, 1, 2, 3}, 1}, {{2, 3, 2, 1}, -1}})},
      {{3, 2}, Element(3)},
  };
  const std::vector<EdgeValue> nabla2_nabla = {
      {{1, 2}, el(3, {{{1, 2, 3, 2}, -1}, {{3, 2, 1, 2}, 1}})},
      {{2, 1}, el(3, {{{2, 1, 2, 3}, -1}, {{2, 3, 2, 1}, 1}})},
      {{2, 3}, el(3, {{{2, 1, 2, 3}, 1}, {{2, 3, 2, 1}, -1}})},
      {{3, 2}, el(3, {{{1, 2, 3, 2}, 1}, {{3, 2, 1, 2}, -1}})},
  };
  const std::vector<EdgeValue> curv = {
      {{1, 2}, Element(3)},
      {{2, 1}, sum_of(3, {{2, 3, 2, 1}})},
      {{2, 3}, sum_of(3, {{2, 1, 2, 3}})},
      {{3, 2}, Element(3)},
  };

  for (const auto& [e, v] : delta) {
    r.element("ex5.delta." + edge_name(e.first, e.second), 7, "Example 5: delta " + edge_name(e.first, e.second), v,
              tower.delta(sum_of(1, {{e.first, e.second}})));
  }
  for (const auto& [e, v] : nab) {
    r.element("ex5.nabla." + edge_name(e.first, e.second), 7, "Example 5: nabla " + edge_name(e.first, e.second), v,
              nabla_edge(tower, params, e.first, e.second));
  }
  for (const auto& [e, v] : nabla1_nabla) {
    r.element("ex5.nabla1_nabla." + edge_name(e.first, e.second), 7,
              "Example 5: nabla1 nabla " + edge_name(e.first, e.second), v,
              nabla_curvature(tower, params, 1, e.first, e.second).raw);
  }
  for (const auto& [e, v] : nabla2_nabla) {
    r.element("ex5.nabla2_nabla." + edge_name(e.first, e.second), 7,
              "Example 5: nabla2 nabla " + edge_name(e.first, e.second), v,
              nabla2(tower, params, nabla_edge(tower, params, e.first, e.second)));
  }
  for (int which = 1; which <= 2; ++which) {
    for (const auto& [e, v] : curv) {
      const std::string name = "curv" + std::to_string(which) + "." + edge_name(e.first, e.second);
      r.element("ex5." + name, 7, "Example 5: Curv" + std::to_string(which) + "(" + edge_name(e.first, e.second) + ")",
                v, nabla_curvature(tower, params, which, e.first, e.second).bilinear);
    }
  }
}

void example6(Recorder& r) {
  const auto tower = build_tower(ex6_graph(), 4);
  const auto params = ConnectionParams::symmetric(g);
  const auto ker2 = paths_of({{1, 2, 3}, {1, 3, 1}, {1, 3, 2}, {2, 1, 3}, {3, 1, 3}});
  std::vector<Element> ker2_rows;
  for (const auto& p : ker2) ker2_rows.push_back(Element::monomial(p));
  r.truth("ex6.ker2", 8, "Example 6: ker phi2", same_span(ker2_rows, tower.kernel(2)), path_list(ker2),
          path_list(tower.kernel(2).pivots()));
  const auto k2 = paths_of({{1, 2, 1}, {2, 1, 2}, {2, 3, 1}, {2, 3, 2}, {3, 1, 2}, {3, 2, 1}, {3, 2, 3}});
  r.truth("ex6.k2", 8, "Example 6: K^2 basis", tower.complement_basis(2) == k2, path_list(k2),
          path_list(tower.complement_basis(2)));

  const GammaPoly two_minus = GammaPoly(2) - g;
  const std::vector<EdgeValue> delta = {
      {{1, 2}, sum_of(2, {{1, 2, 1}, {2, 1, 2}, {3, 1, 2}})},
      {{2, 1}, el(2, {{{1, 2, 1}, 1}, {{3, 2, 1}, 1}, {{2, 3, 1}, -1}, {{2, 1, 2}, 1}})},
      {{2, 3}, sum_of(2, {{3, 2, 3}, {2, 3, 1}, {2, 3, 2}})},
      {{3, 1}, el(2, {{{2, 3, 1}, 1}, {{3, 2, 1}, -1}, {{3, 1, 2}, 1}})},
      {{3, 2}, el(2, {{{2, 3, 2}, 1}, {{3, 1, 2}, -1}, {{3, 2, 1}, 1}, {{3, 2, 3}, 1}})},
  };
  const std::vector<EdgeValue> nab = {
      {{1, 2}, sum_of(2, {{2, 1, 2}, {3, 1, 2}, {1, 2, 1}, {1, 2, 3}})},
      {{2, 1}, el(2, {{{1, 2, 1}, 1}, {{3, 2, 1}, 1}, {{2, 1, 2}, 1}, {{2, 3, 1}, -1}, {{2, 3, 1}, g}})},
      {{2, 3}, sum_of(2, {{1, 2, 3}, {3, 2, 3}, {2, 3, 2}, {2, 3, 1}})},
      {{3, 1}, el(2, {{{2, 3, 1}, 1}, {{3, 2, 1}, -1}, {{3, 1, 2}, 1}, {{3, 2, 1}, g}})},
      {{3, 2}, el(2, {{{2, 3, 2}, 1}, {{3, 2, 1}, 1}, {{3, 2, 3}, 1}, {{3, 1, 2}, -1}, {{3, 1, 2}, g}})},
  };
  const std::vector<EdgeValue> nabla1_nabla = {
      {{1, 2}, Element(3)},
      {{2, 1}, el(3, {{{2, 1, 2, 3}, -1}, {{2, 3, 1, 2}, -g}, {{2, 3, 2, 1}, g * two_minus}})},
      {{2, 3}, el(3, {{{2, 1, 2, 3}, 1}, {{2, 3, 1, 2}, -g}, {{2, 3, 2, 1}, -g}})},
      {{3, 1}, el(3, {{{3, 1, 2, 3}, -1}, {{3, 1, 2, 1}, -g}, {{3, 2, 3, 1}, g * two_minus}, {{3, 2, 1, 2}, -g}})},
      {{3, 2}, el(3, {{{3, 2, 3, 1}, -g}, {{3, 2, 1, 2}, -g}, {{3, 1, 2, 1}, -g}, {{3, 1, 2, 3}, -g}})},
  };
  const std::vector<EdgeValue> curv1 = {
      {{1, 2}, Element(3)},
      {{2, 1}, el(3, {{{2, 3, 2, 1}, g * two_minus}})},
      {{2, 3}, sum_of(3, {{2, 1, 2, 3}})},
      {{3, 1}, el(3, {{{3, 1, 2, 1}, -g}, {{3, 2, 3, 1}, g * two_minus}})},
      {{3, 2}, el(3, {{{3, 2, 1, 2}, -g}})},
  };
  const std::vector<EdgeValue> nabla2_nabla = {
      {{1, 2}, el(3, {{{1, 2, 3, 2}, -1}, {{2, 3, 1, 2}, g}, {{3, 2, 1, 2}, g}, {{1, 2, 3, 1}, -g}})},
      {{2, 1}, el(3, {{{2, 1, 2, 3}, -1}, {{3, 1, 2, 1}, g}, {{2, 3, 2, 1}, g * two_minus}})},
      {{2, 3}, el(3, {{{2, 1, 2, 3}, 1}, {{3, 1, 2, 3}, g}, {{2, 3, 1, 2}, -g}, {{2, 3, 2, 1}, -g}})},
      {{3, 1},
       el(3, {{{1, 2, 3, 1}, 1}, {{3, 1, 2, 3}, -1}, {{3, 1, 2, 1}, -g * two_minus}, {{3, 2, 3, 1}, g * two_minus}})},
      {{3, 2}, el(3, {{{1, 2, 3, 2}, 1}, {{3, 2, 3, 1}, -g}, {{3, 2, 1, 2}, -g}})},
  };
  const std::vector<EdgeValue> curv2 = {
      {{1, 2}, Element(3)},
      {{2, 1}, el(3, {{{2, 3, 2, 1}, g * two_minus}})},
      {{2, 3}, sum_of(3, {{2, 1, 2, 3}})},
      {{3, 1}, el(3, {{{3, 1, 2, 1}, -g * two_minus}, {{3, 2, 3, 1}, g * two_minus}})},
      {{3, 2}, el(3, {{{3, 2, 1, 2}, -g}})},
  };

  for (const auto& [e, v] : delta) {
    r.element("ex6.delta." + edge_name(e.first, e.second), 8, "Example 6: delta " + edge_name(e.first, e.second), v,
              tower.delta(sum_of(1, {{e.first, e.second}})));
  }
  for (const auto& [e, v] : nab) {
    r.element("ex6.nabla." + edge_name(e.first, e.second), 8, "Example 6: nabla " + edge_name(e.first, e.second), v,
              nabla_edge(tower, params, e.first, e.second));
  }
  for (const auto& [e, v] : nabla1_nabla) {
    r.element("ex6.nabla1_nabla." + edge_name(e.first, e.second), 8,
              "Example 6: nabla1 nabla " + edge_name(e.first, e.second), v,
              nabla_curvature(tower, params, 1, e.first, e.second).raw);
  }
  for (const auto& [e, v] : curv1) {
    r.element("ex6.curv1." + edge_name(e.first, e.second), 8, "Example 6: Curv1(" + edge_name(e.first, e.second) + ")",
              v, nabla_curvature(tower, params, 1, e.first, e.second).bilinear);
  }
  for (const auto& [e, v] : nabla2_nabla) {
    r.element("ex6.nabla2_nabla." + edge_name(e.first, e.second), 0,
              "Example 6: nabla2 nabla " + edge_name(e.first, e.second), v,
              nabla2(tower, params, nabla_edge(tower, params, e.first, e.second)));
  }
  for (const auto& [e, v] : curv2) {
    r.element("ex6.curv2." + edge_name(e.first, e.second), 8, "Example 6: Curv2(" + edge_name(e.first, e.second) + ")",
              v, nabla_curvature(tower, params, 2, e.first, e.second).bilinear);
  }

  const auto one = ConnectionParams::symmetric(1);
  for (const auto& graph : {ex5_graph(), ex6_graph()}) {
    const auto t = build_tower(graph, 3);
    const std::string name = graph.edges().size() == 4 ? "ex5" : "ex6";
    for (const auto& [i, j] : graph.edges()) {
      r.element(name + ".gamma1." + edge_name(i, j), 0,
                "Example " + name.substr(2) + ", gamma = 1: Curv1 = Curv2 on " + edge_name(i, j),
                nabla_curvature(t, one, 1, i, j).bilinear, nabla_curvature(t, one, 2, i, j).bilinear);
    }
  }
}

Element sum_iaj(const UniversalContext& ctx, Vertex i, Vertex j, const GammaPoly& c) {
  Element x(2);
  for (Vertex a = 1; a <= ctx.n_points(); ++a) {
    if (a != i && a != j) x.add_term(Path{i, a, j}, c);
  }
  return x;
}

void torsion_checks(Recorder& r) {
  const auto params = ConnectionParams::symmetric(g);
  const auto flat = ConnectionParams::symmetric(0);
  for (int n : {3, 4}) {
    const UniversalContext ctx(n);
    const std::string N = "N=" + std::to_string(n);
    bool t_nonzero_somewhere = false;
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = 1; j <= n; ++j) {
        if (i == j) continue;
        const std::string e = edge_name(i, j);
        const Element de_i = differential(ctx, Element::monomial(Path{i}));
        const Element de_j = differential(ctx, Element::monomial(Path{j}));
        r.element("torsion." + N + ".D." + e, 4, "Closed form on complete " + N + ": D(" + e + ")",
                  multiply(de_i, de_j) + sum_iaj(ctx, i, j, g), connection_D(ctx, params, i, j));
        r.element("torsion." + N + ".D_christoffel." + e, 4,
                  "Complete " + N + ": D(" + e + ") from the Christoffel table",
                  connection_D_from_christoffel(ctx, params, i, j), connection_D(ctx, params, i, j));
        const Element t = torsion_T(ctx, params, i, j);
        r.element("torsion." + N + ".T." + e, 4, "Closed form on complete " + N + ": T(" + e + ")",
                  sum_iaj(ctx, i, j, -g), t);
        r.element("torsion." + N + ".T_flat." + e, 4, "Complete " + N + ", gamma = 0: T(" + e + ") = 0", Element(2),
                  torsion_T(ctx, flat, i, j));
        t_nonzero_somewhere = t_nonzero_somewhere || !t.evaluate(Rational(1, 2)).is_zero();
      }
    }
    r.truth("torsion." + N + ".T_nonzero", 4, "Complete " + N + ": T != 0 for gamma != 0", t_nonzero_somewhere,
            "nonzero", t_nonzero_somewhere ? "nonzero" : "zero");
  }
  const UniversalContext ctx(3);
  const Element d_part = multiply(differential(ctx, Element::monomial(Path{1})), differential(ctx, Element::monomial(Path{2})));
  r.element("torsion.N=3.coeff_e132", 4, "Complete N=3: D(e12) - de1 (x) de2 = gamma*e132", el(2, {{{1, 3, 2}, g}}),
            connection_D(ctx, params, 1, 2) - d_part);
}

ConnectionParams sample_general_table(int n) {
  std::map<ConnectionParams::Key, GammaPoly> table;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = 1; j <= n; ++j) {
      for (Vertex a = 1; a <= n; ++a) {
        if (i == j || a == i || a == j) continue;
        table[{i, j, a}] = GammaPoly::from_coeffs({Rational(i - a, j + 1), Rational(a * j - i, 2)});
      }
    }
  }
  return ConnectionParams::general(std::move(table));
}

void closed_form_checks(Recorder& r) {
  const auto symbolic = ConnectionParams::symmetric(g);
  for (int n : {3, 4}) {
    const UniversalContext ctx(n);
    const std::string N = "N=" + std::to_string(n);
    const auto general = sample_general_table(n);
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = 1; j <= n; ++j) {
        if (i == j) continue;
        const std::string e = edge_name(i, j);
        for (auto kind : {CurvatureKind::d1d, CurvatureKind::d2d}) {
          const std::string k = kind == CurvatureKind::d1d ? "D1D" : "D2D";
          const Element composed = curvature_composed(ctx, symbolic, kind, i, j);
          r.element("closed_forms." + N + "." + k + "." + e, 5, "Complete " + N + ": closed-form " + k + " " + e +
                    " equals the composition", composed, curvature_closed_form(ctx, symbolic, kind, i, j));
          r.element("flatness." + N + "." + k + "." + e, 5, "Complete " + N + ": symmetric closed-form " + k + " " + e +
                    " equals the composition", composed, curvature_symmetric_closed_form(ctx, g, kind, i, j));
          r.element("closed_forms.general." + N + "." + k + "." + e, 5,
                    "Complete " + N + ", non-symmetric table: closed-form " + k + " " + e + " equals the composition",
                    curvature_composed(ctx, general, kind, i, j), curvature_closed_form(ctx, general, kind, i, j));
        }
        // D1 = D2 + T (x) 1 on D e_ij.
        const Element x = connection_D(ctx, symbolic, i, j);
        Element t_one(3);
        for (const auto& [p, c] : x.terms()) {
          t_one.add_scaled(multiply(torsion_T(ctx, symbolic, p[0], p[1]), Element::monomial(Path{p[1], p[2]})), c);
        }
        r.element("closed_forms." + N + ".D1_minus_D2." + e, 5, "Complete " + N + ": (D1 - D2) D " + e + " = (T (x) 1) D " + e,
                  t_one, extend_D1(ctx, symbolic, x) - extend_D2(ctx, symbolic, x));
      }
    }
  }
  const UniversalContext ctx(3);
  r.element("closed_forms.N=3.coeff_e1232", 5, "Complete N=3: coefficient of e1232 in D2D e12 is gamma(gamma - 2)",
            el(3, {{{1, 2, 3, 2}, g * (g - GammaPoly(2))}}),
            curvature_composed(ctx, symbolic, CurvatureKind::d2d, 1, 2).filter([](const Path& p) {
              return p == Path{1, 2, 3, 2};
            }));
}

void flatness_checks(Recorder& r) {
  const auto flat = ConnectionParams::symmetric(0);
  const auto one = ConnectionParams::symmetric(1);
  const auto symbolic = ConnectionParams::symmetric(g);
  for (int n : {3, 4}) {
    const UniversalContext ctx(n);
    const std::string N = "N=" + std::to_string(n);
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = 1; j <= n; ++j) {
        if (i == j) continue;
        const std::string e = edge_name(i, j);
        for (auto kind : {CurvatureKind::d1d, CurvatureKind::d2d}) {
          const std::string k = kind == CurvatureKind::d1d ? "D1D" : "D2D";
          r.element("flatness." + N + ".flat." + k + "." + e, 6, "Complete " + N + ", gamma = 0: " + k + " " + e + " = 0",
                    Element(3), curvature_composed(ctx, flat, kind, i, j));
        }
        r.element("flatness." + N + ".gamma1." + e, 6, "Complete " + N + ", gamma = 1: Curv1(" + e + ") = Curv2(" + e + ")",
                  complete_curvature_report(ctx, one, CurvatureKind::d2d, i, j).bilinear,
                  complete_curvature_report(ctx, one, CurvatureKind::d1d, i, j).bilinear);
        const auto report = complete_curvature_report(ctx, symbolic, CurvatureKind::d1d, i, j);
        r.truth("flatness." + N + ".not_bilinear." + e, 6,
                "Complete " + N + ", symbolic gamma: D1D " + e + " has terms outside S_" + e.substr(1),
                !report.dropped.is_zero(), "nonzero dropped part", to_string(report.dropped));
      }
    }
  }
}

void metric(Recorder& r) {
  const auto symbolic = ConnectionParams::symmetric(g);
  for (int n : {2, 3, 4}) {
    const UniversalContext ctx(n);
    const bool compatible = metric_compatible(metric_check(ctx, symbolic, Metric{1}));
    const bool expected = n == 2;
    r.truth("metric.N=" + std::to_string(n), 9,
            "Complete N=" + std::to_string(n) + ", symbolic gamma: metric compatibility", compatible == expected,
            expected ? "COMPATIBLE" : "INCOMPATIBLE", compatible ? "COMPATIBLE" : "INCOMPATIBLE");
  }
  const UniversalContext ctx(4);
  const bool flat = metric_compatible(metric_check(ctx, ConnectionParams::symmetric(0), Metric{1}));
  r.truth("metric.N=4.flat", 0, "Complete N=4, gamma = 0: metric compatibility", !flat, "INCOMPATIBLE",
          flat ? "COMPATIBLE" : "INCOMPATIBLE");
  const UniversalContext ctx3(3);
  const auto unit_mu = metric_check(ctx3, symbolic, Metric{1});
  const auto scaled = metric_check(ctx3, symbolic, Metric{Rational(-5, 3)});
  bool scales = unit_mu.size() == scaled.size();
  for (const auto& [edge, x] : unit_mu) scales = scales && scaled.at(edge) == x * GammaPoly(Rational(-5, 3));
  r.truth("metric.N=3.scaling", 0, "Complete N=3: discrepancies scale linearly in mu", scales, "true",
          scales ? "true" : "false");
}

void props(Recorder& r, const PropertyConfig& config) {
  for (const auto& outcome : run_property_suite(config)) {
    r.truth("props." + outcome.name, 10, "Property " + outcome.name + " over " + std::to_string(outcome.cases) + " cases",
            outcome.failures == 0, "0 failures",
            std::to_string(outcome.failures) + " failures" +
                (outcome.first_failure.empty() ? "" : "; first: " + outcome.first_failure));
  }
}

}  // namespace

std::vector<std::string> check_selections() {
  return {"all", "1", "2", "3", "4", "5", "6", "props", "torsion", "closed-forms", "flatness", "metric"};
}

std::vector<CheckResult> run_checks(std::string_view selection, const PropertyConfig& config) {
  Recorder r;
  const bool all = selection == "all";
  bool known = all;
  auto want = [&](std::string_view name) {
    if (all || selection == name) {
      known = true;
      return true;
    }
    return false;
  };
  if (want("1")) example1(r);
  if (want("2")) example2(r);
  if (want("3")) example3(r);
  if (want("torsion")) torsion_checks(r);
  if (want("closed-forms")) closed_form_checks(r);
  if (want("flatness")) flatness_checks(r);
  if (want("4")) example4(r);
  if (want("5")) example5(r);
  if (want("6")) example6(r);
  if (want("metric")) metric(r);
  if (want("props")) props(r, config);
  if (!known) throw InvalidInput("examples: unknown selection '" + std::string(selection) + "'");
  return r.take();
}

}  // namespace graphcalc
