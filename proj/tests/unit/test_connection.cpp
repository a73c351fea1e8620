#include <doctest.h>

#include "graphcalc/connection.hpp"
#include "graphcalc/errors.hpp"
#include "graphcalc/tower.hpp"

using namespace graphcalc;

namespace {
const GammaPoly g = GammaPoly::gamma();
Element m(std::vector<Vertex> v, const GammaPoly& c = 1) { return Element::monomial(v, c); }

Digraph two_cycles() { return Digraph(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}}); }
Digraph two_cycles_plus_31() { return Digraph(3, {{1, 2}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}); }
}  // namespace

TEST_CASE("connection on three points") {
  const UniversalContext ctx(3);
  const auto params = ConnectionParams::symmetric(g);
  const Element d12 = m({3, 1, 2}) - m({1, 3, 2}) + m({1, 2, 3}) + m({1, 2, 1}) + m({2, 1, 2});
  CHECK(connection_D(ctx, params, 1, 2) == d12 + m({1, 3, 2}, g));
  CHECK(connection_D(ctx, ConnectionParams::symmetric(0), 1, 2) == d12);
  CHECK(torsion_T(ctx, params, 1, 2) == m({1, 3, 2}, -g));
  CHECK_THROWS_AS(connection_D(ctx, params, 2, 2), IndexError);
  CHECK(torsion_T(UniversalContext(2), params, 1, 2).is_zero());
}

TEST_CASE("christoffel symbols") {
  const auto params = ConnectionParams::symmetric(g);
  CHECK(params.christoffel(1, 2, 1, 2, 3) == GammaPoly(1));
  CHECK(params.christoffel(1, 2, 3, 1, 2) == GammaPoly(1));
  CHECK(params.christoffel(1, 2, 1, 3, 2) == g - GammaPoly(1));
  CHECK(params.christoffel(1, 2, 2, 1, 3).is_zero());
  CHECK(params.christoffel(1, 1, 1, 2, 1).is_zero());
  CHECK(params.is_symmetric());
  CHECK_THROWS_AS(ConnectionParams::general({}).validate(3), InvalidInput);
}

TEST_CASE("closed forms agree with composition") {
  const auto params = ConnectionParams::symmetric(g);
  for (int n : {2, 3, 4}) {
    const UniversalContext ctx(n);
    for (auto kind : {CurvatureKind::d1d, CurvatureKind::d2d}) {
      const Element composed = curvature_composed(ctx, params, kind, 1, 2);
      CHECK(composed == curvature_closed_form(ctx, params, kind, 1, 2));
      CHECK(composed == curvature_symmetric_closed_form(ctx, g, kind, 1, 2));
      CHECK(composed == curvature_complete(ctx, params, kind, 1, 2));
    }
  }
}

TEST_CASE("symmetric curvature on three points") {
  const UniversalContext ctx(3);
  const auto params = ConnectionParams::symmetric(g);
  const auto curv2 = complete_curvature_report(ctx, params, CurvatureKind::d2d, 1, 2);
  const GammaPoly c = g * (g - GammaPoly(2));
  CHECK(curv2.bilinear == m({1, 2, 3, 2}, c) - m({1, 3, 1, 2}, c));
  CHECK(curv2.raw == curv2.bilinear + curv2.dropped);
  CHECK(curvature_composed(ctx, params, CurvatureKind::d2d, 1, 2).coeff(Path({1, 2, 3, 2})) == c);
}

TEST_CASE("bilinearize keeps the block") {
  const Element x = m({1, 2, 3, 2}) + m({2, 1, 2, 1}) + m({1, 3, 1, 2}, g);
  const auto [kept, dropped] = bilinearize(x, 1, 2);
  CHECK(kept == m({1, 2, 3, 2}) + m({1, 3, 1, 2}, g));
  CHECK(dropped == m({2, 1, 2, 1}));
  CHECK(bilinearize(kept, 1, 2).dropped.is_zero());
}

TEST_CASE("nabla on the two-cycle graph") {
  const auto t = build_tower(two_cycles(), 3);
  const auto params = ConnectionParams::symmetric(g);
  CHECK(nabla_edge(t, params, 1, 2) == m({1, 2, 1}) + m({1, 2, 3}) + m({2, 1, 2}));
  CHECK(nabla_edge(t, params, 2, 1) == m({1, 2, 1}) + m({2, 1, 2}) + m({3, 2, 1}));
  CHECK_THROWS_AS(nabla_edge(t, params, 1, 3), EdgeNotInGraph);
  CHECK(nabla_curvature(t, params, 1, 1, 2).raw.is_zero());
  CHECK(nabla_curvature(t, params, 1, 2, 1).raw == m({2, 3, 2, 1}) - m({2, 1, 2, 3}));
  CHECK(nabla_curvature(t, params, 1, 2, 1).bilinear == m({2, 3, 2, 1}));
  CHECK(nabla_curvature(t, params, 2, 2, 3).bilinear == m({2, 1, 2, 3}));
  CHECK_THROWS_AS(nabla_curvature(t, params, 3, 1, 2), std::invalid_argument);
  CHECK(torsion_nabla(t, params, 1, 2).is_zero());
}

TEST_CASE("nabla with the 31 edge") {
  const auto t = build_tower(two_cycles_plus_31(), 3);
  const auto params = ConnectionParams::symmetric(g);
  CHECK(nabla_edge(t, params, 3, 1) == m({2, 3, 1}) - m({3, 2, 1}) + m({3, 1, 2}) + m({3, 2, 1}, g));
  CHECK(nabla_curvature(t, params, 1, 3, 1).bilinear ==
        m({3, 1, 2, 1}, -g) + m({3, 2, 3, 1}, g * (GammaPoly(2) - g)));
  CHECK(torsion_nabla(t, params, 2, 1) == m({2, 3, 1}, -g));
  CHECK(torsion_nabla(t, params, 1, 2).is_zero());
  // The split identity nabla1 = p12 nabla2 + T_nabla (x) 1 on nabla e32.
  const Element x = nabla_edge(t, params, 3, 2);
  Element rhs = apply_p12(t, nabla2(t, params, x));
  for (const auto& [p, c] : x.terms()) {
    rhs.add_scaled(multiply(torsion_nabla(t, params, p[0], p[1]), m({p[1], p[2]})), c);
  }
  CHECK(nabla1(t, params, x) == rhs);
}

TEST_CASE("gamma one gives equal curvatures") {
  const auto one = ConnectionParams::symmetric(1);
  for (const auto& graph : {two_cycles(), two_cycles_plus_31()}) {
    const auto t = build_tower(graph, 3);
    for (const auto& [i, j] : graph.edges()) {
      CHECK(nabla_curvature(t, one, 1, i, j).bilinear == nabla_curvature(t, one, 2, i, j).bilinear);
    }
  }
}

TEST_CASE("single edge graph") {
  const auto t = build_tower(Digraph(2, {{1, 2}}), 3);
  const auto params = ConnectionParams::symmetric(g);
  CHECK(nabla_edge(t, params, 1, 2).is_zero());
  CHECK(torsion_nabla(t, params, 1, 2) == t.delta(m({1, 2})));
}

TEST_CASE("metric compatibility") {
  const auto params = ConnectionParams::symmetric(g);
  CHECK(metric_compatible(metric_check(UniversalContext(2), params, Metric{1})));
  CHECK_FALSE(metric_compatible(metric_check(UniversalContext(3), params, Metric{1})));
  CHECK_FALSE(metric_compatible(metric_check(UniversalContext(4), ConnectionParams::symmetric(0), Metric{1})));
  CHECK_THROWS_AS(metric_check(UniversalContext(3), params, Metric{0}), DegenerateMetric);
  CHECK(apply_metric(Metric{2}, m({1, 2, 1}) + m({1, 2, 3})) == m({1}, 2));
  CHECK(apply_one_tensor_metric(Metric{3}, m({1, 2, 3, 2}) + m({1, 2, 3, 1})) == m({1, 2}, 3));
}
