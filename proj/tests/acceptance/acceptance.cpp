// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic only.
// Usage: graphcalc_acceptance <path to graphcalc CLI>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "graphcalc/connection.hpp"
#include "graphcalc/echelon.hpp"
#include "graphcalc/properties.hpp"
#include "graphcalc/tower.hpp"
#include "graphcalc/verify.hpp"

using namespace graphcalc;

namespace {

const GammaPoly g = GammaPoly::gamma();

struct Term {
  std::vector<Vertex> path;
  GammaPoly coeff = 1;
};

Element el(int degree, std::initializer_list<Term> terms) {
  Element x(degree);
  for (const auto& t : terms) x.add_term(Path(t.path), t.coeff);
  return x;
}

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) notes_.push_back(what);
  }
  void equal(const Element& expected, const Element& computed, const std::string& what) {
    if (!(expected == computed)) {
      notes_.push_back(what + ": expected " + to_string(expected) + ", computed " + to_string(computed));
    }
  }
  bool passed() const { return notes_.empty(); }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> notes_;
};

using Body = std::function<void(Criterion&)>;

std::string name(Vertex i, Vertex j) { return "e" + std::to_string(i) + std::to_string(j); }

void criterion1(Criterion& c) {
  const auto t = build_tower(Digraph(3, {{1, 2}, {2, 3}, {1, 3}}), 4);
  c.expect(t.dim_k(2) == 1, "dim K^2 = 1");
  c.expect(t.complement_basis(2) == std::vector<Path>{Path{1, 2, 3}}, "K^2 basis {e123}");
  c.expect(t.dim_k(3) == 0, "K^3 = 0");
}

void criterion2(Criterion& c) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= 4; ++i) {
    for (Vertex j = 1; j <= 4; ++j) {
      if (i != j && !(i == 1 && j == 4) && !(i == 4 && j == 1)) edges.emplace_back(i, j);
    }
  }
  const auto t = build_tower(Digraph(4, edges), 2);
  const std::vector<Element> listed = {
      el(2, {{{1, 4, 1}}}), el(2, {{{1, 4, 2}}}), el(2, {{{1, 4, 3}}}), el(2, {{{2, 1, 4}}}),
      el(2, {{{2, 4, 1}}}), el(2, {{{3, 1, 4}}}), el(2, {{{3, 4, 1}}}), el(2, {{{4, 1, 2}}}),
      el(2, {{{4, 1, 3}}}), el(2, {{{4, 1, 4}}}), el(2, {{{1, 2, 4}}, {{1, 3, 4}}}),
      el(2, {{{4, 2, 1}}, {{4, 3, 1}}}),
  };
  EchelonBasis listed_span(2);
  for (const auto& x : listed) {
    listed_span.insert(x);
    c.expect(in_span(x, t.kernel(2)), "listed generator " + to_string(x) + " in computed ker phi2");
  }
  for (const auto& row : t.kernel(2).rows()) {
    c.expect(in_span(row, listed_span), "computed row " + to_string(row) + " in span of the listed generators");
  }
}

void criterion3(Criterion& c) {
  const auto t = build_tower(Digraph(3, {{1, 2}, {2, 3}, {3, 1}}), 4);
  c.expect(t.dim_kernel(2) == t.dim_omega(2), "ker phi2 = Omega^2");
  for (int n = 2; n <= 4; ++n) c.expect(t.dim_k(n) == 0, "K^" + std::to_string(n) + " = 0");
  c.equal(Element(2), t.product(el(1, {{{1, 2}}}), el(1, {{{2, 3}}})), "P11(e12, e23)");
}

void criterion4(Criterion& c) {
  const auto symbolic = ConnectionParams::symmetric(g);
  const auto flat = ConnectionParams::symmetric(0);
  for (int n : {3, 4}) {
    const UniversalContext ctx(n);
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = 1; j <= n; ++j) {
        if (i == j) continue;
        Element dd(2);
        for (Vertex a = 1; a <= n; ++a) {
          for (Vertex b = 1; b <= n; ++b) {
            // de_i = sum_a e_ai - sum_a e_ia; de_j = sum_b e_bj - sum_b e_jb.
            const std::array<std::pair<std::vector<Vertex>, int>, 2> left = {{{{a, i}, 1}, {{i, a}, -1}}};
            const std::array<std::pair<std::vector<Vertex>, int>, 2> right = {{{{b, j}, 1}, {{j, b}, -1}}};
            for (const auto& [lp, ls] : left) {
              for (const auto& [rp, rs] : right) {
                if (lp[0] == lp[1] || rp[0] == rp[1] || lp[1] != rp[0]) continue;
                if (auto path = Path::make({lp[0], lp[1], rp[1]})) dd.add_term(*path, GammaPoly(ls * rs));
              }
            }
          }
        }
        Element expected_d = dd;
        Element expected_t(2);
        for (Vertex a = 1; a <= n; ++a) {
          if (a == i || a == j) continue;
          expected_d.add_term(Path{i, a, j}, g);
          expected_t.add_term(Path{i, a, j}, -g);
        }
        const std::string e = "N=" + std::to_string(n) + " " + name(i, j);
        c.equal(expected_d, connection_D(ctx, symbolic, i, j), "D(" + e + ")");
        c.equal(expected_t, torsion_T(ctx, symbolic, i, j), "T(" + e + ")");
        c.equal(Element(2), torsion_T(ctx, flat, i, j), "T(" + e + ") at gamma = 0");
        c.expect(!torsion_T(ctx, ConnectionParams::symmetric(Rational(1, 3)), i, j).is_zero(),
                 "T(" + e + ") nonzero at gamma = 1/3");
      }
    }
  }
}

void criterion5(Criterion& c) {
  const auto symbolic = ConnectionParams::symmetric(g);
  for (int n : {3, 4}) {
    const UniversalContext ctx(n);
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = 1; j <= n; ++j) {
        if (i == j) continue;
        for (auto kind : {CurvatureKind::d1d, CurvatureKind::d2d}) {
          const std::string what = std::string(kind == CurvatureKind::d1d ? "D1D " : "D2D ") + name(i, j) +
                                   " N=" + std::to_string(n);
          const Element composed = curvature_composed(ctx, symbolic, kind, i, j);
          c.equal(composed, curvature_closed_form(ctx, symbolic, kind, i, j), what + " (general closed form)");
          c.equal(composed, curvature_symmetric_closed_form(ctx, g, kind, i, j), what + " (symmetric closed form)");
        }
      }
    }
  }
}

void criterion6(Criterion& c) {
  const auto flat = ConnectionParams::symmetric(0);
  const auto one = ConnectionParams::symmetric(1);
  for (int n : {3, 4}) {
    const UniversalContext ctx(n);
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = 1; j <= n; ++j) {
        if (i == j) continue;
        const std::string e = name(i, j) + " N=" + std::to_string(n);
        c.equal(Element(3), curvature_composed(ctx, flat, CurvatureKind::d1d, i, j), "D1D " + e + " at gamma = 0");
        c.equal(Element(3), curvature_composed(ctx, flat, CurvatureKind::d2d, i, j), "D2D " + e + " at gamma = 0");
        c.equal(complete_curvature_report(ctx, one, CurvatureKind::d1d, i, j).bilinear,
                complete_curvature_report(ctx, one, CurvatureKind::d2d, i, j).bilinear, "Curv1 = Curv2 " + e);
      }
    }
  }
}

struct Golden {
  Edge edge;
  Element value;
};

void compare_table(Criterion& c, const std::string& label, const std::vector<Golden>& table,
                   const std::function<Element(Vertex, Vertex)>& compute) {
  for (const auto& [edge, value] : table) {
    c.equal(value, compute(edge.first, edge.second), label + "(" + name(edge.first, edge.second) + ")");
  }
}

void criterion7(Criterion& c) {
  const auto t = build_tower(Digraph(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}}), 3);
  const auto p = ConnectionParams::symmetric(g);
  compare_table(c, "delta",
                {{{1, 2}, el(2, {{{1, 2, 1}}, {{2, 1, 2}}})},
                 {{2, 1}, el(2, {{{1, 2, 1}}, {{2, 1, 2}}})},
                 {{2, 3}, el(2, {{{2, 3, 2}}, {{3, 2, 3}}})},
                 {{3, 2}, el(2, {{{2, 3, 2}}, {{3, 2, 3}}})}},
                [&](Vertex i, Vertex j) { return t.delta(el(1, {{{i, j}}})); });
  compare_table(c, "nabla",
                {{{1, 2}, el(2, {{{1, 2, 1}}, {{1, 2, 3}}, {{2, 1, 2}}})},
                 {{2, 1}, el(2, {{{1, 2, 1}}, {{2, 1, 2}}, {{3, 2, 1}}})},
                 {{2, 3}, el(2, {{{1, 2, 3}}, {{2, 3, 2}}, {{3, 2, 3}}})},
                 {{3, 2}, el(2, {{{2, 3, 2}}, {{3, 2, 1}}, {{3, 2, 3}}})}},
                [&](Vertex i, Vertex j) { return nabla_edge(t, p, i, j); });
  compare_table(c, "nabla1 nabla",
                {{{1, 2}, Element(3)},
                 {{2, 1}, el(3, {{{2, 3, 2, 1}}, {{2, 1, 2, 3}, -1}})},
                 {{2, 3}, el(3, {{{2, 1, 2, 3}}, {{2, 3, 2, 1}, -1}})},
                 {{3, 2}, Element(3)}},
                [&](Vertex i, Vertex j) { return nabla_curvature(t, p, 1, i, j).raw; });
  const std::vector<Golden> curv = {{{1, 2}, Element(3)},
                                    {{2, 1}, el(3, {{{2, 3, 2, 1}}})},
                                    {{2, 3}, el(3, {{{2, 1, 2, 3}}})},
                                    {{3, 2}, Element(3)}};
  compare_table(c, "Curv1", curv, [&](Vertex i, Vertex j) { return nabla_curvature(t, p, 1, i, j).bilinear; });
  compare_table(c, "Curv2", curv, [&](Vertex i, Vertex j) { return nabla_curvature(t, p, 2, i, j).bilinear; });
}

void criterion8(Criterion& c) {
  const auto t = build_tower(Digraph(3, {{1, 2}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}), 3);
  const auto p = ConnectionParams::symmetric(g);
  const GammaPoly h = g * (GammaPoly(2) - g);  // gamma (2 - gamma)
  compare_table(c, "delta",
                {{{1, 2}, el(2, {{{1, 2, 1}}, {{2, 1, 2}}, {{3, 1, 2}}})},
                 {{2, 1}, el(2, {{{1, 2, 1}}, {{3, 2, 1}}, {{2, 3, 1}, -1}, {{2, 1, 2}}})},
                 {{2, 3}, el(2, {{{3, 2, 3}}, {{2, 3, 1}}, {{2, 3, 2}}})},
                 {{3, 1}, el(2, {{{2, 3, 1}}, {{3, 2, 1}, -1}, {{3, 1, 2}}})},
                 {{3, 2}, el(2, {{{2, 3, 2}}, {{3, 1, 2}, -1}, {{3, 2, 1}}, {{3, 2, 3}}})}},
                [&](Vertex i, Vertex j) { return t.delta(el(1, {{{i, j}}})); });
  compare_table(c, "nabla",
                {{{1, 2}, el(2, {{{2, 1, 2}}, {{3, 1, 2}}, {{1, 2, 1}}, {{1, 2, 3}}})},
                 {{2, 1}, el(2, {{{1, 2, 1}}, {{3, 2, 1}}, {{2, 1, 2}}, {{2, 3, 1}, -1}, {{2, 3, 1}, g}})},
                 {{2, 3}, el(2, {{{1, 2, 3}}, {{3, 2, 3}}, {{2, 3, 2}}, {{2, 3, 1}}})},
                 {{3, 1}, el(2, {{{2, 3, 1}}, {{3, 2, 1}, -1}, {{3, 1, 2}}, {{3, 2, 1}, g}})},
                 {{3, 2}, el(2, {{{2, 3, 2}}, {{3, 2, 1}}, {{3, 2, 3}}, {{3, 1, 2}, -1}, {{3, 1, 2}, g}})}},
                [&](Vertex i, Vertex j) { return nabla_edge(t, p, i, j); });
  compare_table(c, "nabla1 nabla",
                {{{1, 2}, Element(3)},
                 {{2, 1}, el(3, {{{2, 1, 2, 3}, -1}, {{2, 3, 1, 2}, -g}, {{2, 3, 2, 1}, h}})},
                 {{2, 3}, el(3, {{{2, 1, 2, 3}}, {{2, 3, 1, 2}, -g}, {{2, 3, 2, 1}, -g}})},
                 {{3, 1}, el(3, {{{3, 1, 2, 3}, -1}, {{3, 1, 2, 1}, -g}, {{3, 2, 3, 1}, h}, {{3, 2, 1, 2}, -g}})},
                 {{3, 2}, el(3, {{{3, 2, 3, 1}, -g}, {{3, 2, 1, 2}, -g}, {{3, 1, 2, 1}, -g}, {{3, 1, 2, 3}, -g}})}},
                [&](Vertex i, Vertex j) { return nabla_curvature(t, p, 1, i, j).raw; });
  compare_table(c, "Curv1",
                {{{1, 2}, Element(3)},
                 {{2, 1}, el(3, {{{2, 3, 2, 1}, h}})},
                 {{2, 3}, el(3, {{{2, 1, 2, 3}}})},
                 {{3, 1}, el(3, {{{3, 1, 2, 1}, -g}, {{3, 2, 3, 1}, h}})},
                 {{3, 2}, el(3, {{{3, 2, 1, 2}, -g}})}},
                [&](Vertex i, Vertex j) { return nabla_curvature(t, p, 1, i, j).bilinear; });
  compare_table(c, "Curv2",
                {{{1, 2}, Element(3)},
                 {{2, 1}, el(3, {{{2, 3, 2, 1}, h}})},
                 {{2, 3}, el(3, {{{2, 1, 2, 3}}})},
                 {{3, 1}, el(3, {{{3, 1, 2, 1}, -h}, {{3, 2, 3, 1}, h}})},
                 {{3, 2}, el(3, {{{3, 2, 1, 2}, -g}})}},
                [&](Vertex i, Vertex j) { return nabla_curvature(t, p, 2, i, j).bilinear; });
}

void criterion9(Criterion& c) {
  const auto p = ConnectionParams::symmetric(g);
  c.expect(metric_compatible(metric_check(UniversalContext(2), p, Metric{1})), "complete:2 COMPATIBLE");
  c.expect(!metric_compatible(metric_check(UniversalContext(3), p, Metric{1})), "complete:3 INCOMPATIBLE");
  c.expect(!metric_compatible(metric_check(UniversalContext(4), p, Metric{1})), "complete:4 INCOMPATIBLE");
}

void criterion10(Criterion& c) {
  PropertyConfig config;
  config.cases = 100;
  config.sizes = {2, 3, 4};
  const std::set<std::string> required = {
      "d_squared_zero",        "delta_squared_zero",     "graded_leibniz_d",    "graded_leibniz_delta",
      "associativity_product", "associativity_P",        "kernel_closure",      "bimodule_splitting",
      "factorization_phi_P",   "right_linearity_T",      "right_linearity_T_nabla", "curvature_bilinearity",
  };
  std::set<std::string> seen;
  for (const auto& outcome : run_property_suite(config)) {
    seen.insert(outcome.name);
    c.expect(outcome.cases >= 100, outcome.name + " ran " + std::to_string(outcome.cases) + " cases");
    c.expect(outcome.failures == 0, outcome.name + ": " + std::to_string(outcome.failures) + " failures, first " +
                                        outcome.first_failure);
  }
  for (const auto& r : required) c.expect(seen.contains(r), "property " + r + " present");
}

void criterion11(Criterion& c, const std::string& cli) {
  const std::string command = "\"" + cli + "\" verify --examples all --output json";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    c.expect(false, "could not run " + command);
    return;
  }
  std::string output;
  std::array<char, 4096> buffer{};
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) output.append(buffer.data(), n);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  c.expect(code == 0, "verify exit code " + std::to_string(code));

  nlohmann::json report;
  try {
    report = nlohmann::json::parse(output);
  } catch (const std::exception& e) {
    c.expect(false, std::string("report is not JSON: ") + e.what());
    return;
  }
  std::set<int> criteria;
  std::set<std::string> ids;
  for (const auto& check : report.at("checks")) {
    criteria.insert(check.at("criterion").get<int>());
    ids.insert(check.at("id").get<std::string>());
    if (!check.at("passed").get<bool>()) c.expect(false, "failed check " + check.at("id").get<std::string>());
  }
  for (int k = 1; k <= 10; ++k) c.expect(criteria.contains(k), "report covers criterion " + std::to_string(k));
  for (const auto& r : run_checks("all")) c.expect(ids.contains(r.id), "report lists " + r.id);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: graphcalc_acceptance <graphcalc-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<std::string, Body>> criteria = {
      {"Example 1 tower: K^2 = <e123>, K^3 = 0", criterion1},
      {"Example 2: ker phi2 equals the span of the 12 listed generators", criterion2},
      {"Example 3: ker phi2 = Omega^2, K^n = 0 for n >= 2, P11(e12, e23) = 0", criterion3},
      {"D and T closed forms on complete:3/4; T = 0 iff gamma = 0", criterion4},
      {"Curvature closed forms equal the composition on complete:3/4", criterion5},
      {"gamma = 0 flatness and gamma = 1 Curv1 = Curv2 on complete:3/4", criterion6},
      {"Example 5 tables", criterion7},
      {"Example 6 tables", criterion8},
      {"Metric no-go on complete:2/3/4", criterion9},
      {"Property suites, 100 cases each over N in {2,3,4}", criterion10},
      {"verify --examples all exits 0 and its JSON report lists every check",
       [&cli](Criterion& c) { criterion11(c, cli); }},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Criterion c;
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.passed() ? "PASS" : "FAIL") << "  criterion " << k + 1 << ": " << criteria[k].first << "\n";
    for (const auto& note : c.notes()) std::cout << "        " << note << "\n";
    failed += c.passed() ? 0 : 1;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
