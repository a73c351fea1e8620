// graphcalc: command-line front end for the digraph calculus engine.

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <string>

#include "graphcalc/connection.hpp"
#include "graphcalc/errors.hpp"
#include "graphcalc/json_io.hpp"
#include "graphcalc/tower.hpp"
#include "graphcalc/verify.hpp"

using namespace graphcalc;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kCrossCheck = 3 };

struct Options {
  std::string output = "text";
  std::string graph;
  int max_degree = 3;
  std::string gamma = "symbolic";
  std::string show = "nabla";
  int which = 1;
  std::string bilinear = "true";
  std::string mu = "1";
  std::string examples = "all";
};

bool json_mode(const Options& o) { return o.output == "json"; }

std::string edge_label(Vertex i, Vertex j) { return to_string(Element::monomial(Path{i, j})); }

Digraph load(const Options& o) {
  Digraph g = load_graph(o.graph);
  if (!g.is_connected()) std::cerr << "warning: graph is not connected\n";
  return g;
}

int cmd_dims(const Options& o) {
  const Digraph g = load(o);
  const auto tower = build_tower(g, o.max_degree);
  struct Row {
    int degree;
    std::uint64_t omega, kernel, k;
  };
  std::vector<Row> rows{{0, static_cast<std::uint64_t>(g.n_points()), 0, static_cast<std::uint64_t>(g.n_points())}};
  for (int n = 1; n <= o.max_degree; ++n) rows.push_back({n, tower.dim_omega(n), tower.dim_kernel(n), tower.dim_k(n)});

  if (json_mode(o)) {
    json out = json::array();
    for (const auto& r : rows) out.push_back({{"degree", r.degree}, {"omega", r.omega}, {"kernel", r.kernel}, {"k", r.k}});
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << std::setw(6) << "degree" << std::setw(10) << "Omega" << std::setw(10) << "ker" << std::setw(10) << "K"
            << "\n";
  for (const auto& r : rows) {
    std::cout << std::setw(6) << r.degree << std::setw(10) << r.omega << std::setw(10) << r.kernel << std::setw(10)
              << r.k << "\n";
  }
  return kOk;
}

int cmd_connection(const Options& o) {
  const Digraph g = load(o);
  const auto params = ConnectionParams::symmetric(parse_gamma(o.gamma));
  const auto tower = build_tower(g, std::max(o.max_degree, 2));
  const UniversalContext& ctx = tower.context();

  json edges = json::array();
  for (const auto& [i, j] : g.edges()) {
    Element x;
    if (o.show == "D") {
      x = connection_D(ctx, params, i, j);
    } else if (o.show == "T") {
      x = torsion_T(ctx, params, i, j);
    } else if (o.show == "nabla") {
      x = nabla_edge(tower, params, i, j);
    } else {
      x = tower.delta(Element::monomial(Path{i, j}));
    }
    if (json_mode(o)) {
      edges.push_back({{"edge", {i, j}}, {"element", element_to_json(x)}});
    } else {
      std::cout << o.show << "(" << edge_label(i, j) << ") = " << to_string(x) << "\n";
    }
  }
  if (json_mode(o)) {
    std::cout << json{{"show", o.show}, {"gamma", o.gamma}, {"edges", edges}}.dump(2) << "\n";
  }
  return kOk;
}

int cmd_curvature(const Options& o) {
  const Digraph g = load(o);
  const auto params = ConnectionParams::symmetric(parse_gamma(o.gamma));
  const bool bilinear = o.bilinear == "true";
  const std::string name = bilinear ? "Curv" + std::to_string(o.which)
                                    : (o.which == 1 ? std::string("nabla1 nabla") : std::string("p12 nabla2 nabla"));

  std::vector<CurvatureReport> reports;
  if (g.is_complete()) {
    const UniversalContext ctx(g.n_points());
    const auto kind = o.which == 1 ? CurvatureKind::d1d : CurvatureKind::d2d;
    for (const auto& [i, j] : g.edges()) reports.push_back(complete_curvature_report(ctx, params, kind, i, j));
  } else {
    const auto tower = build_tower(g, std::max(o.max_degree, 2));
    for (const auto& [i, j] : g.edges()) reports.push_back(nabla_curvature(tower, params, o.which, i, j));
  }

  json edges = json::array();
  for (const auto& r : reports) {
    const Element& x = bilinear ? r.bilinear : r.raw;
    if (json_mode(o)) {
      json entry{{"edge", {r.edge.first, r.edge.second}}, {"element", element_to_json(x)}};
      if (bilinear) entry["dropped"] = element_to_json(r.dropped);
      edges.push_back(std::move(entry));
    } else {
      std::cout << name << "(" << edge_label(r.edge.first, r.edge.second) << ") = " << to_string(x) << "\n";
    }
  }
  if (json_mode(o)) {
    std::cout << json{{"which", o.which}, {"bilinear", bilinear}, {"gamma", o.gamma}, {"complete", g.is_complete()},
                      {"edges", edges}}
                     .dump(2)
              << "\n";
  }
  return kOk;
}

int cmd_metric_check(const Options& o) {
  const Digraph g = load(o);
  if (!g.is_complete()) {
    throw InvalidInput("graph: metric-check needs a complete graph (the metric is defined on the universal 1-forms)");
  }
  const auto params = ConnectionParams::symmetric(parse_gamma(o.gamma));
  const Metric metric{parse_rational(o.mu)};
  const UniversalContext ctx(g.n_points());
  const auto discrepancies = metric_check(ctx, params, metric);
  const bool ok = metric_compatible(discrepancies);
  const std::string verdict = ok ? "COMPATIBLE" : "INCOMPATIBLE";

  if (json_mode(o)) {
    json table = json::array();
    for (const auto& [edge, x] : discrepancies) {
      table.push_back({{"pair", {edge.first, edge.second}}, {"discrepancy", element_to_json(x)}});
    }
    std::cout << json{{"verdict", verdict}, {"gamma", o.gamma}, {"mu", to_string(metric.mu)}, {"discrepancies", table}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << verdict << "\n";
  for (const auto& [edge, x] : discrepancies) {
    std::cout << "  (" << edge.first << "," << edge.second << "): " << to_string(x) << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto results = run_checks(o.examples);
  const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; });

  if (json_mode(o)) {
    json checks = json::array();
    for (const auto& r : results) {
      checks.push_back({{"id", r.id},
                        {"criterion", r.criterion},
                        {"description", r.description},
                        {"passed", r.passed},
                        {"expected", r.expected},
                        {"computed", r.computed}});
    }
    std::cout << json{{"examples", o.examples},
                      {"total", results.size()},
                      {"failed", failed},
                      {"checks", checks}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.description << "\n";
      if (!r.passed) std::cout << "     expected: " << r.expected << "\n     computed: " << r.computed << "\n";
    }
    std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact discrete differential calculus on digraphs"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("graph", o.graph, "Graph JSON file or complete:N")->required();
    cmd->add_option("--max-degree", o.max_degree, "Highest form degree to compute")->check(CLI::Range(1, 8));
  };
  auto add_gamma = [&](CLI::App* cmd) {
    cmd->add_option("--gamma", o.gamma, "Connection parameter: symbolic or p/q");
  };

  auto* dims = app.add_subcommand("dims", "Dimensions of Omega^n, ker phi_n and K^n");
  add_graph(dims);
  add_output(dims);

  auto* connection = app.add_subcommand("connection", "Connection, torsion, nabla or delta per edge");
  add_graph(connection);
  add_gamma(connection);
  add_output(connection);
  connection->add_option("--show", o.show, "Which map to print")->check(CLI::IsMember({"D", "T", "nabla", "delta"}));

  auto* curvature = app.add_subcommand("curvature", "Curvature per edge");
  add_graph(curvature);
  add_gamma(curvature);
  add_output(curvature);
  curvature->add_option("--which", o.which, "1 for nabla1 nabla, 2 for p12 nabla2 nabla")
      ->check(CLI::IsMember({1, 2}));
  curvature->add_option("--bilinear", o.bilinear, "Keep only the S_ij block")
      ->check(CLI::IsMember({"true", "false"}));

  auto* metric = app.add_subcommand("metric-check", "Metric compatibility on a complete graph");
  add_graph(metric);
  add_gamma(metric);
  add_output(metric);
  metric->add_option("--mu", o.mu, "Metric constant, nonzero rational");

  auto* verify = app.add_subcommand("verify", "Run the built-in example checks");
  add_output(verify);
  verify->add_option("--examples", o.examples, "all, 1..6, props, torsion, closed-forms, flatness or metric")
      ->check(CLI::IsMember(check_selections()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*dims) return cmd_dims(o);
    if (*connection) return cmd_connection(o);
    if (*curvature) return cmd_curvature(o);
    if (*metric) return cmd_metric_check(o);
    return cmd_verify(o);
  } catch (const CrossCheckFailure& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCrossCheck;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DegenerateMetric& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCrossCheck;
  }
}
