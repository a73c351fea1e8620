#include "graphcalc/json_io.hpp"

#include <charconv>
#include <fstream>
#include <set>

#include "graphcalc/errors.hpp"

namespace graphcalc {

using nlohmann::json;

namespace {

int require_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw InvalidInput(field + ": expected an integer");
  return j.get<int>();
}

const json& require_key(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InvalidInput(where + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(where + ": missing field \"" + key + "\"");
  return *it;
}

}  // namespace

json gamma_poly_to_json(const GammaPoly& p) {
  json out = json::array();
  for (const Rational& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

GammaPoly gamma_poly_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("coeff: expected an array of rational strings");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw InvalidInput("coeff: entries must be strings like \"p/q\"");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return GammaPoly::from_coeffs(std::move(coeffs));
}

json element_to_json(const Element& x) {
  json terms = json::array();
  for (const auto& [p, c] : x.terms()) {
    terms.push_back({{"path", p.vertices()}, {"coeff", gamma_poly_to_json(c)}});
  }
  return {{"degree", x.degree()}, {"terms", terms}};
}

Element element_from_json(const json& j) {
  const int degree = require_int(require_key(j, "degree", "element"), "degree");
  if (degree < 0) throw InvalidInput("degree: must be non-negative");
  const json& terms = require_key(j, "terms", "element");
  if (!terms.is_array()) throw InvalidInput("terms: expected an array");
  Element x(degree);
  std::set<Path> seen;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string where = "terms[" + std::to_string(k) + "]";
    const json& jp = require_key(terms[k], "path", where);
    if (!jp.is_array()) throw InvalidInput(where + ".path: expected an array of vertices");
    std::vector<Vertex> vertices;
    for (const auto& v : jp) {
      const int vi = require_int(v, where + ".path");
      if (vi < 1) throw InvalidInput(where + ".path: vertices are 1-based");
      vertices.push_back(vi);
    }
    if (static_cast<int>(vertices.size()) != degree + 1) {
      throw InvalidInput(where + ".path: length must be degree + 1 = " + std::to_string(degree + 1));
    }
    auto path = Path::make(vertices);
    if (!path) throw InvalidInput(where + ".path: repeated consecutive vertex");
    if (!seen.insert(*path).second) throw InvalidInput(where + ".path: duplicate path");
    GammaPoly c = gamma_poly_from_json(require_key(terms[k], "coeff", where));
    if (c.is_zero()) throw InvalidInput(where + ".coeff: zero coefficient");
    x.add_term(*path, c);
  }
  return x;
}

json graph_to_json(const Digraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return {{"vertices", g.n_points()}, {"edges", edges}};
}

Digraph graph_from_json(const json& j) {
  const int n = require_int(require_key(j, "vertices", "graph"), "vertices");
  const json& je = require_key(j, "edges", "graph");
  if (!je.is_array()) throw InvalidInput("edges: expected an array of [i, j] pairs");
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < je.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    if (!je[k].is_array() || je[k].size() != 2) throw InvalidInput(where + ": expected a pair [i, j]");
    edges.emplace_back(require_int(je[k][0], where), require_int(je[k][1], where));
  }
  return Digraph(n, edges);
}

Digraph load_graph(std::string_view spec) {
  constexpr std::string_view prefix = "complete:";
  if (spec.starts_with(prefix)) {
    const auto digits = spec.substr(prefix.size());
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw InvalidInput("graph: bad vertex count in '" + std::string(spec) + "'");
    }
    return Digraph::complete(n);
  }
  std::ifstream in{std::string(spec)};
  if (!in) throw InvalidInput("graph: cannot open '" + std::string(spec) + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidInput("graph: '" + std::string(spec) + "' is not valid JSON (" + e.what() + ")");
  }
  return graph_from_json(j);
}

GammaPoly parse_gamma(std::string_view text) {
  if (text == "symbolic") return GammaPoly::gamma();
  try {
    return parse_rational(text);
  } catch (const InvalidInput&) {
    throw InvalidInput("gamma: expected 'symbolic' or a rational p/q, got '" + std::string(text) + "'");
  }
}

}  // namespace graphcalc
