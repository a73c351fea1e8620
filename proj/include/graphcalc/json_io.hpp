#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "graphcalc/digraph.hpp"
#include "graphcalc/element.hpp"

namespace graphcalc {

/// {"degree": n, "terms": [{"path": [...], "coeff": ["p/q", ...]}, ...]} with
/// coefficients in ascending powers of γ and terms in lexicographic path order.
nlohmann::json element_to_json(const Element& x);
/// Inverse of element_to_json. Throws InvalidInput naming the bad field.
Element element_from_json(const nlohmann::json& j);

nlohmann::json gamma_poly_to_json(const GammaPoly& p);
GammaPoly gamma_poly_from_json(const nlohmann::json& j);

/// {"vertices": N, "edges": [[i, j], ...]}, 1-based.
nlohmann::json graph_to_json(const Digraph& g);
Digraph graph_from_json(const nlohmann::json& j);

/// "complete:N" or the path of a graph-spec JSON file.
Digraph load_graph(std::string_view spec);

/// "symbolic" for the symbol γ itself, otherwise a rational literal.
GammaPoly parse_gamma(std::string_view text);

}  // namespace graphcalc
