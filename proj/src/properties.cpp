#include "graphcalc/properties.hpp"

#include <functional>
#include <map>
#include <optional>
#include <random>

#include "graphcalc/connection.hpp"
#include "graphcalc/tower.hpp"

namespace graphcalc {

namespace {

constexpr int kTowerDegree = 4;

class Generator {
 public:
  explicit Generator(std::uint64_t seed, std::vector<int> sizes) : rng_(seed), sizes_(std::move(sizes)) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  int size() { return sizes_[static_cast<std::size_t>(uniform(0, static_cast<int>(sizes_.size()) - 1))]; }

  Rational rational() {
    Rational r(uniform(-4, 4), uniform(1, 3));
    r.canonicalize();
    return r;
  }

  GammaPoly poly(bool allow_gamma) {
    if (!allow_gamma || uniform(0, 2) > 0) return rational();
    return GammaPoly::from_coeffs({rational(), rational()});
  }

  Digraph graph(int n) {
    std::vector<Edge> edges;
    while (edges.empty()) {
      for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = 1; j <= n; ++j) {
          if (i != j && uniform(0, 3) > 0) edges.emplace_back(i, j);
        }
      }
    }
    return Digraph(n, edges);
  }

  Element combination(const std::vector<Path>& basis, int degree, bool allow_gamma) {
    Element x(degree);
    if (basis.empty()) return x;
    const int terms = uniform(1, 4);
    for (int t = 0; t < terms; ++t) {
      x.add_term(basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))], poly(allow_gamma));
    }
    return x;
  }

  Element combination(const std::vector<Element>& basis, int degree) {
    Element x(degree);
    if (basis.empty()) return x;
    const int terms = uniform(1, 3);
    for (int t = 0; t < terms; ++t) {
      x.add_scaled(basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))], rational());
    }
    return x;
  }

  Element form(const UniversalContext& ctx, int degree, bool allow_gamma = true) {
    return combination(omega_basis(ctx, degree), degree, allow_gamma);
  }

  Element function(int n) {
    std::vector<Rational> values;
    for (int k = 0; k < n; ++k) values.push_back(rational());
    return function_element(values);
  }

  ConnectionParams params(int n) {
    switch (uniform(0, 2)) {
      case 0:
        return ConnectionParams::symmetric(GammaPoly::gamma());
      case 1:
        return ConnectionParams::symmetric(rational());
      default: {
        std::map<ConnectionParams::Key, GammaPoly> table;
        for (Vertex i = 1; i <= n; ++i) {
          for (Vertex j = 1; j <= n; ++j) {
            for (Vertex a = 1; a <= n; ++a) {
              if (i != j && a != i && a != j) table[{i, j, a}] = poly(true);
            }
          }
        }
        return ConnectionParams::general(std::move(table));
      }
    }
  }

 private:
  std::mt19937_64 rng_;
  std::vector<int> sizes_;
};

class TowerCache {
 public:
  const CalculusTower& get(const Digraph& g) {
    const Key key{g.n_points(), g.edges()};
    auto it = towers_.find(key);
    if (it == towers_.end()) it = towers_.emplace(key, build_tower(g, kTowerDegree)).first;
    return it->second;
  }

 private:
  using Key = std::pair<int, std::set<Edge>>;
  std::map<Key, CalculusTower> towers_;
};

using Failure = std::optional<std::string>;

Failure expect_equal(const Element& lhs, const Element& rhs, const std::string& what) {
  if (lhs == rhs) return std::nullopt;
  return what + ": " + to_string(lhs) + " != " + to_string(rhs);
}

Failure expect_zero(const Element& x, const std::string& what) {
  if (x.is_zero()) return std::nullopt;
  return what + ": got " + to_string(x);
}

std::string graph_label(const Digraph& g) {
  std::string s = "N=" + std::to_string(g.n_points()) + " edges{";
  for (const auto& [a, b] : g.edges()) s += std::to_string(a) + std::to_string(b) + " ";
  return s + "}";
}

// Representative of a random K^n element, n >= 0.
Element random_k_element(Generator& gen, const CalculusTower& tower, int n) {
  if (n == 0) return gen.function(tower.graph().n_points());
  return gen.combination(tower.complement_basis(n), n, true);
}

// Random element of K¹ ⊗_A K¹.
Element random_k1k1(Generator& gen, const CalculusTower& tower) {
  std::vector<Path> supported;
  for (const Path& p : omega_basis(tower.context(), 2)) {
    if (tower.graph().supports(p)) supported.push_back(p);
  }
  return gen.combination(supported, 2, true);
}

Element edge_form(Vertex i, Vertex j) { return Element::monomial(Path{i, j}); }

Element linear_curvature(const CalculusTower& tower, const ConnectionParams& params, int which, const Element& v) {
  Element out(3);
  for (const auto& [p, c] : v.terms()) {
    out.add_scaled(nabla_curvature(tower, params, which, p.first(), p.last()).bilinear, c);
  }
  return out;
}

struct Property {
  std::string name;
  std::function<Failure(Generator&, TowerCache&)> check;
};

std::vector<Property> properties() {
  std::vector<Property> out;

  out.push_back({"d_squared_zero", [](Generator& gen, TowerCache&) -> Failure {
                   const UniversalContext ctx(gen.size());
                   const Element x = gen.form(ctx, gen.uniform(0, 3));
                   return expect_zero(differential(ctx, differential(ctx, x)), "d(d " + to_string(x) + ")");
                 }});

  out.push_back({"graded_leibniz_d", [](Generator& gen, TowerCache&) -> Failure {
                   const UniversalContext ctx(gen.size());
                   const int n = gen.uniform(0, 2);
                   const Element x = gen.form(ctx, n);
                   const Element y = gen.form(ctx, gen.uniform(0, 2));
                   Element rhs = multiply(differential(ctx, x), y);
                   rhs.add_scaled(multiply(x, differential(ctx, y)), Rational(n % 2 == 0 ? 1 : -1));
                   return expect_equal(differential(ctx, multiply(x, y)), rhs, "d(x.y)");
                 }});

  out.push_back({"associativity_product", [](Generator& gen, TowerCache&) -> Failure {
                   const UniversalContext ctx(gen.size());
                   const Element x = gen.form(ctx, gen.uniform(0, 2));
                   const Element y = gen.form(ctx, gen.uniform(0, 2));
                   const Element z = gen.form(ctx, gen.uniform(0, 2));
                   return expect_equal(multiply(multiply(x, y), z), multiply(x, multiply(y, z)), "(xy)z vs x(yz)");
                 }});

  out.push_back({"bimodule_compatibility", [](Generator& gen, TowerCache&) -> Failure {
                   const UniversalContext ctx(gen.size());
                   const Element x = gen.form(ctx, gen.uniform(0, 3));
                   const Vertex k = gen.uniform(1, ctx.n_points());
                   const Vertex l = gen.uniform(1, ctx.n_points());
                   return expect_equal(module_action(Side::right, l, module_action(Side::left, k, x)),
                                       module_action(Side::left, k, module_action(Side::right, l, x)),
                                       "(e_k x) e_l vs e_k (x e_l)");
                 }});

  out.push_back({"delta_squared_zero", [](Generator& gen, TowerCache& cache) -> Failure {
                   const auto& tower = cache.get(gen.graph(gen.size()));
                   const Element v = random_k_element(gen, tower, gen.uniform(0, 2));
                   return expect_zero(tower.delta(tower.delta(v)),
                                      graph_label(tower.graph()) + " delta^2 " + to_string(v));
                 }});

  out.push_back({"phi_d_commutes_with_delta", [](Generator& gen, TowerCache& cache) -> Failure {
                   const auto& tower = cache.get(gen.graph(gen.size()));
                   const Element x = gen.form(tower.context(), gen.uniform(0, 2));
                   return expect_equal(tower.project(differential(tower.context(), x)),
                                       tower.delta(tower.project(x)), graph_label(tower.graph()) + " phi d");
                 }});

  out.push_back({"graded_leibniz_delta", [](Generator& gen, TowerCache& cache) -> Failure {
                   const auto& tower = cache.get(gen.graph(gen.size()));
                   const int n = gen.uniform(0, 2);
                   const Element v = random_k_element(gen, tower, n);
                   const Element w = random_k_element(gen, tower, gen.uniform(0, 2 - n));
                   Element rhs = tower.product(tower.delta(v), w);
                   rhs.add_scaled(tower.product(v, tower.delta(w)), Rational(n % 2 == 0 ? 1 : -1));
                   return expect_equal(tower.delta(tower.product(v, w)), rhs,
                                       graph_label(tower.graph()) + " delta(v.w)");
                 }});

  out.push_back({"associativity_P", [](Generator& gen, TowerCache& cache) -> Failure {
                   const auto& tower = cache.get(gen.graph(gen.size()));
                   const int a = gen.uniform(0, 2);
                   const int b = gen.uniform(0, kTowerDegree - a);
                   const int c = gen.uniform(0, kTowerDegree - a - b);
                   const Element u = random_k_element(gen, tower, a);
                   const Element v = random_k_element(gen, tower, b);
                   const Element w = random_k_element(gen, tower, c);
                   return expect_equal(tower.product(tower.product(u, v), w), tower.product(u, tower.product(v, w)),
                                       graph_label(tower.graph()) + " P associativity");
                 }});

  out.push_back({"kernel_closure", [](Generator& gen, TowerCache& cache) -> Failure {
                   const auto& tower = cache.get(gen.graph(gen.size()));
                   const int n = gen.uniform(1, 2);
                   const Element u = gen.combination(tower.kernel(n).rows(), n);
                   const Element x = gen.form(tower.context(), gen.uniform(0, kTowerDegree - n));
                   if (auto f = expect_zero(tower.project(multiply(x, u)), graph_label(tower.graph()) + " x.u")) return f;
                   return expect_zero(tower.project(multiply(u, x)), graph_label(tower.graph()) + " u.x");
                 }});

  out.push_back({"bimodule_splitting", [](Generator& gen, TowerCache& cache) -> Failure {
                   const auto& tower = cache.get(gen.graph(gen.size()));
                   const int n = tower.graph().n_points();
                   const Element x = gen.form(tower.context(), gen.uniform(1, 3));
                   const Element f = gen.function(n);
                   const Element g = gen.function(n);
                   return expect_equal(tower.project(multiply(multiply(f, x), g)),
                                       multiply(multiply(f, tower.project(x)), g),
                                       graph_label(tower.graph()) + " j(f x g)");
                 }});

  out.push_back({"factorization_phi_P", [](Generator& gen, TowerCache& cache) -> Failure {
                   const auto& tower = cache.get(gen.graph(gen.size()));
                   const int n = gen.uniform(0, 2);
                   const Element a = gen.form(tower.context(), n);
                   const Element b = gen.form(tower.context(), gen.uniform(0, 2));
                   return expect_equal(tower.project(multiply(a, b)),
                                       tower.product(tower.project(a), tower.project(b)),
                                       graph_label(tower.graph()) + " phi(ab)");
                 }});

  out.push_back({"delta_generates_next_degree", [](Generator& gen, TowerCache& cache) -> Failure {
                   const auto& tower = cache.get(gen.graph(gen.size()));
                   const int n = gen.uniform(0, 2);
                   const int points = tower.graph().n_points();
                   std::vector<Element> reps;
                   if (n == 0) {
                     for (Vertex k = 1; k <= points; ++k) reps.push_back(Element::monomial(Path{k}));
                   } else {
                     for (const Path& p : tower.complement_basis(n)) reps.push_back(Element::monomial(p));
                   }
                   EchelonBasis span(n + 1);
                   for (const Element& v : reps) {
                     const Element dv = tower.delta(v);
                     for (Vertex a = 1; a <= points; ++a) {
                       for (Vertex b = 1; b <= points; ++b) {
                         span.insert(module_action(Side::right, b, module_action(Side::left, a, dv)));
                       }
                     }
                   }
                   if (span.rank() == tower.dim_k(n + 1)) return std::nullopt;
                   return graph_label(tower.graph()) + " rank <delta K^" + std::to_string(n) +
                          "> = " + std::to_string(span.rank()) + " but dim K^" + std::to_string(n + 1) + " = " +
                          std::to_string(tower.dim_k(n + 1));
                 }});

  out.push_back({"right_linearity_T", [](Generator& gen, TowerCache&) -> Failure {
                   const UniversalContext ctx(gen.size());
                   const auto params = gen.params(ctx.n_points());
                   const Element omega = gen.form(ctx, 1);
                   const Element f = gen.function(ctx.n_points());
                   return expect_equal(torsion_T(ctx, params, multiply(omega, f)),
                                       multiply(torsion_T(ctx, params, omega), f), "T(w f)");
                 }});

  out.push_back({"leibniz_D", [](Generator& gen, TowerCache&) -> Failure {
                   const UniversalContext ctx(gen.size());
                   const auto params = gen.params(ctx.n_points());
                   const Element omega = gen.form(ctx, 1);
                   const Element f = gen.function(ctx.n_points());
                   const Element df = differential(ctx, f);
                   const Element left =
                       multiply(df, omega) + multiply(f, connection_D(ctx, params, omega));
                   if (auto fail = expect_equal(connection_D(ctx, params, multiply(f, omega)), left, "D(f w)")) return fail;
                   const Element right =
                       multiply(connection_D(ctx, params, omega), f) - multiply(omega, df);
                   return expect_equal(connection_D(ctx, params, multiply(omega, f)), right, "D(w f)");
                 }});

  out.push_back({"right_linearity_T_nabla", [](Generator& gen, TowerCache& cache) -> Failure {
                   const auto& tower = cache.get(gen.graph(gen.size()));
                   const auto params = gen.params(tower.graph().n_points());
                   const Element omega = random_k_element(gen, tower, 1);
                   const Element f = gen.function(tower.graph().n_points());
                   return expect_equal(torsion_nabla(tower, params, multiply(omega, f)),
                                       multiply(torsion_nabla(tower, params, omega), f),
                                       graph_label(tower.graph()) + " T_nabla(w f)");
                 }});

  out.push_back({"leibniz_nabla", [](Generator& gen, TowerCache& cache) -> Failure {
                   const auto& tower = cache.get(gen.graph(gen.size()));
                   const auto params = gen.params(tower.graph().n_points());
                   const Element omega = random_k_element(gen, tower, 1);
                   const Element f = gen.function(tower.graph().n_points());
                   const Element df = tower.delta(f);
                   const Element left = multiply(df, omega) + multiply(f, nabla(tower, params, omega));
                   if (auto fail = expect_equal(nabla(tower, params, multiply(f, omega)), left,
                                                graph_label(tower.graph()) + " nabla(f w)")) {
                     return fail;
                   }
                   const Element right = multiply(nabla(tower, params, omega), f) - multiply(omega, df);
                   return expect_equal(nabla(tower, params, multiply(omega, f)), right,
                                       graph_label(tower.graph()) + " nabla(w f)");
                 }});

  out.push_back({"curvature_bilinearity", [](Generator& gen, TowerCache& cache) -> Failure {
                   const auto& tower = cache.get(gen.graph(gen.size()));
                   const int n = tower.graph().n_points();
                   const auto params = gen.params(n);
                   const int which = gen.uniform(1, 2);
                   const Element v = random_k_element(gen, tower, 1);
                   const Element f = gen.function(n);
                   const Element g = gen.function(n);
                   return expect_equal(linear_curvature(tower, params, which, multiply(multiply(f, v), g)),
                                       multiply(multiply(f, linear_curvature(tower, params, which, v)), g),
                                       graph_label(tower.graph()) + " Curv" + std::to_string(which) + "(f v g)");
                 }});

  out.push_back({"nabla1_formula_matches_definition", [](Generator& gen, TowerCache& cache) -> Failure {
                   const auto& tower = cache.get(gen.graph(gen.size()));
                   const auto params = gen.params(tower.graph().n_points());
                   const Element x = random_k1k1(gen, tower);
                   return expect_equal(nabla1(tower, params, x), nabla1_definitional(tower, params, x),
                                       graph_label(tower.graph()) + " nabla1");
                 }});

  out.push_back({"nabla2_formula_matches_definition", [](Generator& gen, TowerCache& cache) -> Failure {
                   const auto& tower = cache.get(gen.graph(gen.size()));
                   const auto params = gen.params(tower.graph().n_points());
                   const Element x = random_k1k1(gen, tower);
                   return expect_equal(nabla2(tower, params, x), nabla2_definitional(tower, params, x),
                                       graph_label(tower.graph()) + " nabla2");
                 }});

  out.push_back({"nabla1_equals_p12_nabla2_plus_torsion", [](Generator& gen, TowerCache& cache) -> Failure {
                   const auto& tower = cache.get(gen.graph(gen.size()));
                   const auto params = gen.params(tower.graph().n_points());
                   const Element x = random_k1k1(gen, tower);
                   Element rhs = apply_p12(tower, nabla2(tower, params, x));
                   for (const auto& [p, c] : x.terms()) {
                     rhs.add_scaled(multiply(torsion_nabla(tower, params, p[0], p[1]), edge_form(p[1], p[2])), c);
                   }
                   return expect_equal(nabla1(tower, params, x), rhs, graph_label(tower.graph()) + " nabla1 split");
                 }});

  return out;
}

}  // namespace

std::vector<PropertyOutcome> run_property_suite(const PropertyConfig& config) {
  Generator gen(config.seed, config.sizes);
  TowerCache cache;
  std::vector<PropertyOutcome> outcomes;
  for (const auto& property : properties()) {
    PropertyOutcome outcome{property.name, 0, 0, {}};
    for (int k = 0; k < config.cases; ++k) {
      ++outcome.cases;
      if (auto failure = property.check(gen, cache)) {
        if (outcome.failures++ == 0) outcome.first_failure = *failure;
      }
    }
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

}  // namespace graphcalc
