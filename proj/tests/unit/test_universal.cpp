#include <doctest.h>

#include "graphcalc/errors.hpp"
#include "graphcalc/universal.hpp"

using namespace graphcalc;

namespace {
Element m(std::vector<Vertex> v) { return Element::monomial(v); }
}

TEST_CASE("path monomials") {
  CHECK_THROWS(Path({1, 1, 2}));
  CHECK_FALSE(Path::make({2, 3, 3}).has_value());
  CHECK(Element::monomial({1, 2, 2}).is_zero());
  CHECK(Element::monomial({1, 2, 2}).degree() == 2);
  CHECK(to_string(m({1, 2, 1})) == "e_121");
  CHECK(Path({1, 2}).concat(Path({2, 3})) == Path({1, 2, 3}));
  CHECK_FALSE(Path({1, 2}).concat(Path({1, 3})).has_value());
  CHECK(Path({1, 2}) < Path({1, 3}));
}

TEST_CASE("context rejects a single point") {
  CHECK_THROWS_AS(UniversalContext(1), InvalidInput);
  CHECK_NOTHROW(UniversalContext(2));
}

TEST_CASE("omega basis enumeration") {
  const UniversalContext c3(3);
  const auto b = omega_basis(c3, 1);
  CHECK(b.size() == 6);
  CHECK(b.front() == Path({1, 2}));
  CHECK(b.back() == Path({3, 2}));
  CHECK(omega_basis(UniversalContext(2), 0) == std::vector<Path>{Path({1}), Path({2})});
  CHECK(omega_basis(UniversalContext(4), 2).size() == 36);
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k <= 3; ++k) {
      CHECK(omega_basis(UniversalContext(n), k).size() == omega_dimension(n, k));
    }
  }
}

TEST_CASE("differential") {
  const UniversalContext ctx(3);
  CHECK(differential(ctx, m({1, 2})) == m({3, 1, 2}) - m({1, 3, 2}) + m({1, 2, 3}) + m({1, 2, 1}) + m({2, 1, 2}));
  CHECK(differential(ctx, unit(ctx)).is_zero());
  CHECK(differential(ctx, m({1})) == m({2, 1}) + m({3, 1}) - m({1, 2}) - m({1, 3}));
  for (int k = 0; k <= 2; ++k) {
    for (const Path& p : omega_basis(ctx, k)) {
      CHECK(differential(ctx, differential(ctx, Element::monomial(p))).is_zero());
    }
  }
}

TEST_CASE("multiplication is concatenation") {
  CHECK(multiply(m({1, 2}), m({2, 3})) == m({1, 2, 3}));
  CHECK(multiply(m({1, 2}), m({1, 3})).is_zero());
  CHECK(multiply(m({1, 2}) + m({1, 3}), m({3, 2})) == m({1, 3, 2}));
  CHECK(multiply(m({1, 2}), m({2})) == m({1, 2}));
}

TEST_CASE("module actions filter by endpoint") {
  const UniversalContext ctx(3);
  CHECK(module_action(Side::left, 2, m({1, 2, 3}) + m({2, 1, 3})) == m({2, 1, 3}));
  CHECK(module_action(Side::right, 3, m({1, 2, 3})) == m({1, 2, 3}));
  const Element d12 = differential(ctx, m({1, 2}));
  CHECK(module_action(Side::right, 2, module_action(Side::left, 1, d12)) == d12.block(1, 2));
  const std::vector<Rational> values = {1, 2, 3};
  CHECK(function_element(values) == m({1}) + m({2}) * GammaPoly(2) + m({3}) * GammaPoly(3));
}
