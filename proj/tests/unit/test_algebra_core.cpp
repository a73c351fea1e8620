#include <doctest.h>

#include "graphcalc/echelon.hpp"
#include "graphcalc/errors.hpp"
#include "graphcalc/gamma_poly.hpp"
#include "graphcalc/rational.hpp"

using namespace graphcalc;

namespace {
const GammaPoly g = GammaPoly::gamma();
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
  CHECK_THROWS_AS(parse_rational(""), InvalidInput);
  const Rational a(7, 3);
  CHECK(a * (1 / a) == 1);
}

TEST_CASE("gamma polynomial arithmetic") {
  CHECK(g * (GammaPoly(2) - g) == GammaPoly::from_coeffs({0, 2, -1}));
  CHECK(GammaPoly() + g == g);
  CHECK((GammaPoly(1) - g) * (GammaPoly(1) + g) == GammaPoly::from_coeffs({1, 0, -1}));
  CHECK((g - g).is_zero());
  CHECK((g - g).degree() == -1);
  CHECK(GammaPoly::from_coeffs({1, 0, 0}).degree() == 0);
  CHECK(GammaPoly::from_coeffs({Rational(2, 4)}) == GammaPoly(Rational(1, 2)));
}

TEST_CASE("gamma polynomial evaluation") {
  const GammaPoly p = GammaPoly(2) * g - g * g;
  CHECK(p.evaluate(1) == 1);
  CHECK(p.evaluate(0) == 0);
  CHECK(p.evaluate(2) == 0);
  CHECK(p.evaluate(Rational(1, 2)) == Rational(3, 4));
}

TEST_CASE("gamma polynomial rendering") {
  CHECK(to_string(GammaPoly()) == "0");
  CHECK(to_string(g) == "g");
  CHECK(to_string(GammaPoly(2) * g - g * g) == "2*g - g^2");
  CHECK(to_string(GammaPoly(1) - g) == "1 - g");
  CHECK(to_string(-g) == "-g");
}

TEST_CASE("echelonize picks lexicographic pivots") {
  const Element a = Element::monomial({1, 2, 4}) + Element::monomial({1, 3, 4});
  auto r = echelonize(std::vector<Element>{a});
  REQUIRE(r.pivot_monomials.size() == 1);
  CHECK(r.pivot_monomials[0] == Path{1, 2, 4});

  const Element b = Element::monomial({1, 2, 1});
  r = echelonize(std::vector<Element>{b, b * GammaPoly(2)});
  CHECK(r.pivot_basis.size() == 1);

  const Element c = Element::monomial({1, 2, 3}) - Element::monomial({1, 4, 3});
  r = echelonize(std::vector<Element>{c, Element::monomial({1, 4, 3})});
  CHECK(r.pivot_monomials == std::vector<Path>{Path{1, 2, 3}, Path{1, 4, 3}});
  CHECK(r.pivot_basis[0] == Element::monomial({1, 2, 3}));
}

TEST_CASE("echelon basis is canonical and idempotent") {
  const std::vector<Element> rows = {
      Element::monomial({1, 2, 3}) + Element::monomial({1, 3, 2}) * GammaPoly(2),
      Element::monomial({1, 3, 2}) - Element::monomial({2, 1, 2}),
      Element::monomial({2, 1, 2}) + Element::monomial({1, 2, 3}),
  };
  EchelonBasis forward(2);
  for (const auto& x : rows) forward.insert(x);
  EchelonBasis backward(2);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) backward.insert(*it);
  CHECK(forward == backward);

  EchelonBasis again(2);
  for (const auto& x : forward.rows()) again.insert(x);
  CHECK(again == forward);

  const std::size_t rank = forward.rank();
  CHECK_FALSE(forward.insert(rows[0] * GammaPoly(Rational(3, 2)) - rows[2]));
  CHECK(forward.rank() == rank);
}

TEST_CASE("membership and reduction") {
  EchelonBasis basis(2);
  basis.insert(Element::monomial({1, 2, 4}) + Element::monomial({1, 3, 4}));
  CHECK(in_span(Element(2), basis));
  CHECK(in_span(Element::monomial({1, 2, 4}) * GammaPoly(5) + Element::monomial({1, 3, 4}) * GammaPoly(5), basis));
  CHECK_FALSE(in_span(Element::monomial({1, 2, 3}), basis));
  CHECK(basis.reduce(Element::monomial({1, 2, 4}, g)) == Element::monomial({1, 3, 4}, -g));
  CHECK_THROWS_AS(basis.insert(Element::monomial({1, 2, 3}, g)), NonConstantCoefficient);
}
