#include "graphcalc/rational.hpp"

#include <cctype>

#include "graphcalc/errors.hpp"

namespace graphcalc {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
    throw InvalidInput("not a rational number: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rational value;
  value.get_num() = mpz_class(n, 10);
  if (den.empty()) {
    value.get_den() = 1;
  } else {
    std::string d(den);
    if (d.front() == '+') d.erase(0, 1);
    value.get_den() = mpz_class(d, 10);
    if (value.get_den() == 0) {
      throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    }
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace graphcalc
