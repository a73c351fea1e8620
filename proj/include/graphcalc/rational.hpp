#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace graphcalc {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws InvalidInput on anything else or q == 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace graphcalc
