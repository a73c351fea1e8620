#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace graphcalc {

struct PropertyConfig {
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  int cases = 100;
  /// Point counts sampled for random graphs and contexts.
  std::vector<int> sizes = {2, 3, 4};
};

struct PropertyOutcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  /// Description of the first failing case, empty when all passed.
  std::string first_failure;
};

/// Randomized identity checks over random digraphs, elements and connection
/// tables: d² = 0, δ² = 0, graded Leibniz for d and δ, associativity of the
/// product and of P, kernel closure, bimodule splitting, the φ = P(φ ⊗ φ)
/// factorization, right A-linearity of T and T_∇, Leibniz rules of D and ∇,
/// A-bilinearity of Curv_1/Curv_2, and the formula/definition agreement of
/// ∇_1 and ∇_2.
std::vector<PropertyOutcome> run_property_suite(const PropertyConfig& config = {});

}  // namespace graphcalc
