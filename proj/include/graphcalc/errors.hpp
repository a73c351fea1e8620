#pragma once

#include <stdexcept>
#include <string>

namespace graphcalc {

// Malformed user input (graph spec, γ syntax, out-of-range vertices).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An echelon computation was handed a γ-dependent coefficient.
class NonConstantCoefficient : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Connection requested on a degenerate index pair (i == j).
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class EdgeNotInGraph : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DegenerateMetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two evaluation routes that must agree did not. Always an engine bug.
class CrossCheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace graphcalc
