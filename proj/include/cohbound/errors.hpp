#pragma once

#include <stdexcept>
#include <string>

namespace cohbound {

// Malformed or out-of-range caller input (bad dimensions, non-bijective
// permutations, unnormalized states, unparsable files).
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of a scalar function.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Requested object exceeds the configured size ceiling.
struct size_error : std::length_error {
  using std::length_error::length_error;
};

// An iterative routine failed to converge.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cohbound
