#pragma once

#include <stdexcept>
#include <string>

namespace gtb {

// A computation declined on purpose: a desk-scale cap was hit or a theorem
// hypothesis fails. The CLI maps this to exit code 3.
struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A rational right-denominator vanished on a vector the operator was applied to.
struct SingularDenominator : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace gtb
