#pragma once

#include <vector>

namespace gtb {

// Highest weights and pattern entries are stored doubled (2*λ_i) so that
// half-integers stay in integer arithmetic.
using Doubled = long;
using DWeight = std::vector<Doubled>;

}  // namespace gtb
