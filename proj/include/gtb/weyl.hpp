#pragma once

#include <stdexcept>

#include "gtb/exact.hpp"
#include "gtb/weights.hpp"

// Weyl dimension formula from root data. Deliberately independent of the
// pattern code: every dimension claim elsewhere is checked against this.
namespace gtb {

enum class Series { A, B, C, D };

char series_letter(Series s);

// Standard convention: a_1 >= a_2 >= ... (doubled entries), with
//   A: any weakly decreasing integer tuple (gl_n)
//   B: a_n >= 0, all integers or all half-integers
//   C: a_n >= 0, integers
//   D: a_{n-1} >= |a_n|, all integers or all half-integers
// The empty weight (rank 0) has dimension 1.
bool weyl_dominant(Series s, const DWeight& a);
Rat weyl_dim(Series s, const DWeight& a);  // throws std::invalid_argument if not dominant

// Same, for weights written in the non-positive convention
// (λ_1 >= ... with λ_1 <= 0, index set -n..n): a_i = -λ_{n+1-i}.
Rat weyl_dim_nonpositive(Series s, const DWeight& lambda);

}  // namespace gtb
