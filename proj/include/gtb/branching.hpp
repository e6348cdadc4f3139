#pragma once

#include <map>
#include <vector>

#include "gtb/exact.hpp"
#include "gtb/weights.hpp"
#include "gtb/weyl.hpp"

namespace gtb {

// gl_n: all μ interlacing λ (doubled entries), descending lex order.
std::vector<DWeight> branch_A(const DWeight& lambda);

// Restriction g_n -> g_{n-1} for the B, C, D series in the non-positive
// convention. tuples holds ν' (B: (ν'_1, ν_2..ν_n)), ν (C: n entries),
// ν (D: n-1 entries); for B, sigma/nu hold the re-encoded (σ, ν_1, ..., ν_n).
struct BranchSpec {
  Series series = Series::C;
  DWeight lambda, mu;
  std::vector<DWeight> tuples;
  std::vector<int> sigma;
  std::vector<DWeight> nu;
  std::size_t multiplicity() const { return tuples.size(); }
};

BranchSpec branch_BCD(Series s, const DWeight& lambda, const DWeight& mu);

// All g_{n-1} highest weights μ with c(μ) > 0.
std::vector<BranchSpec> branch_children(Series s, const DWeight& lambda);

// C series: ∏ (α_i - β_i + 1) with α_1 = -1/2, α_i = min(λ_{i-1},μ_{i-1}) - i + 1/2,
// β_i = max(λ_i, μ_i) - i + 1/2 (μ_n = -∞ is dropped, β_n = λ_n - n + 1/2).
Rat c_multiplicity_formula(const DWeight& lambda, const DWeight& mu);

// Semistandard tableaux of shape λ (a partition, plain integers) in 1..n.
std::vector<std::vector<std::vector<int>>> tableaux(const std::vector<int>& shape, int n);

// Exponent vectors of the monomials of s_λ(x_1..x_n) with multiplicities.
std::map<std::vector<int>, long> schur_poly(const std::vector<int>& shape, int n);
Rat schur(const std::vector<int>& shape, const Vec& x);

}  // namespace gtb
