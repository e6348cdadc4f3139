#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gtb/exact.hpp"
#include "gtb/patterns.hpp"

namespace gtb {

// L(λ) for gl_n in the Gelfand-Tsetlin basis. Indices i, j are 1-based.
struct GlnIrrep {
  int n = 0;
  DWeight lambda;                 // doubled
  std::vector<Pattern> basis;     // descending order, basis[0] = highest vector
  std::map<std::pair<int, int>, SparseMat> E;  // all E_ij; |i-j| <= 1 from the formulas, rest by commutators
  Vec normsq;                     // <ξ_Λ, ξ_Λ>

  std::size_t dim() const { return basis.size(); }
  // npos if the array is not a pattern of this module
  std::size_t index_of(const Pattern& p) const;
  const SparseMat& gen(int i, int j) const { return E.at({i, j}); }

  std::map<std::vector<DWeight>, std::size_t> lookup;
};

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

GlnIrrep build_irrep(int n, const DWeight& lambda);  // throws NonDominantWeight
SparseMat gen_matrix(const GlnIrrep& rep, int i, int j);
Vec norms(const GlnIrrep& rep);

// h_i = E_ii - i + 1
SparseMat h_matrix(const GlnIrrep& rep, int i);
// l_ki = λ_ki - i + 1 of a pattern
Rat l_entry(const Pattern& p, int k, int i);

// z_{im} (raising) and z_{mi} (lowering) for the pair gl_{m-1} ⊂ gl_m, realized on rep.
enum class ZKind { Raising, Lowering };
struct LoweringOpA {
  ZKind kind = ZKind::Lowering;
  int i = 0, m = 0;
  SparseMat realized;
};
LoweringOpA lowering_operator(const GlnIrrep& rep, int i, ZKind kind, int m = 0);  // m = 0 means m = n

// ξ_Λ from the ordered product of lowering operators applied to ξ, one per pattern.
std::vector<Vec> basis_via_lowering(const GlnIrrep& rep);

// Vectors of L(λ)^+ (killed by E_ij, i < j < n) as columns of a basis.
std::vector<Vec> gl_highest_space(const GlnIrrep& rep);

// ξ_μ = z_{n1}^{λ1-μ1} ... z_{n,n-1}^{λ_{n-1}-μ_{n-1}} ξ
Vec xi_mu(const GlnIrrep& rep, const DWeight& mu);
// Coefficient c in z_in ξ_μ = c ξ_{μ+δ_i}; throws std::logic_error if it differs
// from -(m_i - l_1)...(m_i - l_n), std::invalid_argument if μ is not between.
Rat lemma_aximu_check(const GlnIrrep& rep, const DWeight& mu, int i);

// E(u)^{a_1..a_s}_{b_1..b_s}; form 1 or 2 is the column- or row-ordered expansion.
OpPoly quantum_minor(const GlnIrrep& rep, const std::vector<int>& a, const std::vector<int>& b, int form = 1);
OpPoly capelli_det(const GlnIrrep& rep, int m);
OpPoly tau_lower(const GlnIrrep& rep, int i);  // τ_ni(u)
OpPoly tau_raise(const GlnIrrep& rep, int i);  // τ_in(u)

// τ_ni(-h_i-i+1) = z_ni and τ_in(-h_i) = z_in on L(λ)^+.
bool tau_equals_z_check(const GlnIrrep& rep, int i);
// C(-h_i+1) = (-1)^{n-1} z_in z_ni and C(-h_i) = (-1)^{n-1} z_ni z_in on L(λ)^+.
bool capelli_interpolation_check(const GlnIrrep& rep, int i);

// A_m, B_m, C_m evaluated at a scalar.
enum class Drinfeld { A, B, C };
OpPoly drinfeld_poly(const GlnIrrep& rep, int m, Drinfeld which);
SparseMat drinfeld_action(const GlnIrrep& rep, int m, Drinfeld which, const Rat& u0);
// Checks the three closed forms column by column for level m; B, C need m < n.
bool drinfeld_check(const GlnIrrep& rep, int m);

// κ_Λ from ordered products of C_m evaluations; throws std::logic_error if some
// κ_Λ is not a nonzero multiple of ξ_Λ. Returns the vectors and the constants.
std::vector<Vec> kappa_basis(const GlnIrrep& rep, Vec* constants = nullptr);

// α_mi(Λ): elementary symmetric functions of l_m1..l_mm; result[m-1][i-1].
std::vector<std::vector<Rat>> gt_eigenvalues(const Pattern& p);
// coefficients of A_m(u) act diagonally with the α_mi
bool gt_eigen_check(const GlnIrrep& rep);

struct CharIdentityReport {
  bool full_product_zero = false;
  bool reduced_product_zero = false;  // product over the nonzero summands only
  bool idempotent = false;
  bool spectral = false;               // Σ α_r P[r] = E
  bool resolution = false;             // Σ P[r] = 1
  bool ranks = false;                  // rank P[r] = dim L(λ-δ_r)
  bool ok() const { return full_product_zero && reduced_product_zero && idempotent && spectral && resolution && ranks; }
};
CharIdentityReport characteristic_identity_check(const GlnIrrep& rep);

}  // namespace gtb
