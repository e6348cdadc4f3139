#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gtb/errors.hpp"
#include "gtb/exact.hpp"

// Y(2) with indices -n, n (stored as -1, +1), tensor products of evaluation
// modules L(α,β) of gl_2, and the twisted Yangians Y^-(2) (symplectic,
// θ_ab = sgn a · sgn b) and Y^+(2) (orthogonal, θ = 1, with W(δ)).
namespace gtb {

// S(α,β) = {β, β+1, ..., α-1}; α - β ∈ Z_+
struct HWString {
  Rat alpha, beta;
  std::size_t length() const;
  bool empty() const { return alpha == beta; }
  bool contains(const Rat& x) const;
  std::vector<Rat> elements() const;
  HWString reflected() const { return {-beta, -alpha}; }  // S(-β,-α)
};

bool disjoint(const HWString& a, const HWString& b);
bool string_general_position(const HWString& a, const HWString& b);
bool irreducible_Y2(const std::vector<HWString>& f);
bool irreducible_Yminus(const std::vector<HWString>& f);
bool irreducible_Yplus(const std::vector<HWString>& f, const Rat& delta);

using Gamma = std::vector<Rat>;

struct YTensorModule {
  std::vector<HWString> factors;
  std::size_t dim = 0;
  std::map<std::pair<int, int>, OpPoly> T;  // T_ab(u) = u^k t_ab(u), keys (±1, ±1)
  const OpPoly& t(int a, int b) const { return T.at({a, b}); }
  int k() const { return static_cast<int>(factors.size()); }
  Vec eta() const { return unit_vec(dim, 0); }
};

// Throws std::invalid_argument if some α - β is not in Z_+.
YTensorModule build_tensor_module(const std::vector<HWString>& factors);

// T_{-n,n}(u) η = 0 and the two eigenvalue displays on η.
bool highest_vector_ok(const YTensorModule& L);
// (u-v)[T_ab(u),T_cd(v)] = T_cb(u)T_ad(v) - T_cb(v)T_ad(u) for all a,b,c,d at each pair
bool rtt_ok(const YTensorModule& L, const std::vector<std::pair<Rat, Rat>>& points);

// all γ with α_i - γ_i, γ_i - β_i ∈ Z_+, in lexicographic order
std::vector<Gamma> gamma_tuples(const std::vector<HWString>& f);

// η_γ = Π_i T_{n,-n}(-γ_i+1)...T_{n,-n}(-β_i) η. Refuses unless the module
// is irreducible with pairwise disjoint strings.
std::map<Gamma, Vec> eta_basis(const YTensorModule& L);

// The four action displays on every η_γ; returns false on the first mismatch.
struct ActtReport {
  bool tnn = true, raise = true, lower = true, tmm = true;
  bool all() const { return tnn && raise && lower && tmm; }
};
ActtReport actt_check(const YTensorModule& L, const std::map<Gamma, Vec>& basis);

// form 1: T_{-n,-n}(u+1)T_nn(u) - T_{n,-n}(u+1)T_{-n,n}(u); form 2: the other ordering
OpPoly quantum_det(const YTensorModule& L, int form = 1);
// both forms agree, act as (u+α_1+1)...(u+β_k), commute with all T coefficients
bool qdet_ok(const YTensorModule& L);

// sign = -1: Y^-, S_{n,-n}(u) = (-1)^k/u (T_{n,-n}(u)T_nn(-u) - T_{n,-n}(-u)T_nn(u))
// sign = +1: Y^+ on L ⊗ W(δ) ≅ L, with weights (u-δ), (u+δ)
OpPoly twisted_snn(const YTensorModule& L, int sign, const Rat& delta = 0);
// u^{2k}(u+1/2) s_ab(u) as a polynomial operator on L
OpPoly twisted_sab(const YTensorModule& L, int sign, const Rat& delta, int a, int b);
// S_{n,-n}(γ_i) η_γ = 2 [(-δ-γ_i)] Π_{a≠i} (-γ_i-γ_a) η_{γ+δ_i}
bool snn_action_ok(const YTensorModule& L, const std::map<Gamma, Vec>& basis, int sign, const Rat& delta = 0);
// symmetry relation of Y^± for the s_ab(u) of L, as polynomial identities
bool twisted_symmetry_ok(const YTensorModule& L, int sign, const Rat& delta = 0);
bool twisted_commute_ok(const YTensorModule& L, int sign, const Rat& delta = 0);

// ξ_γ = Π_i S_{n,-n}(γ_i-1)...S_{n,-n}(β_i) η. Refuses unless the strings are
// pairwise disjoint, disjoint from the reflected strings (i < j) and the
// module is irreducible.
std::map<Gamma, Vec> twisted_basis(const YTensorModule& L, int sign, const Rat& delta = 0);

// Dimension of the unital associative algebra generated by the matrices.
std::size_t generated_algebra_dim(const std::vector<SparseMat>& gens, std::size_t dim);
// irreducible iff that algebra is all of End(L)
bool brute_irreducible_Y2(const YTensorModule& L);
bool brute_irreducible_twisted(const YTensorModule& L, int sign, const Rat& delta = 0);

// Matrix of X restricted to span(W) in the coordinates of W; throws
// std::domain_error if span(W) is not invariant.
OpPoly in_basis(const OpPoly& X, const std::vector<Vec>& W);

}  // namespace gtb
