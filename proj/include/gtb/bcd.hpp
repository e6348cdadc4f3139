#pragma once

#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "gtb/branching.hpp"
#include "gtb/errors.hpp"
#include "gtb/exact.hpp"
#include "gtb/patterns.hpp"
#include "gtb/weyl.hpp"

namespace gtb {

// S3: index set -n..n (0 only for B), F_ij = E_ij - θ_ij E_{-j,-i},
//     non-positive highest weights.
// S4: orthogonal only, index set 1..N, i' = N-i+1, F_ij = E_ij - E_{j'i'},
//     the usual dominant weights.
enum class Convention { S3, S4 };

struct ClassicalAlgebra {
  Series series = Series::C;
  int n = 1;
  Convention conv = Convention::S3;

  int N() const { return series == Series::B ? 2 * n + 1 : 2 * n; }
  std::vector<int> indices() const;
  bool has_index(int a) const;
  std::size_t pos(int a) const;   // row of index a in the defining matrices
  int theta(int a, int b) const;  // S3 only
  int prime(int a) const;         // S3: -a, S4: N-a+1
  Rat rho(int i) const;           // S3, 1 <= i <= n
  SparseMat F(int a, int b) const;
  std::size_t lie_dim() const;
};

struct DeskCaps {
  int max_rank = 3;
  std::size_t max_dim = 600;
};

struct BCDIrrep {
  ClassicalAlgebra alg;
  DWeight lambda;            // doubled, in the convention of alg
  std::vector<Vec> weight;   // F_11..F_nn eigenvalues of each basis vector
  std::vector<int> level;
  SparseMat gram;            // contravariant form, <ξ,ξ> = 1
  std::map<std::pair<int, int>, SparseMat> F;

  std::size_t dim() const { return weight.size(); }
  const SparseMat& gen(int a, int b) const { return F.at({a, b}); }
  Rat form(const Vec& u, const Vec& v) const;
};

// Convention bridge. S3: non-positive weights, indices -n..n; S4: positive
// weights, indices 1..N. a_i = -λ_{n+1-i}; S4 index p <-> S3 index p-n-1 (p <= n),
// 0 (B, p = n+1), and p = N-q+1 (q <= n) <-> n+1-q.
DWeight weight_s3_to_s4(const DWeight& lambda);
DWeight weight_s4_to_s3(const DWeight& a);
int index_s4_to_s3(Series s, int n, int p);
int index_s3_to_s4(Series s, int n, int a);

// Throws NonDominantWeight, Refusal (desk caps), std::invalid_argument.
BCDIrrep build_bcd_irrep(const ClassicalAlgebra& alg, const DWeight& lambda, const DeskCaps& caps = {});

// [F_ab, F_cd] in the module equals the image of the defining commutator.
bool bcd_commutators_ok(const BCDIrrep& rep);
bool bcd_highest_vector_ok(const BCDIrrep& rep);
bool bcd_adjoint_ok(const BCDIrrep& rep);  // <F_ab u, v> = <u, F_ba v>

// ---------------------------------------------------------------------------
// Operators with rational coefficients in the Cartan elements written on the
// right: Σ M_t · r_t(F_11, ..., F_nn). On a weight basis the right factors act
// column by column. Polynomial dependence on a spectral parameter u is kept
// as a coefficient list (lowest power first).

using Poly = std::vector<Rat>;
using PolyVec = std::vector<Vec>;  // Σ_k u^k v_k

struct RightTerm {
  SparseMat m;
  std::vector<bool> live;  // columns where m is nonzero
  std::function<std::optional<Rat>(const Vec&)> right;  // nullopt: denominator vanishes
};

class ROp {
 public:
  ROp() = default;
  explicit ROp(std::size_t dim) : dim_(dim) {}
  void add(SparseMat m, std::function<std::optional<Rat>(const Vec&)> right);
  // throws SingularDenominator if v meets a singular column of a live term
  Vec apply(const std::vector<Vec>& weights, const Vec& v) const;
  // matrix with singular columns zeroed and flagged in *singular
  SparseMat realized(const std::vector<Vec>& weights, std::vector<bool>* singular = nullptr) const;
  ROp scaled(const Rat& c) const;
  std::size_t dim() const { return dim_; }
  bool empty() const { return terms_.empty(); }

 private:
  std::size_t dim_ = 0;
  std::vector<RightTerm> terms_;
};

enum class ZKindBCD { Zia, Zai, Zkk, SPrimeB, SD };
struct LoweringOpBCD {
  ZKindBCD kind = ZKindBCD::Zia;
  int level = 0;  // k of the pair g_{k-1} ⊂ g_k
  int i = 0, a = 0;
  SparseMat realized;
  std::vector<bool> singular;
};

// Lowering operators and Z_ab(u) of a fixed S3 module, cached per (level, indices).
class Mickelsson {
 public:
  explicit Mickelsson(const BCDIrrep& rep);
  const BCDIrrep& rep() const { return rep_; }

  // index set {-k+1..k-1} of g_{k-1}, 0 only for B
  std::vector<int> inner(int k) const;
  Rat f(int j, const Vec& w) const;  // f_j at weight w
  Rat g(int j, const Vec& w) const { return f(j, w) + Rat(1, 2); }

  // z_ia (|i| < k, |a| = k), z_ai (|a| = k, |i| < k) and z_{k,-k}
  const ROp& z(int k, int x, int y);
  LoweringOpBCD lowering(int k, int x, int y);
  Vec apply_z(int k, int x, int y, const Vec& v);

  // Z_{k,-k}(u) v through the interpolation formula (g's taken at the input).
  PolyVec interp(int k, const Vec& v);
  // Z_ab(u) v for a, b ∈ {-k, k} through the explicit Z_ab formula.
  // D: the result is (2u+1) Z_ab(u) v.
  PolyVec zab_raw(int k, int a, int b, const Vec& v);
  // D divided exactly by 2u+1 (throws std::logic_error if not divisible,
  // which happens for a = b; Z_{k,-k} is always a polynomial)
  PolyVec zab(int k, int a, int b, const Vec& v);
  // Z_{k,-k}(u0) v: interpolation where regular, otherwise the Z_ab formula
  Vec Z_at(int k, const Rat& u0, const Vec& v);

  // g_{k-1}-highest vectors (columns) in the whole module
  const std::vector<Vec>& highest(int k);
  std::vector<const SparseMat*> raising(int k) const;  // simple raising operators of g_{k-1}
  Vec weight_of(const Vec& v) const;                    // weight of the first support column
  // those with F_ii = μ_i, i < k
  std::vector<Vec> highest_mu(int k, const DWeight& mu);

 private:
  const BCDIrrep& rep_;
  std::map<std::tuple<int, int, int>, ROp> cache_;
  std::map<int, std::vector<Vec>> highest_;
};

// Null space of stacked operators, computed separately on each group of basis
// vectors sharing the first m weight coordinates (the operators must be
// homogeneous for that grading).
std::vector<Vec> joint_kernel(const std::vector<const SparseMat*>& ops, const std::vector<Vec>& weights,
                              std::size_t m);

PolyVec poly_apply(const SparseMat& m, const PolyVec& p);
Vec poly_eval(const PolyVec& p, const Rat& u);
Vec poly_coeff(const PolyVec& p, std::size_t k, std::size_t dim);
int poly_degree(const PolyVec& p);

// z_ia (a = ±n, |i| < n) as a matrix on the module, singular columns zeroed
SparseMat lowering_zia(Mickelsson& M, int i, int a);
// Z_{n,-n}(u) on V(λ)^+ in the coordinates of M.highest(n)
OpPoly z_interp_poly(Mickelsson& M);
SparseMat z_interp(Mickelsson& M, const Rat& u0);

// z_ia weight shifts and commutativity on V(λ)^+ (level n).
bool zia_weight_shift_ok(Mickelsson& M);
bool zia_commute_ok(Mickelsson& M);
// Z_{n,-n}(g_i) = z_ni z_{i,-n} on every V(λ)^+ weight vector where regular;
// returns the number of (i, column) pairs compared.
std::size_t interp_node_check(Mickelsson& M);

// ξ_ν of the multiplicity space V(λ)^+_μ, one per ν of the branching rule,
// in the order of branch_BCD(...).tuples.
struct MultiplicityBasis {
  BranchSpec spec;
  std::vector<Vec> vectors;
};
MultiplicityBasis multiplicity_basis(Mickelsson& M, const DWeight& mu);

// ξ_μ = Π z_ni^{max-μ_i} z_{i,-n}^{max-λ_i} ξ (and z_n0 ξ_μ for B).
Vec xi_mu_bcd(Mickelsson& M, const DWeight& mu);

// ξ_Λ for every pattern, in enumerate() order.
struct GTBasisBCD {
  std::vector<Pattern> patterns;
  std::vector<Vec> vectors;
};
GTBasisBCD gt_basis_bcd(Mickelsson& M);

// C series: the F_nn eigenvalue and F_{n,-n} displays on the basis
// ξ_ν = Π Z(γ_i - 1)...Z(β_i) ξ_μ, for one μ. Throws std::logic_error with
// a description on the first mismatch.
bool fnn_action_check(Mickelsson& M, const DWeight& mu);

// Z_ab(u) on V(λ)^+_μ in a fixed basis of that space (columns of `basis`).
// D: Z_ab(u) is rational in general; the operators stored are (2u+1) Z_ab(u).
struct ZabOperators {
  DWeight mu;
  std::vector<Vec> basis;
  std::map<std::pair<int, int>, OpPoly> Z;  // keys (±1, ±1) for (±n, ±n)
  Rat prefactor_const;    // -1, 1, -2 (B, C, D)
  int prefactor_upow;     // -2n, -2n, -2n+2
  bool prefactor_half;    // C: extra factor (u + 1/2)
};
ZabOperators zab_operators(Mickelsson& M, const DWeight& mu);

// Y± parameters of V(λ)^+_μ: α_i, β_i, and for B/D the W(δ) parameter(s).
struct TwistedParams {
  std::vector<std::pair<Rat, Rat>> factors;
  std::vector<Rat> deltas;  // B: δ for U and U' (U' variant in factors2), D: -α_0
  std::vector<std::pair<Rat, Rat>> factors2;  // B: factors of U'
};
TwistedParams twisted_params(Series s, const DWeight& lambda, const DWeight& mu);

// Symmetry relation of the twisted Yangian for the images s_ab(u) at sample
// points (cleared of denominators).
bool zab_symmetry_ok(const ZabOperators& Z, Series s, int n);
// [Z_{n,-n}(u), Z_{n,-n}(v)] = 0 at sample points.
bool zab_commute_ok(const ZabOperators& Z);
// Z_{n,-n}(u) from the Z_ab formula equals the interpolation polynomial on V(λ)^+_μ.
bool zab_interp_ok(Mickelsson& M, const ZabOperators& Z);
// The Y± module V(λ)^+_μ matches the predicted tensor product: isomorphism
// built on the twisted bases, all four Z_ab compared as polynomials.
bool zab_yangian_ok(Mickelsson& M, const ZabOperators& Z);

// ---------------------------------------------------------------------------
// Orthogonal GT bases (S4 convention, chain o_N ⊃ o_{N-1} ⊃ ... ⊃ o_2).
struct OrthGTBasis {
  std::vector<Pattern> patterns;  // B4 or D4
  std::vector<Vec> vectors;
};
OrthGTBasis orth_gt_basis(const BCDIrrep& rep);
// Gram matrix of the basis is diagonal with positive entries.
bool orth_gram_ok(const BCDIrrep& rep, const OrthGTBasis& b);

// JSON-friendly label of a generator: "F_i_j"
std::string bcd_generator_label(int a, int b);

}  // namespace gtb
