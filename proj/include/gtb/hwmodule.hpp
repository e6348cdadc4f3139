#pragma once

#include <cstddef>
#include <vector>

#include "gtb/exact.hpp"

// Finite-dimensional irreducible highest weight modules of a semisimple Lie
// algebra given by defining matrices. The module is the quotient of the
// Verma module by the radical of the contravariant form; weight spaces are
// spanned by f_j w with w running over the basis one level up.
namespace gtb {

struct HWModule {
  std::size_t dim = 0;
  std::vector<Vec> weight;  // eigenvalues of the H_i
  std::vector<int> level;   // number of simple lowerings from the highest vector
  SparseMat gram;           // <b_i, b_j>, <ξ,ξ> = 1, block diagonal by weight
  std::vector<SparseMat> e, f;
};

// H: Cartan basis, e: simple raising, f = e^T: simple lowering (all N x N).
// lambda: eigenvalues of the H_i on the highest vector. The caller must pass
// a dominant weight; otherwise construction never terminates before max_dim
// and Refusal is thrown.
HWModule build_hw_module(const std::vector<SparseMat>& H, const std::vector<SparseMat>& e,
                         const std::vector<SparseMat>& f, const Vec& lambda, std::size_t max_dim);

// Linear span of defining matrices closed under commutators, carried along
// with their images in a module.
class LieImage {
 public:
  LieImage(std::vector<SparseMat> defining, std::vector<SparseMat> image);
  // image of any element of the generated Lie algebra; throws std::domain_error otherwise
  SparseMat represent(const SparseMat& x) const;
  std::size_t algebra_dim() const { return def_.size(); }

 private:
  std::vector<SparseMat> def_, img_;
  std::vector<Vec> flat_;
};

Vec flatten(const SparseMat& m);

}  // namespace gtb
