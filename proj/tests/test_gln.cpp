#include "doctest.h"
#include "gtb/branching.hpp"
#include "gtb/gln.hpp"

#include <set>

using namespace gtb;

namespace {

DWeight dbl(std::vector<long> v) {
  for (auto& x : v) x *= 2;
  return v;
}

bool commutators_hold(const GlnIrrep& rep) {
  const int n = rep.n;
  const std::size_t d = rep.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          SparseMat rhs(d, d);
          if (j == k) rhs += rep.gen(i, l);
          if (l == i) rhs -= rep.gen(k, j);
          if (!(commutator(rep.gen(i, j), rep.gen(k, l)) == rhs)) return false;
        }
  return true;
}

bool adjoint(const GlnIrrep& rep) {
  for (int i = 1; i <= rep.n; ++i)
    for (int j = 1; j <= rep.n; ++j) {
      const SparseMat& a = rep.gen(i, j);
      const SparseMat& b = rep.gen(j, i);
      for (std::size_t m = 0; m < rep.dim(); ++m)
        for (std::size_t l = 0; l < rep.dim(); ++l)
          if (rep.normsq[m] * a.get(m, l) != rep.normsq[l] * b.get(l, m)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("gl_n structure for several weights") {
  std::vector<DWeight> ws = {dbl({1, 0}), dbl({2, 1}), dbl({0, 0}), dbl({1, 0, 0}), dbl({2, 1, 0}),
                             dbl({1, 0, 0, 0}), dbl({2, 1, 0, 0}), dbl({3, 1, 0, 0}), dbl({1, -1, -2})};
  for (const auto& l : ws) {
    const int n = static_cast<int>(l.size());
    CAPTURE(n);
    auto rep = build_irrep(n, l);
    CHECK(Rat(long(rep.dim())) == weyl_dim(Series::A, l));
    CHECK(commutators_hold(rep));
    CHECK(adjoint(rep));
    for (const auto& N : rep.normsq) CHECK(N > 0);
    CHECK(rep.normsq[0] == 1);
    // highest vector
    for (int i = 1; i <= n; ++i) {
      CHECK(rep.gen(i, i).get(0, 0) == half(l[i - 1]));
      for (int j = i + 1; j <= n; ++j) CHECK(is_zero(rep.gen(i, j) * unit_vec(rep.dim(), 0)));
    }
  }
}

TEST_CASE("small cases by hand") {
  auto t = build_irrep(2, dbl({0, 0}));
  CHECK(t.dim() == 1);
  CHECK(t.gen(1, 2).is_zero());
  // λ=(1,0) is the defining representation: basis[0] = e_1 (λ_11 = 1), basis[1] = e_2
  auto v = build_irrep(2, dbl({1, 0}));
  REQUIRE(v.dim() == 2);
  CHECK(v.gen(1, 2) == SparseMat::unit(2, 0, 1));
  CHECK(v.gen(2, 1) == SparseMat::unit(2, 1, 0));
  CHECK(v.normsq == Vec{1, 1});
  auto w = build_irrep(2, dbl({2, 0}));
  CHECK(w.normsq == Vec{1, 2, 4});  // (2-λ11)! 2! / λ11!
  CHECK_THROWS_AS(build_irrep(2, dbl({0, 1})), NonDominantWeight);
}

TEST_CASE("gen_matrix agrees with commutators") {
  auto rep = build_irrep(3, dbl({2, 1, 0}));
  CHECK(gen_matrix(rep, 1, 3) == commutator(rep.gen(1, 2), rep.gen(2, 3)));
  CHECK(gen_matrix(rep, 3, 1) == commutator(rep.gen(3, 2), rep.gen(2, 1)));
  CHECK(is_zero(gen_matrix(rep, 1, 3) * unit_vec(rep.dim(), 0)));
  CHECK_THROWS(gen_matrix(rep, 0, 1));
}

TEST_CASE("lowering operators: printed examples") {
  auto rep = build_irrep(3, dbl({2, 1, 0}));
  auto h = [&](int i) { return h_matrix(rep, i); };
  CHECK(lowering_operator(rep, 1, ZKind::Raising).realized == rep.gen(1, 3));
  CHECK(lowering_operator(rep, 2, ZKind::Raising).realized == rep.gen(2, 3) * (h(2) - h(1)) + rep.gen(2, 1) * rep.gen(1, 3));
  CHECK(lowering_operator(rep, 2, ZKind::Lowering).realized == rep.gen(3, 2));
  CHECK(lowering_operator(rep, 1, ZKind::Lowering).realized == rep.gen(3, 1) * (h(1) - h(2)) + rep.gen(2, 1) * rep.gen(3, 2));
}

TEST_CASE("basis from lowering operators is the formula basis") {
  for (const auto& l : {dbl({1, 0}), dbl({2, 0}), dbl({2, 1, 0}), dbl({3, 1, 0}), dbl({2, 2, 0})}) {
    auto rep = build_irrep(static_cast<int>(l.size()), l);
    auto vs = basis_via_lowering(rep);
    for (std::size_t a = 0; a < rep.dim(); ++a) CHECK(vs[a] == unit_vec(rep.dim(), a));
  }
}

TEST_CASE("raising lemma coefficients") {
  auto rep = build_irrep(2, dbl({2, 0}));
  CHECK(lemma_aximu_check(rep, dbl({1}), 1) == 2);
  CHECK(lemma_aximu_check(rep, dbl({2}), 1) == 0);
  auto r3 = build_irrep(3, dbl({2, 1, 0}));
  for (const auto& mu : branch_A(r3.lambda))
    for (int i = 1; i <= 2; ++i) CHECK_NOTHROW(lemma_aximu_check(r3, mu, i));
  CHECK(lemma_aximu_check(r3, dbl({1, 1}), 1) == 3);  // m_1 = 1, l = (2,0,-2)
  CHECK_THROWS_AS(lemma_aximu_check(r3, dbl({3, 1}), 1), std::invalid_argument);
}

TEST_CASE("Capelli determinant") {
  for (const auto& l : {dbl({1, 0}), dbl({2, 1, 0}), dbl({3, 1, 0}), dbl({1, 1, 0})}) {
    const int n = static_cast<int>(l.size());
    auto rep = build_irrep(n, l);
    // scalar ∏ (u + l_i), expanded by hand
    std::vector<Rat> poly{1};
    for (int i = 1; i <= n; ++i) {
      Rat li = half(l[i - 1]) - Rat(i) + 1;
      std::vector<Rat> next(poly.size() + 1, Rat(0));
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k] += li * poly[k];
        next[k + 1] += poly[k];
      }
      poly = next;
    }
    OpPoly C = capelli_det(rep, n);
    CHECK(C == OpPoly::scalar(rep.dim(), poly));
    CHECK(quantum_minor(rep, {1, 2}, {1, 2}, 1) == quantum_minor(rep, {1, 2}, {1, 2}, 2));
    for (int i = 1; i < n; ++i) CHECK(capelli_interpolation_check(rep, i));
    // centrality of every coefficient of the lower Capelli determinants
    for (int m = 1; m <= n; ++m) {
      OpPoly A = capelli_det(rep, m);
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
          for (const auto& c : A.coeffs()) CHECK(commutator(c, rep.gen(i, j)).is_zero());
    }
  }
  auto r = build_irrep(3, dbl({2, 1, 0}));
  CHECK(capelli_det(r, 3).eval(0).is_zero());  // l_2 = 0
}

TEST_CASE("quantum minors") {
  auto rep = build_irrep(3, dbl({2, 1, 0}));
  const std::size_t d = rep.dim();
  CHECK(quantum_minor(rep, {1}, {2}) == OpPoly::linear(rep.gen(1, 2), SparseMat(d, d)));
  CHECK(tau_raise(rep, 1) == OpPoly::linear(rep.gen(1, 3), SparseMat(d, d)));
  OpPoly t31 = OpPoly::linear(rep.gen(2, 1) * rep.gen(3, 2) - rep.gen(3, 1) * (rep.gen(2, 2) - SparseMat::identity(d)),
                              -1 * rep.gen(3, 1));
  CHECK(tau_lower(rep, 1) == t31);
  OpPoly t23 = OpPoly::linear(rep.gen(2, 1) * rep.gen(1, 3) - rep.gen(2, 3) * rep.gen(1, 1), -1 * rep.gen(2, 3));
  CHECK(tau_raise(rep, 2) == t23);
  CHECK(quantum_minor(rep, {2, 1}, {1, 3}) == Rat(-1) * quantum_minor(rep, {1, 2}, {1, 3}));
  CHECK(quantum_minor(rep, {1, 2}, {3, 1}) == Rat(-1) * quantum_minor(rep, {1, 2}, {1, 3}));
  CHECK(quantum_minor(rep, {1, 3}, {2, 3}, 1) == quantum_minor(rep, {1, 3}, {2, 3}, 2));
  CHECK(quantum_minor(rep, {1, 2, 3}, {3, 2, 1}, 1) == quantum_minor(rep, {1, 2, 3}, {3, 2, 1}, 2));
  for (const auto& l : {dbl({1, 0}), dbl({3, 0}), dbl({2, 1, 0}), dbl({3, 1, 0}), dbl({2, 1, 0, 0})}) {
    auto r = build_irrep(static_cast<int>(l.size()), l);
    for (int i = 1; i < r.n; ++i) CHECK(tau_equals_z_check(r, i));
  }
}

TEST_CASE("Drinfeld generators and the κ basis") {
  for (const auto& l : {dbl({1, 0}), dbl({2, 0}), dbl({2, 1, 0}), dbl({3, 1, 0})}) {
    auto rep = build_irrep(static_cast<int>(l.size()), l);
    for (int m = 1; m <= rep.n; ++m) CHECK(drinfeld_check(rep, m));
    Vec cs;
    auto ks = kappa_basis(rep, &cs);
    CHECK(ks.size() == rep.dim());
    CHECK(cs[0] == 1);
    CHECK(rank(ks) == rep.dim());
  }
}

TEST_CASE("GT subalgebra eigenvalues") {
  auto rep = build_irrep(3, dbl({2, 1, 0}));
  auto top = gt_eigenvalues(rep.basis[0]);
  CHECK(top[2] == std::vector<Rat>{0, -4, 0});
  CHECK(top[0] == std::vector<Rat>{2});
  std::set<std::vector<std::vector<Rat>>> seen;
  for (const auto& p : rep.basis) seen.insert(gt_eigenvalues(p));
  CHECK(seen.size() == 8);
  CHECK(gt_eigen_check(rep));
  auto one = build_irrep(1, DWeight{6});
  CHECK(gt_eigenvalues(one.basis[0])[0][0] == 3);
}

TEST_CASE("characteristic identity") {
  for (const auto& l : {dbl({0, 0}), dbl({1, 0}), dbl({2, 1, 0}), dbl({0, 0, 0}), dbl({2, 2, 0})}) {
    auto rep = build_irrep(static_cast<int>(l.size()), l);
    auto r = characteristic_identity_check(rep);
    CHECK(r.ok());
  }
}

TEST_CASE("character equals the Schur polynomial") {
  for (const auto& shape : std::vector<std::vector<int>>{{1, 0, 0}, {2, 1, 0}, {2, 2, 1}, {3, 1, 0}, {1, 1}}) {
    const int n = static_cast<int>(shape.size());
    DWeight l;
    for (int x : shape) l.push_back(2 * x);
    auto rep = build_irrep(n, l);
    std::map<std::vector<int>, long> ch;
    for (const auto& p : rep.basis) {
      std::vector<int> e;
      for (Doubled w : weight(p)) e.push_back(static_cast<int>(w / 2));
      ++ch[e];
    }
    CHECK(ch == schur_poly(shape, n));
  }
}
