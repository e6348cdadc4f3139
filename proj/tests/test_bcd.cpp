#include "doctest.h"
#include "gtb/bcd.hpp"
#include "gtb/branching.hpp"
#include "gtb/patterns.hpp"

#include <algorithm>

using namespace gtb;

namespace {

DWeight dbl(std::vector<long> v) {
  for (auto& x : v) x *= 2;
  return v;
}

BCDIrrep make(Series s, int n, const DWeight& l, Convention c = Convention::S3) {
  return build_bcd_irrep(ClassicalAlgebra{s, n, c}, l);
}

// restriction of an operator to span(H), in the coordinates of H
SparseMat restrict_to(const SparseMat& X, const std::vector<Vec>& H) {
  const Coordinates co(H);
  std::vector<Vec> cols;
  for (const auto& h : H) cols.push_back(co.coords(X * h));
  return from_columns(H.size(), cols);
}

}  // namespace

TEST_CASE("small B/C/D modules") {
  CHECK(make(Series::C, 2, dbl({0, -1})).dim() == 4);
  CHECK(make(Series::C, 2, dbl({-1, -1})).dim() == 5);
  CHECK(make(Series::B, 2, {-1, -1}).dim() == 4);
  for (Series s : {Series::B, Series::C, Series::D}) CHECK(make(s, 2, {0, 0}).dim() == 1);
  struct Case {
    Series s;
    int n;
    DWeight l;
  };
  std::vector<Case> cs = {{Series::C, 2, dbl({0, -1})}, {Series::C, 2, dbl({-1, -2})}, {Series::B, 2, {-1, -1}},
                          {Series::B, 2, dbl({0, -1})}, {Series::D, 2, dbl({1, -1})}, {Series::D, 3, dbl({0, -1, -1})},
                          {Series::C, 3, dbl({0, 0, -1})}, {Series::B, 3, {-1, -1, -3}}};
  for (const auto& c : cs) {
    CAPTURE(series_letter(c.s));
    CAPTURE(c.n);
    auto R = make(c.s, c.n, c.l);
    CHECK(Rat(long(R.dim())) == weyl_dim_nonpositive(c.s, c.l));
    CHECK(bcd_commutators_ok(R));
    CHECK(bcd_highest_vector_ok(R));
    CHECK(bcd_adjoint_ok(R));
  }
  CHECK_THROWS(make(Series::C, 2, dbl({1, 0})));
  CHECK_THROWS_AS(build_bcd_irrep(ClassicalAlgebra{Series::C, 3, Convention::S3}, dbl({-2, -3, -4}), DeskCaps{3, 50}),
                  Refusal);
}

TEST_CASE("convention bridge") {
  for (Series s : {Series::B, Series::C, Series::D})
    for (int n = 1; n <= 3; ++n) {
      const int N = s == Series::B ? 2 * n + 1 : 2 * n;
      for (int p = 1; p <= N; ++p) CHECK(index_s3_to_s4(s, n, index_s4_to_s3(s, n, p)) == p);
      CHECK(index_s4_to_s3(s, n, 1) == -n);
      CHECK(index_s4_to_s3(s, n, N) == n);
    }
  CHECK(weight_s3_to_s4(dbl({0, -1, -3})) == dbl({3, 1, 0}));
  CHECK(weight_s4_to_s3(weight_s3_to_s4({-1, -3})) == DWeight{-1, -3});
  // same module in both conventions
  for (Series s : {Series::B, Series::D}) {
    const DWeight l3 = dbl({0, -1});
    auto R3 = make(s, 2, l3);
    auto R4 = make(s, 2, weight_s3_to_s4(l3), Convention::S4);
    CHECK(R3.dim() == R4.dim());
    // weights: a_i = -λ_{n+1-i}
    std::vector<Vec> w3, w4 = R4.weight;
    for (auto w : R3.weight) {
      std::reverse(w.begin(), w.end());
      for (auto& x : w) x = -x;
      w3.push_back(w);
    }
    std::sort(w3.begin(), w3.end());
    std::sort(w4.begin(), w4.end());
    CHECK(w3 == w4);
  }
}

TEST_CASE("lowering operators z_ia") {
  auto R = make(Series::C, 2, dbl({0, -1}));
  Mickelsson M(R);
  const Vec xi = unit_vec(R.dim(), 0);
  // z_{1,-2} would raise μ_1 above λ_1 = 0
  CHECK(is_zero(lowering_zia(M, 1, -2) * xi));
  const Vec v = lowering_zia(M, -1, -2) * xi;
  CHECK_FALSE(is_zero(v));
  for (const auto* op : M.raising(2)) CHECK(is_zero(*op * v));
  CHECK(M.weight_of(v)[0] == -1);
  for (auto l : std::vector<DWeight>{dbl({0, -1}), dbl({-1, -2}), dbl({-1, -1, -2})}) {
    auto Rl = make(Series::C, int(l.size()), l);
    Mickelsson Ml(Rl);
    CHECK(zia_weight_shift_ok(Ml));
    CHECK(zia_commute_ok(Ml));
  }
  for (auto [s, l] : std::vector<std::pair<Series, DWeight>>{{Series::B, {-1, -3}}, {Series::D, dbl({1, -2})}}) {
    auto Rl = make(s, 2, l);
    Mickelsson Ml(Rl);
    CHECK(zia_weight_shift_ok(Ml));
    CHECK(zia_commute_ok(Ml));
  }
}

TEST_CASE("interpolation polynomial") {
  {
    auto R = make(Series::C, 2, dbl({-1, -1}));
    Mickelsson M(R);
    CHECK(interp_node_check(M) > 0);
    const OpPoly Z = z_interp_poly(M);
    CHECK(Z.is_even());
    REQUIRE(Z.degree() == 2);
    CHECK(Z.coeff(2) == restrict_to(R.gen(2, -2), M.highest(2)));
    CHECK(z_interp(M, 3) == Z.eval(3));
  }
  for (auto l : std::vector<DWeight>{dbl({1, -2, -2}), dbl({0, -1, -2})}) {
    auto R = make(Series::D, 3, l);
    Mickelsson M(R);
    CHECK(interp_node_check(M) > 0);
    CHECK(z_interp_poly(M).degree() <= 2 * (3 - 2));
  }
  {
    auto R = make(Series::B, 2, {-1, -3});
    Mickelsson M(R);
    CHECK(interp_node_check(M) > 0);
  }
}

TEST_CASE("multiplicity spaces and GT bases") {
  struct Case {
    Series s;
    int n;
    DWeight l;
  };
  std::vector<Case> cs = {{Series::C, 2, dbl({0, -1})}, {Series::C, 2, dbl({-1, -1})}, {Series::C, 2, dbl({-1, -2})},
                          {Series::B, 2, dbl({-1, -1})}, {Series::B, 2, {-1, -1}},    {Series::B, 2, {-1, -3}},
                          {Series::D, 2, dbl({1, -1})},  {Series::D, 3, dbl({0, -1, -1})}, {Series::C, 3, dbl({0, -1, -1})}};
  for (const auto& c : cs) {
    CAPTURE(series_letter(c.s));
    CAPTURE(c.n);
    auto R = make(c.s, c.n, c.l);
    Mickelsson M(R);
    for (const auto& b : branch_children(c.s, c.l)) {
      auto mb = multiplicity_basis(M, b.mu);
      CHECK(mb.vectors.size() == b.multiplicity());
      CHECK(rank(mb.vectors) == b.multiplicity());
      CHECK(M.highest_mu(c.n, b.mu).size() == b.multiplicity());
      if (c.s == Series::C) CHECK(Rat(long(b.multiplicity())) == c_multiplicity_formula(c.l, b.mu));
    }
    auto gt = gt_basis_bcd(M);
    const Family fam = c.s == Series::B ? Family::B3 : c.s == Series::C ? Family::C3 : Family::D3;
    CHECK(gt.vectors.size() == enumerate(fam, c.l).size());
    CHECK(Rat(long(gt.vectors.size())) == weyl_dim_nonpositive(c.s, c.l));
    CHECK(rank(gt.vectors) == gt.vectors.size());
  }
}

TEST_CASE("C multiplicity parameters") {
  // λ = (0,-1), μ = (0): α = (-1/2, -3/2), β = (-1/2, -5/2)
  auto tp = twisted_params(Series::C, dbl({0, -1}), dbl({0}));
  REQUIRE(tp.factors.size() == 2);
  CHECK(tp.factors[0] == std::pair<Rat, Rat>(Rat(-1, 2), Rat(-1, 2)));
  CHECK(tp.factors[1] == std::pair<Rat, Rat>(Rat(-3, 2), Rat(-5, 2)));
  auto R = make(Series::C, 2, dbl({0, -1}));
  Mickelsson M(R);
  CHECK(multiplicity_basis(M, dbl({0})).vectors.size() == 2);
}

TEST_CASE("F_nn and F_{n,-n} displays, C series") {
  for (auto l : std::vector<DWeight>{dbl({-1}), dbl({-3}), dbl({-1, -1}), dbl({0, -2}), dbl({-1, -2, -2})}) {
    auto R = make(Series::C, int(l.size()), l);
    Mickelsson M(R);
    for (const auto& b : branch_children(Series::C, l)) CHECK(fnn_action_check(M, b.mu));
  }
}

TEST_CASE("Z_ab operators and the twisted Yangian") {
  struct Case {
    Series s;
    int n;
    DWeight l;
  };
  std::vector<Case> cs = {{Series::C, 2, dbl({0, -1})}, {Series::C, 2, dbl({-1, -2})}, {Series::B, 2, {-1, -1}},
                          {Series::B, 2, dbl({0, -1})}, {Series::B, 2, {-1, -3}},    {Series::D, 2, dbl({1, -1})},
                          {Series::D, 3, dbl({0, -1, -1})}, {Series::D, 3, {1, -1, -3}}};
  for (const auto& c : cs) {
    CAPTURE(series_letter(c.s));
    CAPTURE(c.n);
    auto R = make(c.s, c.n, c.l);
    Mickelsson M(R);
    for (const auto& b : branch_children(c.s, c.l)) {
      auto Z = zab_operators(M, b.mu);
      CHECK(zab_symmetry_ok(Z, c.s, c.n));
      CHECK(zab_commute_ok(Z));
      CHECK(zab_interp_ok(M, Z));
      CHECK(zab_yangian_ok(M, Z));
    }
  }
  auto R = make(Series::C, 2, {0, 0});
  Mickelsson M(R);
  auto Z = zab_operators(M, {0});
  CHECK(Z.Z.at({1, -1}).is_zero());
  CHECK(Z.Z.at({-1, 1}).is_zero());
}

TEST_CASE("orthogonal GT bases") {
  auto o3 = make(Series::B, 1, dbl({1}), Convention::S4);
  auto b3 = orth_gt_basis(o3);
  REQUIRE(b3.vectors.size() == 3);
  CHECK(orth_gram_ok(o3, b3));
  std::vector<Doubled> tops;
  for (const auto& p : b3.patterns) tops.push_back(p.lamp(1, 1));
  std::sort(tops.begin(), tops.end());
  CHECK(tops == std::vector<Doubled>{-2, 0, 2});

  auto triv = make(Series::B, 1, {0}, Convention::S4);
  CHECK(orth_gt_basis(triv).vectors.size() == 1);

  for (auto [s, n, l] : std::vector<std::tuple<Series, int, DWeight>>{
           {Series::B, 2, dbl({1, 0})}, {Series::B, 2, {1, 1}}, {Series::D, 2, dbl({1, 1})}, {Series::D, 3, dbl({1, 1, 0})},
           {Series::D, 2, dbl({2, -1})}}) {
    auto R = make(s, n, l, Convention::S4);
    auto b = orth_gt_basis(R);
    CHECK(b.vectors.size() == enumerate(s == Series::B ? Family::B4 : Family::D4, l).size());
    CHECK(Rat(long(b.vectors.size())) == weyl_dim(s, l));
    CHECK(orth_gram_ok(R, b));
  }
}
