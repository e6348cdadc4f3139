#include "doctest.h"
#include "gtb/branching.hpp"

using namespace gtb;

namespace {

DWeight dbl(std::vector<long> v) {
  for (auto& x : v) x *= 2;
  return v;
}

Rat child_dim(Series s, const DWeight& mu) {
  if (mu.empty()) return 1;
  return weyl_dim_nonpositive(s, mu);
}

}  // namespace

TEST_CASE("Weyl oracle by hand") {
  CHECK(weyl_dim(Series::A, dbl({2, 1, 0})) == 8);
  CHECK(weyl_dim(Series::A, dbl({0, 0, 0})) == 1);
  CHECK(weyl_dim(Series::B, dbl({0, 0})) == 1);
  CHECK(weyl_dim(Series::C, dbl({1, 0})) == 4);
  CHECK(weyl_dim(Series::C, dbl({1, 1})) == 5);
  CHECK(weyl_dim(Series::B, {1, 1}) == 4);
  CHECK(weyl_dim(Series::B, dbl({1, 0})) == 5);
  CHECK(weyl_dim(Series::D, dbl({1, 0, 0})) == 6);
  CHECK(weyl_dim(Series::D, {1, 1, -1}) == 4);
  CHECK(weyl_dim(Series::D, dbl({1, 1})) == 3);
  CHECK(weyl_dim(Series::D, dbl({1, -1})) == 3);
  CHECK(weyl_dim(Series::D, dbl({5})) == 1);
  CHECK(weyl_dim_nonpositive(Series::C, dbl({0, -1})) == 4);
  CHECK(weyl_dim(Series::B, {}) == 1);
  CHECK_THROWS(weyl_dim(Series::C, dbl({0, 1})));
  CHECK_THROWS(weyl_dim(Series::C, {1, 1}));
  CHECK_THROWS(weyl_dim(Series::D, dbl({1, -2})));
}

TEST_CASE("branch_A") {
  CHECK(branch_A(dbl({0, 0})) == std::vector<DWeight>{dbl({0})});
  CHECK(branch_A(dbl({1, 0})) == std::vector<DWeight>{dbl({1}), dbl({0})});
  auto m = branch_A(dbl({2, 1, 0}));
  CHECK(m == std::vector<DWeight>{dbl({2, 1}), dbl({2, 0}), dbl({1, 1}), dbl({1, 0})});
  Rat total = 0;
  for (const auto& mu : m) total += weyl_dim(Series::A, mu);
  CHECK(total == 8);
}

TEST_CASE("branching sums for all four series") {
  struct Case {
    Series s;
    DWeight l;
  };
  std::vector<Case> cases = {
      {Series::C, dbl({0, -1})},   {Series::C, dbl({-1, -1})},   {Series::C, dbl({-1, -2})},
      {Series::C, dbl({0, 0, -1})}, {Series::C, dbl({-1, -1, -2})}, {Series::C, dbl({0})},
      {Series::B, {-1, -1}},       {Series::B, dbl({-1, -1})},   {Series::B, dbl({0, -1})},
      {Series::B, {-1, -3}},       {Series::B, dbl({0, -1, -1})}, {Series::B, dbl({-2})},
      {Series::D, dbl({0, -1})},   {Series::D, dbl({1, -1})},    {Series::D, {-1, -1}},
      {Series::D, {1, -1}},        {Series::D, dbl({0, -1, -1})}, {Series::D, dbl({1, -1, -2})},
      {Series::D, {-1, -1, -3}},
  };
  for (const auto& c : cases) {
    CAPTURE(series_letter(c.s));
    CAPTURE(c.l.size());
    Rat total = 0;
    for (const auto& b : branch_children(c.s, c.l)) total += Rat(long(b.multiplicity())) * child_dim(c.s, b.mu);
    CHECK(total == weyl_dim_nonpositive(c.s, c.l));
  }
}

TEST_CASE("trivial weight has only the trivial child") {
  for (Series s : {Series::B, Series::C, Series::D}) {
    auto ch = branch_children(s, dbl({0, 0}));
    REQUIRE(ch.size() == 1);
    CHECK(ch[0].mu == dbl({0}));
    CHECK(ch[0].multiplicity() == 1);
  }
}

TEST_CASE("B re-encoding of the first entry") {
  auto b = branch_BCD(Series::B, dbl({-1}), {});
  REQUIRE(b.tuples.size() == 3);
  CHECK(b.sigma == std::vector<int>{1, 0, 0});
  CHECK(b.nu[0] == dbl({-1}));
  CHECK(b.nu[1] == dbl({0}));
}

TEST_CASE("C multiplicity product formula") {
  for (const auto& l : {dbl({0, -1}), dbl({-1, -1}), dbl({-1, -3}), dbl({0, -2, -3}), dbl({-1, -1, -2})}) {
    for (const auto& b : branch_children(Series::C, l)) CHECK(Rat(long(b.multiplicity())) == c_multiplicity_formula(l, b.mu));
  }
}

TEST_CASE("Schur polynomials") {
  CHECK(schur({1, 0}, {rat(2), rat(3)}) == 5);
  CHECK(schur({2, 1, 0}, {1, 1, 1}) == 8);
  auto sp = schur_poly({1}, 2);
  CHECK(sp.size() == 2);
  CHECK(sp.at({1, 0}) == 1);
  // s_λ(x, 1) = Σ_μ s_μ(x) over interlacing μ
  for (const Vec& x : {Vec{rat(1, 2), rat(3)}, Vec{rat(-2), rat(5, 7)}, Vec{rat(4), rat(-1, 3)}}) {
    std::vector<int> lam{2, 1, 0};
    Vec x1 = x;
    x1.push_back(1);
    Rat rhs = 0;
    for (const auto& mu : branch_A(dbl({2, 1, 0}))) rhs += schur({int(mu[0] / 2), int(mu[1] / 2)}, x);
    CHECK(schur(lam, x1) == rhs);
  }
}
