#include "doctest.h"
#include "gtb/patterns.hpp"
#include "gtb/weyl.hpp"

#include <algorithm>

using namespace gtb;

namespace {

DWeight dbl(std::vector<long> v) {
  for (auto& x : v) x *= 2;
  return v;
}

Series series_of(Family f) {
  switch (f) {
    case Family::A: return Series::A;
    case Family::B3:
    case Family::B4: return Series::B;
    case Family::C3: return Series::C;
    default: return Series::D;
  }
}

// B3/C3/D3 families use the non-positive convention, B4/D4 the standard one
Rat oracle(Family f, const DWeight& l) {
  if (f == Family::A || f == Family::B4 || f == Family::D4) return weyl_dim(series_of(f), l);
  return weyl_dim_nonpositive(series_of(f), l);
}

}  // namespace

TEST_CASE("pattern counts match the Weyl oracle") {
  struct Case {
    Family f;
    DWeight l;
    long expect;
  };
  std::vector<Case> cases = {
      {Family::A, dbl({2, 1, 0}), 8},      {Family::A, dbl({0, 0}), 1},        {Family::A, dbl({1, 0}), 2},
      {Family::A, dbl({3, 1, 0, 0}), 45},  {Family::C3, dbl({0, -1}), 4},      {Family::C3, dbl({-1, -1}), 5},
      {Family::C3, dbl({-1}), 2},          {Family::C3, dbl({-1, -2, -2}), -1}, {Family::B3, dbl({-1}), 3},
      {Family::B3, {-1, -1}, 4},           {Family::B3, dbl({-1, -1}), 10},    {Family::B3, dbl({0, -1}), 5},
      {Family::B3, {-1}, 2},               {Family::D3, dbl({0, -1}), 4},      {Family::D3, dbl({1, -1}), 3},
      {Family::D3, {-1, -1}, 2},           {Family::D3, dbl({0, -1, -1}), 15}, {Family::D3, {1, -1, -3}, -1},
      {Family::B4, dbl({1}), 3},           {Family::B4, dbl({1, 0}), 5},       {Family::B4, {1, 1}, 4},
      {Family::B4, dbl({1, 1}), 10},       {Family::D4, dbl({1, 0}), 4},       {Family::D4, dbl({1, 1}), 3},
      {Family::D4, dbl({1, 0, 0}), 6},     {Family::D4, {1, 1, 1}, 4},        {Family::D4, dbl({2, 1, -1}), -1},
  };
  for (const auto& c : cases) {
    CAPTURE(family_name(c.f));
    CAPTURE(c.l.size());
    auto ps = enumerate(c.f, c.l);
    Rat w = oracle(c.f, c.l);
    if (c.expect > 0) CHECK(w == c.expect);
    CHECK(Rat(long(ps.size())) == w);
    for (const auto& p : ps) CHECK(validate(p));
    for (std::size_t i = 1; i < ps.size(); ++i) CHECK(order_key(ps[i - 1]) > order_key(ps[i]));
  }
}

TEST_CASE("validate rejects broken arrays") {
  Pattern p{Family::A, 2, {dbl({1, 0}), dbl({2})}, {}};
  CHECK_FALSE(validate(p));
  p.rows[1] = dbl({1});
  CHECK(validate(p));
  p.rows[1] = DWeight{1};  // half-integer step
  CHECK_FALSE(validate(p));
  Pattern bad{Family::A, 2, {dbl({1, 0})}, {}};
  CHECK_THROWS_AS(validate(bad), MalformedPattern);
  CHECK_THROWS_AS(check_dominant(Family::C3, dbl({1})), NonDominantWeight);
  CHECK_THROWS_AS(check_dominant(Family::A, dbl({0, 1})), NonDominantWeight);
  CHECK_NOTHROW(check_dominant(Family::D3, dbl({1, -1})));
}

TEST_CASE("B3 sigma needs a strictly negative primed entry for integer weights") {
  for (const auto& p : enumerate(Family::B3, dbl({-1, -1})))
    for (int k = 1; k <= p.n; ++k)
      if (p.sigma[k - 1] == 1) CHECK(p.lamp(k, 1) <= -2);
}

TEST_CASE("tableau bijection") {
  auto ps = enumerate(Family::A, dbl({2, 1, 0}));
  for (const auto& p : ps) {
    auto t = pattern_to_tableau(p);
    CHECK(is_semistandard(t));
    CHECK(tableau_to_pattern(t, 3) == p);
  }
  SemistandardTableau t{{{1, 1}, {2}}};
  Pattern p = tableau_to_pattern(t, 3);
  CHECK(p.row(1) == dbl({2}));
  CHECK(p.row(2) == dbl({2, 1}));
  CHECK(weight(p) == dbl({2, 1, 0}));
  CHECK_FALSE(is_semistandard(SemistandardTableau{{{2, 1}}}));
}

TEST_CASE("weights") {
  // lowest vector of (2,1,0): all rows minimal
  auto ps = enumerate(Family::A, dbl({2, 1, 0}));
  CHECK(weight(ps.front()) == dbl({2, 1, 0}));
  CHECK(weight(ps.back()) == dbl({0, 1, 2}));
  auto cs = enumerate(Family::C3, dbl({-1}));
  REQUIRE(cs.size() == 2);
  CHECK(weight(cs[0]) == dbl({1}));
  CHECK(weight(cs[1]) == dbl({-1}));
  auto bs = enumerate(Family::B4, dbl({1}));
  CHECK_THROWS(weight(bs[0]));
  CHECK(s3_to_standard(dbl({0, -1})) == dbl({1, 0}));
  CHECK(standard_to_s3(s3_to_standard(dbl({-1, -2, -3}))) == dbl({-1, -2, -3}));
}
