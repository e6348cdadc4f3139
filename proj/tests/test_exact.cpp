#include "doctest.h"
#include "gtb/exact.hpp"

using namespace gtb;

TEST_CASE("rational parse and print") {
  CHECK(to_string(rat(6, 4)) == "3/2");
  CHECK(to_string(rat(-4, 2)) == "-2");
  CHECK(parse_rat("-5/10") == rat(-1, 2));
  CHECK(parse_rat("7") == 7);
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("x"));
  CHECK(half(-3) == rat(-3, 2));
  CHECK(factorial(5) == 120);
  CHECK(ipow(rat(2, 3), 3) == rat(8, 27));
}

TEST_CASE("sparse matrix basics") {
  SparseMat a(2, 2), b(2, 2);
  a.set(0, 1, 1);
  b.set(1, 0, 1);
  SparseMat h = commutator(a, b);
  CHECK(h.get(0, 0) == 1);
  CHECK(h.get(1, 1) == -1);
  CHECK(commutator(h, a) == rat(2) * a);
  CHECK((a * b + b * a) == SparseMat::identity(2));
  SparseMat k = kron(a, SparseMat::identity(2));
  CHECK(k.rows() == 4);
  CHECK(k.get(0, 2) == 1);
  CHECK(k.get(1, 3) == 1);
  CHECK(k.nnz() == 2);
  a.set(0, 1, 0);
  CHECK(a.is_zero());
}

TEST_CASE("nullspace and rank") {
  SparseMat m(2, 3);
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  m.set(1, 1, 1);
  m.set(1, 2, -1);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(m * ns[0]));
  CHECK(rank(m) == 2);
  CHECK(rank(std::vector<Vec>{{1, 2}, {2, 4}}) == 1);
  Vec x = solve({{2, 1}, {1, 3}}, {3, 5});
  CHECK(x == Vec{rat(4, 5), rat(7, 5)});
  CHECK_THROWS(solve({{1, 2}, {2, 4}}, {1, 1}));
}

TEST_CASE("coordinates") {
  Coordinates c({{1, 1, 0}, {0, 1, 1}});
  CHECK(c.coords({2, 3, 1}) == Vec{2, 1});
  CHECK_FALSE(c.contains({1, 0, 0}));
  CHECK_THROWS_AS(c.coords({1, 0, 0}), std::domain_error);
  Rat s;
  CHECK(proportional({2, 4}, {1, 2}, s));
  CHECK(s == 2);
  CHECK_FALSE(proportional({2, 5}, {1, 2}, s));
}

TEST_CASE("operator polynomials") {
  SparseMat e = SparseMat::unit(2, 0, 1);
  OpPoly p = OpPoly::linear(e, SparseMat::identity(2));  // u + e
  OpPoly q = p * p.at_neg();                           // (u+e)(-u+e) = -u^2 + e^2 = -u^2
  CHECK(q == OpPoly::scalar(2, {0, 0, -1}));
  CHECK(q.is_even());
  CHECK(p.eval(3).get(0, 0) == 3);
  CHECK(p.shifted(1).eval(0).get(1, 1) == 1);
  CHECK_THROWS(p.divide_by_u());
  OpPoly r = (p - OpPoly::linear(e, SparseMat(2, 2))).divide_by_u();
  CHECK(r == OpPoly::scalar(2, {1}));
  CHECK(op_poly_eval_left(OpPoly::scalar(2, {1, 2}), e) == SparseMat::identity(2) + rat(2) * e);
}
