#include "gtb/branching.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <stdexcept>

namespace gtb {

namespace {

constexpr Doubled kNegInf = std::numeric_limits<Doubled>::min() / 4;

// values lo..hi stepping by 2 (both doubled, same parity as hi), descending
std::vector<Doubled> range_desc(Doubled lo, Doubled hi) {
  std::vector<Doubled> out;
  for (Doubled x = hi; x >= lo; x -= 2) out.push_back(x);
  return out;
}

// cartesian product of independent descending ranges
void product(const std::vector<std::pair<Doubled, Doubled>>& ranges, std::vector<DWeight>& out) {
  DWeight cur(ranges.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == ranges.size()) {
      out.push_back(cur);
      return;
    }
    for (Doubled x : range_desc(ranges[i].first, ranges[i].second)) {
      cur[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
}

bool even(long x) { return x % 2 == 0; }

// child weight validity in the non-positive convention
bool child_ok(Series s, const DWeight& lambda, const DWeight& mu) {
  const std::size_t m = mu.size();
  for (Doubled x : mu)
    if (even(x) != even(lambda[0])) return false;
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (mu[i] < mu[i + 1]) return false;
  if (m == 0) return true;
  switch (s) {
    case Series::A: return true;
    case Series::B:
    case Series::C: return mu[0] <= 0;
    case Series::D: return m == 1 || mu[0] + mu[1] <= 0;
  }
  return false;
}

}  // namespace

std::vector<DWeight> branch_A(const DWeight& l) {
  std::vector<std::pair<Doubled, Doubled>> r;
  for (std::size_t i = 0; i + 1 < l.size(); ++i) r.push_back({l[i + 1], l[i]});
  std::vector<DWeight> out;
  product(r, out);
  return out;
}

BranchSpec branch_BCD(Series s, const DWeight& l, const DWeight& mu) {
  if (s == Series::A) throw std::invalid_argument("branch_BCD: use branch_A for gl_n");
  const std::size_t n = l.size();
  if (n == 0 || mu.size() + 1 != n) throw std::invalid_argument("branch_BCD: μ must have n-1 entries");
  BranchSpec b;
  b.series = s;
  b.lambda = l;
  b.mu = mu;
  if (!child_ok(s, l, mu)) return b;
  auto mu_at = [&](std::size_t i) { return i < mu.size() ? mu[i] : kNegInf; };  // 0-based
  std::vector<std::pair<Doubled, Doubled>> r;
  // ranges below are [lo, hi] for each coordinate; they are independent because
  // the chains interleave ν with fixed λ, μ entries only
  if (s == Series::C) {
    r.push_back({std::max(l[0], mu_at(0)), 0});
    for (std::size_t i = 1; i < n; ++i) r.push_back({std::max(l[i], mu_at(i)), std::min(l[i - 1], mu_at(i - 1))});
  } else if (s == Series::B) {
    Doubled hi = -l[0], lo = l[0];
    if (!mu.empty()) {
      hi = std::min(hi, -mu[0]);
      lo = std::max(lo, mu[0]);
    }
    r.push_back({lo, hi});
    for (std::size_t i = 1; i < n; ++i) r.push_back({std::max(l[i], mu_at(i)), std::min(l[i - 1], mu_at(i - 1))});
  } else {
    if (n < 2) throw std::invalid_argument("branch_BCD: D series needs n >= 2");
    r.push_back({std::max(l[1], mu_at(1)), std::min(-std::labs(l[0]), -std::labs(mu[0]))});
    for (std::size_t i = 1; i + 1 < n; ++i) r.push_back({std::max(l[i + 1], mu_at(i + 1)), std::min(l[i], mu_at(i))});
  }
  // align parity with λ: the upper bound 0 or -|.| may have the wrong parity
  for (auto& [lo, hi] : r)
    if (!even(hi - l[0])) --hi;
  product(r, b.tuples);
  if (s == Series::B)
    for (const auto& t : b.tuples) {
      DWeight nu = t;
      int sg = 0;
      if (t[0] > 0) {
        sg = 1;
        nu[0] = -t[0];
      }
      b.sigma.push_back(sg);
      b.nu.push_back(nu);
    }
  else
    b.nu = b.tuples;
  return b;
}

std::vector<BranchSpec> branch_children(Series s, const DWeight& l) {
  const std::size_t n = l.size();
  if (n == 0) throw std::invalid_argument("branch_children: empty weight");
  const Doubled lo = l[n - 1];
  const Doubled hi = s == Series::D ? -lo : (even(l[0]) ? 0 : -1);
  std::vector<std::pair<Doubled, Doubled>> r(n - 1, {lo, hi});
  std::vector<DWeight> cand;
  product(r, cand);
  std::vector<BranchSpec> out;
  for (const auto& mu : cand) {
    if (!child_ok(s, l, mu)) continue;
    BranchSpec b = branch_BCD(s, l, mu);
    if (b.multiplicity() > 0) out.push_back(std::move(b));
  }
  return out;
}

Rat c_multiplicity_formula(const DWeight& l, const DWeight& mu) {
  const std::size_t n = l.size();
  Rat prod = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    Rat alpha = i == 1 ? Rat(-1, 2) : half(std::min(l[i - 2], mu[i - 2])) - Rat(long(i)) + Rat(1, 2);
    Doubled b = i <= mu.size() ? std::max(l[i - 1], mu[i - 1]) : l[i - 1];
    Rat beta = half(b) - Rat(long(i)) + Rat(1, 2);
    Rat f = alpha - beta + 1;
    if (f <= 0) return 0;
    prod *= f;
  }
  return prod;
}

std::vector<std::vector<std::vector<int>>> tableaux(const std::vector<int>& shape, int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> t;
  for (int len : shape)
    if (len > 0) t.emplace_back(len, 0);
  if (static_cast<int>(t.size()) > n) return out;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t r, std::size_t c) {
    if (r == t.size()) {
      out.push_back(t);
      return;
    }
    if (c == t[r].size()) {
      rec(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      rec(r, c + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::map<std::vector<int>, long> schur_poly(const std::vector<int>& shape, int n) {
  std::map<std::vector<int>, long> m;
  for (const auto& t : tableaux(shape, n)) {
    std::vector<int> e(n, 0);
    for (const auto& row : t)
      for (int v : row) ++e[v - 1];
    ++m[e];
  }
  return m;
}

Rat schur(const std::vector<int>& shape, const Vec& x) {
  Rat s = 0;
  for (const auto& [e, mult] : schur_poly(shape, static_cast<int>(x.size()))) {
    Rat term = mult;
    for (std::size_t i = 0; i < e.size(); ++i) term *= ipow(x[i], e[i]);
    s += term;
  }
  return s;
}

}  // namespace gtb
