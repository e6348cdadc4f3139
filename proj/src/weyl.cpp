#include "gtb/weyl.hpp"

#include <cstdlib>

namespace gtb {

char series_letter(Series s) {
  switch (s) {
    case Series::A: return 'A';
    case Series::B: return 'B';
    case Series::C: return 'C';
    case Series::D: return 'D';
  }
  return '?';
}

namespace {

bool even(long x) { return x % 2 == 0; }

// positive roots as integer vectors in the e_i basis
std::vector<std::vector<int>> positive_roots(Series s, std::size_t n) {
  std::vector<std::vector<int>> r;
  auto vec = [n](std::size_t i, int ci, std::size_t j, int cj) {
    std::vector<int> v(n, 0);
    v[i] += ci;
    v[j] += cj;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      r.push_back(vec(i, 1, j, -1));
      if (s != Series::A) r.push_back(vec(i, 1, j, 1));
    }
  if (s == Series::B)
    for (std::size_t i = 0; i < n; ++i) r.push_back(vec(i, 1, i, 0));
  if (s == Series::C)
    for (std::size_t i = 0; i < n; ++i) r.push_back(vec(i, 2, i, 0));
  return r;
}

Rat pair(const Vec& x, const std::vector<int>& a) {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * a[i];
  return s;
}

}  // namespace

bool weyl_dominant(Series s, const DWeight& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (a[i] < a[i + 1] || !even(a[i] - a[i + 1])) return false;
  if (n == 0) return true;
  switch (s) {
    case Series::A: return even(a[0]);
    case Series::B: return a[n - 1] >= 0;
    case Series::C: return a[n - 1] >= 0 && even(a[0]);
    case Series::D: return n == 1 || a[n - 2] >= std::labs(a[n - 1]);
  }
  return false;
}

Rat weyl_dim(Series s, const DWeight& a) {
  if (!weyl_dominant(s, a)) throw std::invalid_argument("weyl_dim: weight is not dominant");
  const std::size_t n = a.size();
  const auto roots = positive_roots(s, n);
  // ρ as the half sum of positive roots, so no convention tables are needed
  Vec rho(n, Rat(0));
  for (const auto& r : roots)
    for (std::size_t i = 0; i < n; ++i) rho[i] += Rat(r[i], 2);
  Vec lr(n);
  for (std::size_t i = 0; i < n; ++i) lr[i] = half(a[i]) + rho[i];
  Rat d = 1;
  for (const auto& r : roots) d *= pair(lr, r) / pair(rho, r);
  d.canonicalize();
  return d;
}

Rat weyl_dim_nonpositive(Series s, const DWeight& lambda) {
  DWeight a(lambda.rbegin(), lambda.rend());
  for (auto& x : a) x = -x;
  return weyl_dim(s, a);
}

}  // namespace gtb
