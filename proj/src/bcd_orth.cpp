#include <map>
#include <memory>

#include "gtb/bcd.hpp"

// Orthogonal GT bases along o_N ⊃ o_{N-1} ⊃ ... ⊃ o_2 in the 1..N realization.
// Even o_{2k} is the block on {1..k, k'..1'}; an odd o_{2k+1} below the top
// is o_{2k} plus the stabilizer directions of e_{k+1} + e_{(k+1)'}.
namespace gtb {

namespace {

class Chain {
 public:
  explicit Chain(const BCDIrrep& rep) : rep_(rep), N_(rep.alg.N()) {}

  int prime(int a) const { return N_ - a + 1; }
  const SparseMat& F(int a, int b) const { return rep_.gen(a, b); }

  // simple raising operators of o_M
  std::vector<SparseMat> raising(int M) const {
    std::vector<SparseMat> ops;
    const int m = M / 2;
    for (int i = 1; i < m; ++i) ops.push_back(F(i, i + 1));
    if (M % 2 == 0) {
      if (m >= 2) ops.push_back(F(m - 1, prime(m)));
    } else if (m >= 1) {
      ops.push_back(M == N_ ? F(m, m + 1) : F(m, m + 1) - F(m, prime(m + 1)));
    }
    return ops;
  }

  // o_M-highest vectors, grouped by the o_M weight
  const std::map<Vec, std::vector<Vec>>& highest(int M) {
    auto it = highest_.find(M);
    if (it != highest_.end()) return it->second;
    std::vector<SparseMat> ops = raising(M);
    std::vector<const SparseMat*> ptr;
    for (const auto& o : ops) ptr.push_back(&o);
    const std::size_t m = static_cast<std::size_t>(M / 2);
    std::map<Vec, std::vector<Vec>> groups;
    for (auto& v : joint_kernel(ptr, rep_.weight, m)) groups[key(v, m)].push_back(std::move(v));
    return highest_[M] = std::move(groups);
  }

  Vec key(const Vec& v, std::size_t m) const {
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) return Vec(rep_.weight[c].begin(), rep_.weight[c].begin() + static_cast<long>(m));
    throw std::logic_error("zero vector in the orthogonal chain");
  }

  // orthogonal projection onto the o_M-highest vectors
  Vec project(int M, const Vec& v) {
    if (raising(M).empty()) return v;
    const auto& groups = highest(M);
    auto it = groups.find(key(v, static_cast<std::size_t>(M / 2)));
    if (it == groups.end()) return Vec(v.size());
    const auto& B = it->second;
    const std::size_t d = B.size();
    std::vector<Vec> K(d, Vec(d));
    Vec rhs(d);
    std::vector<Vec> GB;
    for (const auto& b : B) GB.push_back(rep_.gram * b);
    for (std::size_t s = 0; s < d; ++s) {
      rhs[s] = dot(GB[s], v);
      for (std::size_t t = 0; t < d; ++t) K[s][t] = dot(GB[s], B[t]);
    }
    Vec c = solve(K, rhs);
    Vec out(v.size());
    for (std::size_t t = 0; t < d; ++t)
      if (c[t] != 0) out = out + c[t] * B[t];
    return out;
  }

  // o_{2k+1} -> o_{2k}, lowering μ_i (i = 1..k)
  Vec s_prime(int k, int i, const Vec& eta) {
    const SparseMat X = 2 * k + 1 == N_ ? F(k + 1, i) : F(k + 1, i) - F(prime(k + 1), i);
    const Vec mu = key(eta, static_cast<std::size_t>(k));
    const int Nl = 2 * k + 1;
    auto m = [&](int j) { return mu[static_cast<std::size_t>(j - 1)]; };
    Rat pi = 1;
    for (int j = i + 1; j <= k; ++j) pi *= m(i) - m(j) + j - i;
    for (int j0 = 1; j0 <= k; ++j0)
      if (j0 != i) pi *= m(i) + m(j0) + (Nl - j0 + 1) - i - 2;
    return pi * project(2 * k, X * eta);
  }

  // o_{2k} -> o_{2k-1}, lowering μ_i (i = 1..k-1)
  Vec s_plain(int k, int i, const Vec& eta) {
    const SparseMat X = F(k, i) + F(prime(k), i);
    const Vec mu = key(eta, static_cast<std::size_t>(k - 1));
    const int Nl = 2 * k;
    auto m = [&](int j) { return mu[static_cast<std::size_t>(j - 1)]; };
    Rat pi = 1;
    for (int j = i + 1; j <= k - 1; ++j) pi *= m(i) - m(j) + j - i;
    const Rat fi = 2 * (m(i) + k - i);
    pi *= fi * (fi + 1);
    for (int j0 = 1; j0 <= k - 1; ++j0)
      if (j0 != i) pi *= m(i) + m(j0) + (Nl - j0 + 1) - i - 2;
    return pi * project(2 * k - 1, X * eta);
  }

 private:
  const BCDIrrep& rep_;
  int N_;
  std::map<int, std::map<Vec, std::vector<Vec>>> highest_;
};

long steps(Doubled a, Doubled b) {
  if (a < b || (a - b) % 2 != 0) throw std::logic_error("bad exponent in the orthogonal basis");
  return (a - b) / 2;
}

}  // namespace

OrthGTBasis orth_gt_basis(const BCDIrrep& rep) {
  if (rep.alg.conv != Convention::S4) throw std::invalid_argument("orth_gt_basis: needs the 1..N realization");
  const int n = rep.alg.n;
  const bool B = rep.alg.series == Series::B;
  Chain ch(rep);
  OrthGTBasis out;
  out.patterns = enumerate(B ? Family::B4 : Family::D4, rep.lambda);
  for (const auto& p : out.patterns) {
    Vec v = unit_vec(rep.dim(), 0);
    auto power = [&](auto op, long e) {
      for (long t = 0; t < e && !is_zero(v); ++t) v = op(v);
    };
    if (B) {
      for (int k = n; k >= 1; --k) {
        for (int i = k; i >= 1; --i)
          power([&](const Vec& x) { return ch.s_prime(k, i, x); }, steps(p.lam(k, i), p.lamp(k, i)));
        for (int i = k - 1; i >= 1; --i)
          power([&](const Vec& x) { return ch.s_plain(k, i, x); }, steps(p.lamp(k, i), p.lam(k - 1, i)));
      }
    } else {
      for (int k = n - 1; k >= 1; --k) {
        for (int i = k; i >= 1; --i)
          power([&](const Vec& x) { return ch.s_plain(k + 1, i, x); }, steps(p.lam(k + 1, i), p.lamp(k, i)));
        for (int i = k; i >= 1; --i)
          power([&](const Vec& x) { return ch.s_prime(k, i, x); }, steps(p.lamp(k, i), p.lam(k, i)));
      }
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

bool orth_gram_ok(const BCDIrrep& rep, const OrthGTBasis& b) {
  std::vector<Vec> G;
  for (const auto& v : b.vectors) G.push_back(rep.gram * v);
  for (std::size_t s = 0; s < b.vectors.size(); ++s)
    for (std::size_t t = 0; t < b.vectors.size(); ++t) {
      const Rat x = dot(G[s], b.vectors[t]);
      if (s == t ? x <= 0 : x != 0) return false;
    }
  return true;
}

}  // namespace gtb
