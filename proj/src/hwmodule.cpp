#include "gtb/hwmodule.hpp"

#include <map>
#include <string>

#include "gtb/errors.hpp"

namespace gtb {

namespace {

using SV = std::map<std::size_t, Rat>;

void axpy(SV& y, const Rat& a, const SV& x) {
  if (a == 0) return;
  for (const auto& [i, v] : x) {
    auto [it, fresh] = y.emplace(i, a * v);
    if (!fresh) {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

// eigenvalue of ad(H) on a root vector x
Rat root_value(const SparseMat& h, const SparseMat& x) {
  SparseMat c = commutator(h, x);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (const auto& [j, v] : x.row(i)) return c.get(i, j) / v;
  throw std::invalid_argument("zero root vector");
}

}  // namespace

Vec flatten(const SparseMat& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, x] : m.row(i)) v[i * m.cols() + j] = x;
  return v;
}

HWModule build_hw_module(const std::vector<SparseMat>& H, const std::vector<SparseMat>& e,
                         const std::vector<SparseMat>& f, const Vec& lambda, std::size_t max_dim) {
  const std::size_t r = e.size(), nh = H.size();
  if (f.size() != r || lambda.size() != nh) throw std::invalid_argument("build_hw_module: size mismatch");

  // α_k(H_i) and h_k = [e_k, f_k] = Σ_i c_ki H_i
  std::vector<Vec> alpha(r, Vec(nh));
  std::vector<Vec> hco(r);
  {
    std::vector<Vec> flatH;
    for (const auto& h : H) flatH.push_back(flatten(h));
    Coordinates cart(flatH);
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t i = 0; i < nh; ++i) alpha[k][i] = root_value(H[i], e[k]);
      hco[k] = cart.coords(flatten(commutator(e[k], f[k])));
    }
  }
  auto hval = [&](std::size_t k, const Vec& w) {
    Rat s = 0;
    for (std::size_t i = 0; i < nh; ++i) s += hco[k][i] * w[i];
    return s;
  };

  std::vector<Vec> weight{lambda};
  std::vector<int> level{0};
  std::vector<int> orig_k{-1};
  std::vector<std::size_t> orig_w{0};
  std::vector<std::vector<SV>> ecol(r, std::vector<SV>(1)), fcol(r, std::vector<SV>(1));
  std::vector<SV> gram{{{0, Rat(1)}}};

  auto apply_f = [&](std::size_t k, const SV& x) {
    SV y;
    for (const auto& [b, v] : x) axpy(y, v, fcol[k][b]);
    return y;
  };
  auto inner = [&](std::size_t w, const SV& x) {
    Rat s = 0;
    for (const auto& [b, v] : x) {
      auto it = gram[w].find(b);
      if (it != gram[w].end()) s += v * it->second;
    }
    return s;
  };

  std::vector<std::size_t> prev{0};
  int lvl = 0;
  while (!prev.empty()) {
    ++lvl;
    std::map<Vec, std::vector<std::pair<std::size_t, std::size_t>>> groups;  // weight -> (k, w)
    for (std::size_t w : prev)
      for (std::size_t k = 0; k < r; ++k) {
        Vec nu = weight[w];
        for (std::size_t i = 0; i < nh; ++i) nu[i] -= alpha[k][i];
        groups[nu].push_back({k, w});
      }
    std::vector<std::size_t> fresh;
    // deterministic: highest weights first in reverse lexicographic order
    for (auto g = groups.rbegin(); g != groups.rend(); ++g) {
      const auto& cand = g->second;
      const std::size_t m = cand.size();
      // e_k f_k' w' for every ordered pair, as vectors one level up
      std::vector<Vec> G(m, Vec(m));
      for (std::size_t b = 0; b < m; ++b) {
        auto [kb, wb] = cand[b];
        for (std::size_t a = 0; a < m; ++a) {
          auto [ka, wa] = cand[a];
          SV v = apply_f(kb, ecol[ka][wb]);
          if (ka == kb) axpy(v, hval(ka, weight[wb]), SV{{wb, Rat(1)}});
          G[a][b] = inner(wa, v);
        }
      }
      Rref red = rref(G, m);
      if (red.pivots.empty()) {
        continue;
      }
      const std::size_t d = red.pivots.size();
      std::vector<Vec> GBB(d, Vec(d));
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t) GBB[s][t] = G[red.pivots[s]][red.pivots[t]];
      const std::size_t base = weight.size();
      if (base + d > max_dim)
        throw Refusal("module dimension exceeds the desk-scale cap " + std::to_string(max_dim));
      for (std::size_t s = 0; s < d; ++s) {
        auto [k, w] = cand[red.pivots[s]];
        weight.push_back(g->first);
        level.push_back(lvl);
        orig_k.push_back(static_cast<int>(k));
        orig_w.push_back(w);
        SV row;
        for (std::size_t t = 0; t < d; ++t)
          if (GBB[s][t] != 0) row[base + t] = GBB[s][t];
        gram.push_back(std::move(row));
        fresh.push_back(base + s);
      }
      for (auto& col : ecol) col.resize(weight.size());
      for (auto& col : fcol) col.resize(weight.size());
      for (std::size_t c = 0; c < m; ++c) {
        Vec rhs(d);
        for (std::size_t s = 0; s < d; ++s) rhs[s] = G[red.pivots[s]][c];
        Vec x = solve(GBB, rhs);
        auto [k, w] = cand[c];
        SV img;
        for (std::size_t s = 0; s < d; ++s)
          if (x[s] != 0) img[base + s] = x[s];
        fcol[k][w] = std::move(img);
      }
    }
    for (std::size_t b : fresh) {
      const std::size_t kb = static_cast<std::size_t>(orig_k[b]), wb = orig_w[b];
      for (std::size_t j = 0; j < r; ++j) {
        SV v = apply_f(kb, ecol[j][wb]);
        if (j == kb) axpy(v, hval(j, weight[wb]), SV{{wb, Rat(1)}});
        ecol[j][b] = std::move(v);
      }
    }
    prev = std::move(fresh);
  }

  HWModule mod;
  mod.dim = weight.size();
  mod.weight = std::move(weight);
  mod.level = std::move(level);
  mod.gram = SparseMat(mod.dim, mod.dim);
  for (std::size_t b = 0; b < mod.dim; ++b)
    for (const auto& [c, v] : gram[b]) mod.gram.set(b, c, v);
  for (std::size_t k = 0; k < r; ++k) {
    SparseMat E(mod.dim, mod.dim), F(mod.dim, mod.dim);
    for (std::size_t b = 0; b < mod.dim; ++b) {
      for (const auto& [i, v] : ecol[k][b]) E.set(i, b, v);
      for (const auto& [i, v] : fcol[k][b]) F.set(i, b, v);
    }
    mod.e.push_back(std::move(E));
    mod.f.push_back(std::move(F));
  }
  return mod;
}

LieImage::LieImage(std::vector<SparseMat> defining, std::vector<SparseMat> image) {
  if (defining.size() != image.size()) throw std::invalid_argument("LieImage: size mismatch");
  auto try_add = [&](const SparseMat& x, const SparseMat& y) {
    Vec fx = flatten(x);
    if (is_zero(fx)) return;
    if (!flat_.empty() && Coordinates(flat_).contains(fx)) return;
    flat_.push_back(std::move(fx));
    def_.push_back(x);
    img_.push_back(y);
  };
  for (std::size_t i = 0; i < defining.size(); ++i) try_add(defining[i], image[i]);
  for (std::size_t i = 0; i < def_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      SparseMat c = commutator(def_[i], def_[j]);
      Vec fc = flatten(c);
      if (is_zero(fc) || Coordinates(flat_).contains(fc)) continue;
      try_add(c, commutator(img_[i], img_[j]));
    }
}

SparseMat LieImage::represent(const SparseMat& x) const {
  if (img_.empty()) throw std::domain_error("LieImage: empty");
  Vec c = Coordinates(flat_).coords(flatten(x));
  SparseMat r(img_.front().rows(), img_.front().cols());
  for (std::size_t t = 0; t < c.size(); ++t)
    if (c[t] != 0) r += c[t] * img_[t];
  return r;
}

}  // namespace gtb
