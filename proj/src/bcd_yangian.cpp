#include "gtb/bcd.hpp"
#include "gtb/yangian.hpp"

namespace gtb {

namespace {

struct Candidate {
  std::vector<HWString> factors;
  Rat delta;
};

// s_{n,-n}(u) ↦ c · u^{-2k} Z_{n,-n}(u) up to the (u+1/2) of C
Rat snn_scale(Series s) { return s == Series::C ? Rat(1) : s == Series::B ? Rat(-1) : Rat(-2); }

// u^{2k}(u+1/2) times the image of s_ab(u), from the stored Z operators
OpPoly image_sab(const ZabOperators& Z, Series s, int a, int b) {
  const OpPoly& z = Z.Z.at({a, b});
  const OpPoly h = OpPoly::scalar(z.rows(), {Rat(1, 2), Rat(1)});
  if (s == Series::C) return h * h * z;
  if (s == Series::B) return Rat(-1) * (h * z);
  return Rat(-1) * z;  // D stores (2u+1) Z
}

}  // namespace

bool zab_yangian_ok(Mickelsson& M, const ZabOperators& Z) {
  const auto& rep = M.rep();
  const Series s = rep.alg.series;
  const int n = rep.alg.n;
  const int sign = s == Series::C ? -1 : 1;
  const TwistedParams tp = twisted_params(s, rep.lambda, Z.mu);

  auto strings = [](const std::vector<std::pair<Rat, Rat>>& f) {
    std::vector<HWString> out;
    for (const auto& [a, b] : f) out.push_back({a, b});
    return out;
  };
  std::vector<Candidate> cands;
  if (s == Series::C) {
    cands.push_back({strings(tp.factors), 0});
  } else {
    cands.push_back({strings(tp.factors), tp.deltas.at(0)});
    if (s == Series::B && !tp.factors2.empty()) cands.push_back({strings(tp.factors2), tp.deltas.at(1)});
  }

  const Vec xi = xi_mu_bcd(M, Z.mu);
  std::vector<Vec> starts{xi};
  if (s == Series::B) starts.push_back(M.apply_z(n, n, 0, xi));
  std::vector<bool> used(starts.size(), false);

  const Coordinates co(Z.basis);
  const Rat c = snn_scale(s);
  std::vector<Vec> all;
  for (const auto& cand : cands) {
    const YTensorModule L = build_tensor_module(cand.factors);
    std::map<Gamma, Vec> XY;
    try {
      XY = twisted_basis(L, sign, cand.delta);
    } catch (const Refusal&) {
      return false;
    }
    std::vector<Vec> WY;
    for (const auto& [g, v] : XY) WY.push_back(v);
    std::map<std::pair<int, int>, OpPoly> Y;
    for (int a : {1, -1})
      for (int b : {1, -1}) Y[{a, b}] = in_basis(twisted_sab(L, sign, cand.delta, a, b), WY);

    bool matched = false;
    for (std::size_t st = 0; st < starts.size() && !matched; ++st) {
      if (used[st] || is_zero(starts[st])) continue;
      try {
        std::vector<Vec> WO;
        for (const auto& [g, unused] : XY) {
          Vec v = starts[st];
          for (std::size_t i = 0; i < g.size(); ++i)
            for (Rat x = cand.factors[i].beta; x < g[i]; x += 1) v = c * M.Z_at(n, x, v);
          WO.push_back(co.coords(v));
        }
        if (rank(WO) != WO.size()) continue;
        bool same = true;
        for (int a : {1, -1})
          for (int b : {1, -1})
            if (!(in_basis(image_sab(Z, s, a, b), WO) == Y.at({a, b}))) same = false;
        if (!same) continue;
        matched = used[st] = true;
        all.insert(all.end(), WO.begin(), WO.end());
      } catch (const std::domain_error&) {
        continue;
      }
    }
    if (!matched) return false;
  }
  return all.size() == Z.basis.size() && rank(all) == all.size();
}

}  // namespace gtb
