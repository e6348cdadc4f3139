#include "gtb/yangian.hpp"

#include <stdexcept>

#include "gtb/gln.hpp"

namespace gtb {

namespace {

constexpr int kM = -1;  // index -n
constexpr int kP = 1;   // index n

bool integral(const Rat& x) { return x.get_den() == 1; }

// Π (u + c_i), coefficients from the constant term up
std::vector<Rat> prod_shifts(const std::vector<Rat>& c) {
  std::vector<Rat> p{1};
  for (const auto& ci : c) {
    std::vector<Rat> q(p.size() + 1);
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j] += ci * p[j];
      q[j + 1] += p[j];
    }
    p = std::move(q);
  }
  return p;
}

bool kills(const OpPoly& X, const Vec& v) {
  for (const auto& c : X.coeffs())
    if (!is_zero(c * v)) return false;
  return true;
}

OpPoly scalar_poly(std::size_t d, const std::vector<Rat>& c) { return OpPoly::scalar(d, c); }

Vec apply_at(const OpPoly& X, const Rat& u, const Vec& v) { return X.eval(u) * v; }

Vec lookup(const std::map<Gamma, Vec>& basis, const Gamma& g, std::size_t d) {
  auto it = basis.find(g);
  return it == basis.end() ? Vec(d) : it->second;
}

int theta(int sign, int a, int b) { return sign < 0 ? a * b : 1; }

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("twisted Yangian sign must be +1 or -1");
}

bool pairwise_disjoint(const std::vector<HWString>& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!disjoint(f[i], f[j])) return false;
  return true;
}

}  // namespace

std::size_t HWString::length() const {
  const Rat d = alpha - beta;
  if (!integral(d) || d < 0) throw std::invalid_argument("string needs alpha - beta in Z_+");
  return d.get_num().get_ui();
}

bool HWString::contains(const Rat& x) const {
  return integral(x - beta) && beta <= x && x < alpha;
}

std::vector<Rat> HWString::elements() const {
  std::vector<Rat> out;
  for (Rat x = beta; x < alpha; x += 1) out.push_back(x);
  return out;
}

bool disjoint(const HWString& a, const HWString& b) {
  if (a.empty() || b.empty() || !integral(a.beta - b.beta)) return true;
  return a.alpha <= b.beta || b.alpha <= a.beta;
}

bool string_general_position(const HWString& a, const HWString& b) {
  if (a.empty() || b.empty() || !integral(a.beta - b.beta)) return true;
  const bool union_is_string = b.beta <= a.alpha && a.beta <= b.alpha;
  if (!union_is_string) return true;
  const bool a_in_b = b.beta <= a.beta && a.alpha <= b.alpha;
  const bool b_in_a = a.beta <= b.beta && b.alpha <= a.alpha;
  return a_in_b || b_in_a;
}

bool irreducible_Y2(const std::vector<HWString>& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!string_general_position(f[i], f[j])) return false;
  return true;
}

bool irreducible_Yminus(const std::vector<HWString>& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!string_general_position(f[i], f[j]) || !string_general_position(f[i], f[j].reflected())) return false;
  return true;
}

bool irreducible_Yplus(const std::vector<HWString>& f, const Rat& delta) {
  if (!irreducible_Yminus(f)) return false;
  for (const auto& s : f)
    if (s.contains(-delta) || s.reflected().contains(-delta)) return false;
  return true;
}

YTensorModule build_tensor_module(const std::vector<HWString>& factors) {
  YTensorModule L;
  L.factors = factors;
  L.dim = 1;
  for (int a : {kM, kP})
    for (int b : {kM, kP}) L.T[{a, b}] = OpPoly::scalar(1, a == b ? std::vector<Rat>{1} : std::vector<Rat>{});
  for (const auto& s : factors) {
    const long m = static_cast<long>(s.length());
    const GlnIrrep g = build_irrep(2, {2 * m, 0});
    const std::size_t d = g.dim();
    const SparseMat I = SparseMat::identity(d);
    auto idx = [](int a) { return a == kM ? 1 : 2; };
    std::map<std::pair<int, int>, OpPoly> single;
    for (int a : {kM, kP})
      for (int b : {kM, kP}) {
        SparseMat E = g.gen(idx(a), idx(b));
        if (a == b) E += s.beta * I;
        single[{a, b}] = OpPoly::linear(E, a == b ? I : SparseMat(d, d));
      }
    std::map<std::pair<int, int>, OpPoly> next;
    for (int a : {kM, kP})
      for (int b : {kM, kP}) {
        OpPoly acc(L.dim * d, L.dim * d);
        for (int c : {kM, kP}) acc += kron(L.T.at({a, c}), single.at({c, b}));
        next[{a, b}] = std::move(acc);
      }
    L.T = std::move(next);
    L.dim *= d;
  }
  return L;
}

bool highest_vector_ok(const YTensorModule& L) {
  const Vec eta = L.eta();
  std::vector<Rat> al, be;
  for (const auto& s : L.factors) {
    al.push_back(s.alpha);
    be.push_back(s.beta);
  }
  return kills(L.t(kM, kP), eta) && kills(L.t(kM, kM) - scalar_poly(L.dim, prod_shifts(al)), eta) &&
         kills(L.t(kP, kP) - scalar_poly(L.dim, prod_shifts(be)), eta);
}

bool rtt_ok(const YTensorModule& L, const std::vector<std::pair<Rat, Rat>>& points) {
  for (const auto& [u, v] : points) {
    std::map<std::pair<int, int>, SparseMat> Tu, Tv;
    for (const auto& [key, p] : L.T) {
      Tu[key] = p.eval(u);
      Tv[key] = p.eval(v);
    }
    for (int a : {kM, kP})
      for (int b : {kM, kP})
        for (int c : {kM, kP})
          for (int d : {kM, kP}) {
            const SparseMat lhs = (u - v) * commutator(Tu[{a, b}], Tv[{c, d}]);
            const SparseMat rhs = Tu[{c, b}] * Tv[{a, d}] - Tv[{c, b}] * Tu[{a, d}];
            if (!(lhs == rhs)) return false;
          }
  }
  return true;
}

std::vector<Gamma> gamma_tuples(const std::vector<HWString>& f) {
  std::vector<Gamma> out{{}};
  for (const auto& s : f) {
    s.length();
    std::vector<Gamma> next;
    for (const auto& g : out)
      for (Rat x = s.beta; x <= s.alpha; x += 1) {
        Gamma h = g;
        h.push_back(x);
        next.push_back(std::move(h));
      }
    out = std::move(next);
  }
  return out;
}

std::map<Gamma, Vec> eta_basis(const YTensorModule& L) {
  if (!irreducible_Y2(L.factors)) throw Refusal("eta basis: the strings are not pairwise in general position");
  if (!pairwise_disjoint(L.factors)) throw Refusal("eta basis: the strings are not pairwise disjoint");
  std::map<Rat, SparseMat> at;
  auto op = [&](const Rat& u) -> const SparseMat& {
    auto it = at.find(u);
    if (it == at.end()) it = at.emplace(u, L.t(kP, kM).eval(u)).first;
    return it->second;
  };
  std::map<Gamma, Vec> out;
  for (const auto& g : gamma_tuples(L.factors)) {
    Vec v = L.eta();
    for (std::size_t i = 0; i < g.size(); ++i)
      for (Rat x = L.factors[i].beta; x < g[i]; x += 1) v = op(-x) * v;
    out.emplace(g, std::move(v));
  }
  return out;
}

ActtReport actt_check(const YTensorModule& L, const std::map<Gamma, Vec>& basis) {
  ActtReport r;
  const std::size_t d = L.dim;
  std::vector<Rat> ab;
  for (const auto& s : L.factors) {
    ab.push_back(s.alpha + 1);
    ab.push_back(s.beta);
  }
  const OpPoly top = scalar_poly(d, prod_shifts(ab));
  const OpPoly mix = L.t(kM, kP) * L.t(kP, kM).shifted(1);
  for (const auto& [g, v] : basis) {
    if (r.tnn && !kills(L.t(kP, kP) - scalar_poly(d, prod_shifts(g)), v)) r.tnn = false;
    std::vector<Rat> g1;
    for (const auto& x : g) g1.push_back(x + 1);
    if (r.tmm && !kills(scalar_poly(d, prod_shifts(g1)) * L.t(kM, kM) - top - mix, v)) r.tmm = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      Gamma up = g, dn = g;
      up[i] += 1;
      dn[i] -= 1;
      if (r.raise && !is_zero(apply_at(L.t(kP, kM), -g[i], v) - lookup(basis, up, d))) r.raise = false;
      Rat c = -1;
      for (const auto& s : L.factors) c *= (s.alpha - g[i] + 1) * (s.beta - g[i]);
      if (r.lower && !is_zero(apply_at(L.t(kM, kP), -g[i], v) - c * lookup(basis, dn, d))) r.lower = false;
    }
  }
  return r;
}

OpPoly quantum_det(const YTensorModule& L, int form) {
  if (form == 1) return L.t(kM, kM).shifted(1) * L.t(kP, kP) - L.t(kP, kM).shifted(1) * L.t(kM, kP);
  if (form == 2) return L.t(kM, kM) * L.t(kP, kP).shifted(1) - L.t(kM, kP) * L.t(kP, kM).shifted(1);
  throw std::invalid_argument("quantum_det: form is 1 or 2");
}

bool qdet_ok(const YTensorModule& L) {
  std::vector<Rat> ab;
  for (const auto& s : L.factors) {
    ab.push_back(s.alpha + 1);
    ab.push_back(s.beta);
  }
  const OpPoly target = scalar_poly(L.dim, prod_shifts(ab));
  const OpPoly d1 = quantum_det(L, 1);
  if (!(d1 == target) || !(quantum_det(L, 2) == target)) return false;
  for (const auto& [key, p] : L.T)
    for (const auto& c : p.coeffs())
      for (const auto& q : d1.coeffs())
        if (!commutator(c, q).is_zero()) return false;
  return true;
}

OpPoly twisted_snn(const YTensorModule& L, int sign, const Rat& delta) {
  check_sign(sign);
  const OpPoly& X = L.t(kP, kM);
  const OpPoly& H = L.t(kP, kP);
  const std::size_t d = L.dim;
  OpPoly r;
  if (sign < 0) {
    r = X * H.at_neg() - X.at_neg() * H;
  } else {
    r = scalar_poly(d, {-delta, 1}) * X * H.at_neg() + scalar_poly(d, {delta, 1}) * X.at_neg() * H;
  }
  r = r.divide_by_u();
  return L.k() % 2 ? Rat(-1) * r : r;
}

OpPoly twisted_sab(const YTensorModule& L, int sign, const Rat& delta, int a, int b) {
  check_sign(sign);
  const std::size_t d = L.dim;
  OpPoly acc(d, d);
  for (int c : {kM, kP}) {
    OpPoly term = L.t(a, c) * L.t(-b, -c).at_neg();
    if (sign > 0) term = term * scalar_poly(d, c == kP ? std::vector<Rat>{delta, 1} : std::vector<Rat>{1 - delta, 1});
    acc += Rat(theta(sign, b, c)) * term;
  }
  if (sign < 0) acc = scalar_poly(d, {rat(1, 2), 1}) * acc;
  return L.k() % 2 ? Rat(-1) * acc : acc;
}

bool snn_action_ok(const YTensorModule& L, const std::map<Gamma, Vec>& basis, int sign, const Rat& delta) {
  const OpPoly S = twisted_snn(L, sign, delta);
  for (const auto& [g, v] : basis)
    for (std::size_t i = 0; i < g.size(); ++i) {
      Rat c = 2;
      if (sign > 0) c *= -delta - g[i];
      for (std::size_t a = 0; a < g.size(); ++a)
        if (a != i) c *= -g[i] - g[a];
      Gamma up = g;
      up[i] += 1;
      if (!is_zero(apply_at(S, g[i], v) - c * lookup(basis, up, L.dim))) return false;
    }
  return true;
}

bool twisted_symmetry_ok(const YTensorModule& L, int sign, const Rat& delta) {
  const std::size_t d = L.dim;
  const OpPoly f = scalar_poly(d, {rat(1, 2), -1});
  const OpPoly two_u = scalar_poly(d, {0, 2});
  for (int a : {kM, kP})
    for (int b : {kM, kP}) {
      const OpPoly Q = f * twisted_sab(L, sign, delta, a, b);
      const OpPoly Qt = f * twisted_sab(L, sign, delta, -b, -a);
      const OpPoly lhs = Rat(theta(sign, a, b)) * two_u * Qt.at_neg();
      const OpPoly rhs = two_u * Q + Rat(sign) * (Q - Q.at_neg());
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool twisted_commute_ok(const YTensorModule& L, int sign, const Rat& delta) {
  const OpPoly S = twisted_snn(L, sign, delta);
  for (const auto& x : S.coeffs())
    for (const auto& y : S.coeffs())
      if (!commutator(x, y).is_zero()) return false;
  return true;
}

std::map<Gamma, Vec> twisted_basis(const YTensorModule& L, int sign, const Rat& delta) {
  check_sign(sign);
  const auto& f = L.factors;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (!disjoint(f[i], f[j])) throw Refusal("twisted basis: the strings are not pairwise disjoint");
      if (!disjoint(f[i], f[j].reflected()))
        throw Refusal("twisted basis: a string meets a reflected string");
    }
  const bool irr = sign < 0 ? irreducible_Yminus(f) : irreducible_Yplus(f, delta);
  if (!irr) throw Refusal("twisted basis: the module is not irreducible");
  const OpPoly S = twisted_snn(L, sign, delta);
  std::map<Rat, SparseMat> at;
  auto op = [&](const Rat& u) -> const SparseMat& {
    auto it = at.find(u);
    if (it == at.end()) it = at.emplace(u, S.eval(u)).first;
    return it->second;
  };
  std::map<Gamma, Vec> out;
  for (const auto& g : gamma_tuples(f)) {
    Vec v = L.eta();
    for (std::size_t i = 0; i < g.size(); ++i)
      for (Rat x = f[i].beta; x < g[i]; x += 1) v = op(x) * v;
    out.emplace(g, std::move(v));
  }
  return out;
}

std::size_t generated_algebra_dim(const std::vector<SparseMat>& gens, std::size_t dim) {
  // incremental echelon form over flattened matrices
  struct Echelon {
    std::vector<Vec> rows;
    std::vector<std::size_t> piv;
    bool insert(Vec v) {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (v[piv[r]] == 0) continue;
        const Rat c = v[piv[r]];
        for (std::size_t j = 0; j < v.size(); ++j)
          if (rows[r][j] != 0) v[j] -= c * rows[r][j];
      }
      std::size_t p = 0;
      while (p < v.size() && v[p] == 0) ++p;
      if (p == v.size()) return false;
      const Rat s = 1 / v[p];
      for (auto& x : v) x *= s;
      rows.push_back(std::move(v));
      piv.push_back(p);
      return true;
    }
  };
  auto flat = [dim](const SparseMat& m) {
    Vec v(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (const auto& [j, x] : m.row(i)) v[i * dim + j] = x;
    return v;
  };
  // drop dependent generators first
  Echelon ge;
  std::vector<SparseMat> g;
  for (const auto& m : gens)
    if (ge.insert(flat(m))) g.push_back(m);
  Echelon e;
  std::vector<SparseMat> found;
  const SparseMat I = SparseMat::identity(dim);
  e.insert(flat(I));
  found.push_back(I);
  const std::size_t full = dim * dim;
  for (std::size_t q = 0; q < found.size() && found.size() < full; ++q)
    for (std::size_t t = 0; t < g.size() && found.size() < full; ++t) {
      SparseMat m = g[t] * found[q];
      if (e.insert(flat(m))) found.push_back(std::move(m));
    }
  return found.size();
}

bool brute_irreducible_Y2(const YTensorModule& L) {
  std::vector<SparseMat> gens;
  for (const auto& [key, p] : L.T)
    for (const auto& c : p.coeffs()) gens.push_back(c);
  return generated_algebra_dim(gens, L.dim) == L.dim * L.dim;
}

bool brute_irreducible_twisted(const YTensorModule& L, int sign, const Rat& delta) {
  std::vector<SparseMat> gens;
  for (int a : {kM, kP})
    for (int b : {kM, kP}) {
      const OpPoly P = twisted_sab(L, sign, delta, a, b);
      for (const auto& c : P.coeffs()) gens.push_back(c);
    }
  return generated_algebra_dim(gens, L.dim) == L.dim * L.dim;
}

OpPoly in_basis(const OpPoly& X, const std::vector<Vec>& W) {
  const Coordinates C(W);
  const std::size_t m = W.size();
  if (X.is_zero()) return OpPoly(m, m);
  std::vector<SparseMat> out;
  for (const auto& c : X.coeffs()) {
    std::vector<Vec> cols;
    for (const auto& w : W) cols.push_back(C.coords(c * w));
    out.push_back(from_columns(m, cols));
  }
  return OpPoly(std::move(out));
}

}  // namespace gtb
