#include "gtb/bcd.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "gtb/hwmodule.hpp"

namespace gtb {

// ------------------------------------------------------------------ algebra

std::vector<int> ClassicalAlgebra::indices() const {
  std::vector<int> r;
  if (conv == Convention::S4) {
    for (int a = 1; a <= N(); ++a) r.push_back(a);
    return r;
  }
  for (int a = -n; a <= n; ++a)
    if (a != 0 || series == Series::B) r.push_back(a);
  return r;
}

bool ClassicalAlgebra::has_index(int a) const {
  if (conv == Convention::S4) return a >= 1 && a <= N();
  if (a == 0) return series == Series::B;
  return std::abs(a) <= n;
}

std::size_t ClassicalAlgebra::pos(int a) const {
  if (!has_index(a)) throw std::out_of_range("index " + std::to_string(a) + " not in the index set");
  if (conv == Convention::S4) return static_cast<std::size_t>(a - 1);
  if (series == Series::B || a < 0) return static_cast<std::size_t>(a + n);
  return static_cast<std::size_t>(a + n - 1);
}

int ClassicalAlgebra::theta(int a, int b) const {
  if (series != Series::C) return 1;
  return ((a > 0) == (b > 0)) ? 1 : -1;
}

int ClassicalAlgebra::prime(int a) const { return conv == Convention::S4 ? N() - a + 1 : -a; }

Rat ClassicalAlgebra::rho(int i) const {
  switch (series) {
    case Series::B: return Rat(-i) + Rat(1, 2);
    case Series::C: return Rat(-i);
    default: return Rat(-i + 1);
  }
}

SparseMat ClassicalAlgebra::F(int a, int b) const {
  const std::size_t d = static_cast<std::size_t>(N());
  SparseMat m(d, d);
  m.add(pos(a), pos(b), 1);
  if (conv == Convention::S4)
    m.add(pos(prime(b)), pos(prime(a)), -1);
  else
    m.add(pos(-b), pos(-a), Rat(-theta(a, b)));
  return m;
}

std::size_t ClassicalAlgebra::lie_dim() const {
  const std::size_t k = static_cast<std::size_t>(n);
  return series == Series::D ? k * (2 * k - 1) : k * (2 * k + 1);
}

std::string bcd_generator_label(int a, int b) { return "F_" + std::to_string(a) + "_" + std::to_string(b); }

Rat BCDIrrep::form(const Vec& u, const Vec& v) const { return dot(u, gram * v); }

// ------------------------------------------------------------ construction

namespace {

Family family_of(const ClassicalAlgebra& alg) {
  if (alg.conv == Convention::S4) return alg.series == Series::B ? Family::B4 : Family::D4;
  switch (alg.series) {
    case Series::B: return Family::B3;
    case Series::C: return Family::C3;
    default: return Family::D3;
  }
}

std::vector<SparseMat> simple_raising(const ClassicalAlgebra& alg) {
  std::vector<SparseMat> e;
  const int n = alg.n;
  for (int i = 1; i < n; ++i) e.push_back(alg.F(i, i + 1));
  if (alg.conv == Convention::S4) {
    if (alg.series == Series::B) e.push_back(alg.F(n, n + 1));
    else if (n >= 2) e.push_back(alg.F(n - 1, n + 1));
    return e;
  }
  switch (alg.series) {
    case Series::B: e.push_back(alg.F(0, 1)); break;
    case Series::C: e.push_back(alg.F(-1, 1)); break;
    default:
      if (n >= 2) e.push_back(alg.F(-1, 2));
  }
  return e;
}

}  // namespace

BCDIrrep build_bcd_irrep(const ClassicalAlgebra& alg, const DWeight& lambda, const DeskCaps& caps) {
  if (alg.n < 1) throw std::invalid_argument("rank must be positive");
  if (alg.series == Series::A) throw std::invalid_argument("build_bcd_irrep: series must be B, C or D");
  if (alg.series == Series::D && alg.n < 2) throw std::invalid_argument("D series needs n >= 2");
  if (alg.conv == Convention::S4 && alg.series == Series::C)
    throw std::invalid_argument("the 1..N convention is for orthogonal algebras only");
  if (static_cast<int>(lambda.size()) != alg.n) throw std::invalid_argument("weight has wrong length");
  if (alg.n > caps.max_rank)
    throw Refusal("rank " + std::to_string(alg.n) + " exceeds the desk-scale cap " + std::to_string(caps.max_rank));
  check_dominant(family_of(alg), lambda);
  Rat wd = alg.conv == Convention::S3 ? weyl_dim_nonpositive(alg.series, lambda) : weyl_dim(alg.series, lambda);
  if (wd > Rat(static_cast<long>(caps.max_dim)))
    throw Refusal("dimension " + to_string(wd) + " exceeds the desk-scale cap " + std::to_string(caps.max_dim));

  std::vector<SparseMat> H, e = simple_raising(alg), f;
  for (int i = 1; i <= alg.n; ++i) H.push_back(alg.F(i, i));
  for (const auto& x : e) f.push_back(x.transpose());
  Vec lam;
  for (auto x : lambda) lam.push_back(half(x));
  HWModule mod = build_hw_module(H, e, f, lam, caps.max_dim);
  if (Rat(static_cast<long>(mod.dim)) != wd) throw std::logic_error("module dimension differs from the Weyl formula");

  BCDIrrep rep;
  rep.alg = alg;
  rep.lambda = lambda;
  rep.weight = mod.weight;
  rep.level = mod.level;
  rep.gram = mod.gram;

  std::vector<SparseMat> def = e, img = mod.e;
  def.insert(def.end(), f.begin(), f.end());
  img.insert(img.end(), mod.f.begin(), mod.f.end());
  for (int i = 0; i < alg.n; ++i) {
    def.push_back(H[static_cast<std::size_t>(i)]);
    Vec d;
    for (const auto& w : mod.weight) d.push_back(w[static_cast<std::size_t>(i)]);
    img.push_back(SparseMat::diag(d));
  }
  LieImage li(def, img);
  if (li.algebra_dim() != alg.lie_dim()) throw std::logic_error("generators do not span the Lie algebra");
  for (int a : alg.indices())
    for (int b : alg.indices()) rep.F.emplace(std::make_pair(a, b), li.represent(alg.F(a, b)));
  return rep;
}

bool bcd_commutators_ok(const BCDIrrep& rep) {
  // an independent set of generators suffices
  std::vector<std::pair<int, int>> keys;
  std::vector<Vec> flat;
  for (const auto& [k, m] : rep.F) {
    Vec v = flatten(rep.alg.F(k.first, k.second));
    if (is_zero(v)) {
      if (!m.is_zero()) return false;
      continue;
    }
    if (!flat.empty() && Coordinates(flat).contains(v)) continue;
    flat.push_back(v);
    keys.push_back(k);
  }
  Coordinates co(flat);
  // every F is the image of its defining matrix
  for (const auto& [k, m] : rep.F) {
    Vec c = co.coords(flatten(rep.alg.F(k.first, k.second)));
    SparseMat r(rep.dim(), rep.dim());
    for (std::size_t t = 0; t < c.size(); ++t)
      if (c[t] != 0) r += c[t] * rep.gen(keys[t].first, keys[t].second);
    if (!(r == m)) return false;
  }
  for (std::size_t s = 0; s < keys.size(); ++s)
    for (std::size_t t = 0; t < s; ++t) {
      const auto [a, b] = keys[s];
      const auto [c, d] = keys[t];
      SparseMat lhs = commutator(rep.gen(a, b), rep.gen(c, d));
      Vec co_rhs = co.coords(flatten(commutator(rep.alg.F(a, b), rep.alg.F(c, d))));
      SparseMat rhs(rep.dim(), rep.dim());
      for (std::size_t q = 0; q < co_rhs.size(); ++q)
        if (co_rhs[q] != 0) rhs += co_rhs[q] * rep.gen(keys[q].first, keys[q].second);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool bcd_highest_vector_ok(const BCDIrrep& rep) {
  Vec xi = unit_vec(rep.dim(), 0);
  for (int a : rep.alg.indices())
    for (int b : rep.alg.indices())
      if (a < b && !is_zero(rep.gen(a, b) * xi)) return false;
  for (int i = 1; i <= rep.alg.n; ++i)
    if (rep.gen(i, i) * xi != half(rep.lambda[static_cast<std::size_t>(i - 1)]) * xi) return false;
  return rep.form(xi, xi) == 1;
}

bool bcd_adjoint_ok(const BCDIrrep& rep) {
  for (const auto& [k, m] : rep.F)
    if (!(m.transpose() * rep.gram == rep.gram * rep.gen(k.second, k.first))) return false;
  return true;
}

// ---------------------------------------------------------- right operators

void ROp::add(SparseMat m, std::function<std::optional<Rat>(const Vec&)> right) {
  if (m.is_zero()) return;
  RightTerm t;
  t.live.assign(m.cols(), false);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) t.live[j] = true;
  t.m = std::move(m);
  t.right = std::move(right);
  terms_.push_back(std::move(t));
}

Vec ROp::apply(const std::vector<Vec>& weights, const Vec& v) const {
  Vec out(dim_);
  for (const auto& t : terms_) {
    Vec s(dim_);
    bool any = false;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (v[c] == 0 || !t.live[c]) continue;
      auto r = t.right(weights[c]);
      if (!r) throw SingularDenominator("right denominator vanishes on the input vector");
      if (*r == 0) continue;
      s[c] = v[c] * *r;
      any = true;
    }
    if (any) out = out + t.m * s;
  }
  return out;
}

ROp ROp::scaled(const Rat& c) const {
  ROp r = *this;
  for (auto& t : r.terms_) t.m *= c;
  return r;
}

SparseMat ROp::realized(const std::vector<Vec>& weights, std::vector<bool>* singular) const {
  SparseMat out(dim_, dim_);
  if (singular) singular->assign(dim_, false);
  for (const auto& t : terms_) {
    Vec d(dim_);
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!t.live[c]) continue;
      auto r = t.right(weights[c]);
      if (r)
        d[c] = *r;
      else if (singular)
        (*singular)[c] = true;
    }
    out += t.m * SparseMat::diag(d);
  }
  if (singular)
    for (std::size_t c = 0; c < dim_; ++c)
      if ((*singular)[c])
        for (std::size_t i = 0; i < dim_; ++i) out.set(i, c, 0);
  return out;
}

// ----------------------------------------------------------- poly vectors

PolyVec poly_apply(const SparseMat& m, const PolyVec& p) {
  PolyVec r;
  for (const auto& c : p) r.push_back(m * c);
  return r;
}

Vec poly_eval(const PolyVec& p, const Rat& u) {
  if (p.empty()) return {};
  Vec r(p.front().size());
  for (std::size_t k = p.size(); k-- > 0;) r = u * r + p[k];
  return r;
}

Vec poly_coeff(const PolyVec& p, std::size_t k, std::size_t dim) { return k < p.size() ? p[k] : Vec(dim); }

int poly_degree(const PolyVec& p) {
  for (std::size_t k = p.size(); k-- > 0;)
    if (!is_zero(p[k])) return static_cast<int>(k);
  return -1;
}

namespace {

void poly_add(PolyVec& acc, const Poly& c, const Vec& v) {
  if (acc.size() < c.size()) acc.resize(c.size(), Vec(v.size()));
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) acc[k] = acc[k] + c[k] * v;
}

Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// (u + c)
Poly lin(const Rat& c) { return {c, Rat(1)}; }

// Split v by the first m weight coordinates of its support.
std::vector<std::pair<Vec, Vec>> weight_parts(const std::vector<Vec>& weights, const Vec& v, std::size_t m) {
  std::map<Vec, Vec> parts;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    Vec key(weights[c].begin(), weights[c].begin() + static_cast<long>(m));
    auto [it, fresh] = parts.emplace(key, Vec(v.size()));
    it->second[c] = v[c];
  }
  return {parts.begin(), parts.end()};
}

// Σ_parts coeff(ω) · op(v_ω); coeff is only evaluated where op(v_ω) ≠ 0.
// strict: a vanishing denominator counts even where op(v_ω) = 0
template <class Op, class Coeff>
void scaled_apply(PolyVec& acc, const std::vector<Vec>& weights, const Vec& v, Op op, Coeff coeff,
                  bool strict = true) {
  const std::size_t nw = weights.empty() ? 0 : weights.front().size();
  for (const auto& [w, part] : weight_parts(weights, v, nw)) {
    std::optional<Poly> c = coeff(w);
    if (!c && strict) throw SingularDenominator("denominator vanishes on the input vector");
    Vec y = op(part);
    if (is_zero(y)) continue;
    if (!c) throw SingularDenominator("denominator vanishes on the input vector");
    poly_add(acc, *c, y);
  }
}

}  // namespace

// Null space of stacked operators, computed separately on each group of
// basis vectors sharing the first m weight coordinates (all ops must be
// homogeneous for that grading).
std::vector<Vec> joint_kernel(const std::vector<const SparseMat*>& ops, const std::vector<Vec>& weights,
                              std::size_t m) {
  const std::size_t dim = weights.size();
  std::vector<Vec> out;
  if (ops.empty()) {
    for (std::size_t c = 0; c < dim; ++c) out.push_back(unit_vec(dim, c));
    return out;
  }
  std::map<Vec, std::vector<std::size_t>> groups;
  for (std::size_t c = 0; c < dim; ++c)
    groups[Vec(weights[c].begin(), weights[c].begin() + static_cast<long>(m))].push_back(c);
  std::vector<SparseMat> tr;
  for (auto* o : ops) tr.push_back(o->transpose());
  for (auto g = groups.rbegin(); g != groups.rend(); ++g) {
    const auto& cols = g->second;
    std::vector<Vec> rows;
    for (const auto& t : tr) {
      std::map<std::size_t, Vec> by_row;
      for (std::size_t q = 0; q < cols.size(); ++q)
        for (const auto& [i, v] : t.row(cols[q])) {
          auto [it, fresh] = by_row.emplace(i, Vec(cols.size()));
          it->second[q] = v;
        }
      for (auto& [i, r] : by_row) rows.push_back(std::move(r));
    }
    SparseMat m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t q = 0; q < cols.size(); ++q) m.set(i, q, rows[i][q]);
    for (const auto& k : nullspace(m)) {
      Vec v(dim);
      for (std::size_t q = 0; q < cols.size(); ++q) v[cols[q]] = k[q];
      out.push_back(std::move(v));
    }
  }
  return out;
}


// ------------------------------------------------------------- Mickelsson

Mickelsson::Mickelsson(const BCDIrrep& rep) : rep_(rep) {
  if (rep.alg.conv != Convention::S3) throw std::invalid_argument("Mickelsson: needs the -n..n realization");
}

std::vector<int> Mickelsson::inner(int k) const {
  std::vector<int> r;
  for (int j = -k + 1; j <= k - 1; ++j)
    if (j != 0 || rep_.alg.series == Series::B) r.push_back(j);
  return r;
}

Rat Mickelsson::f(int j, const Vec& w) const {
  if (j == 0) return Rat(-1, 2);
  const int a = std::abs(j);
  Rat v = w[static_cast<std::size_t>(a - 1)] + rep_.alg.rho(a);
  return j > 0 ? v : Rat(-v);
}

const ROp& Mickelsson::z(int k, int x, int y) {
  auto key = std::make_tuple(k, x, y);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const auto& alg = rep_.alg;
  const bool D = alg.series == Series::D;
  const std::vector<int> I = inner(k);
  auto in_I = [&](int j) { return std::find(I.begin(), I.end(), j) != I.end(); };
  ROp op(rep_.dim());

  auto chain_product = [&](int from, const std::vector<int>& chain, int to) {
    SparseMat p = SparseMat::identity(rep_.dim());
    int cur = from;
    for (int j : chain) {
      p = p * rep_.gen(cur, j);
      cur = j;
      if (p.is_zero()) return p;
    }
    return p * rep_.gen(cur, to);
  };

  if (in_I(x) && std::abs(y) == k) {
    // z_ia: chains i > i_1 > ... > i_s > -k inside I, times the normalizing product
    const int i = x, a = y;
    std::vector<int> below;
    for (int j : I)
      if (j < i) below.push_back(j);
    std::sort(below.rbegin(), below.rend());
    const std::size_t L = below.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << L); ++mask) {
      std::vector<int> chain, rest;
      for (std::size_t t = 0; t < L; ++t) ((mask >> t) & 1 ? chain : rest).push_back(below[t]);
      SparseMat p = chain_product(i, chain, a);
      if (p.is_zero()) continue;
      const bool hat_in_chain = D && std::find(chain.begin(), chain.end(), -i) != chain.end();
      op.add(std::move(p), [this, i, rest, D, hat_in_chain](const Vec& w) -> std::optional<Rat> {
        const Rat fi = f(i, w);
        Rat r = 1;
        for (int j : rest)
          if (!(D && j == -i)) r *= fi - f(j, w);
        if (hat_in_chain) {
          Rat d = fi - f(-i, w);
          if (d == 0) return std::nullopt;
          r /= d;
        }
        return r;
      });
    }
  } else if (std::abs(x) == k && in_I(y)) {
    // z_ai = (-1)^{k-i} z_{-i,-a}, times sgn a in the symplectic case
    const int a = x, i = y;
    int sign = ((k - i) % 2 == 0) ? 1 : -1;
    if (alg.series == Series::C && a < 0) sign = -sign;
    op = z(k, -i, -a).scaled(Rat(sign));
  } else if (x == k && y == -k) {
    // z_{k,-k}: all chains through I, complement product; D divides by 2 f_k
    const std::size_t L = I.size();
    std::vector<int> desc(I.rbegin(), I.rend());
    for (std::size_t mask = 0; mask < (std::size_t(1) << L); ++mask) {
      std::vector<int> chain, rest;
      for (std::size_t t = 0; t < L; ++t) ((mask >> t) & 1 ? chain : rest).push_back(desc[t]);
      SparseMat p = chain_product(k, chain, -k);
      if (p.is_zero()) continue;
      op.add(std::move(p), [this, k, rest, D](const Vec& w) -> std::optional<Rat> {
        const Rat fk = f(k, w);
        Rat r = 1;
        for (int j : rest) r *= fk - f(j, w);
        if (D) {
          if (fk == 0) return std::nullopt;
          r /= 2 * fk;
        }
        return r;
      });
    }
  } else {
    throw std::invalid_argument("z: bad indices");
  }
  return cache_[key] = std::move(op);
}


LoweringOpBCD Mickelsson::lowering(int k, int x, int y) {
  LoweringOpBCD r;
  r.level = k;
  r.i = x;
  r.a = y;
  if (x == k && y == -k)
    r.kind = ZKindBCD::Zkk;
  else if (std::abs(y) == k)
    r.kind = ZKindBCD::Zia;
  else
    r.kind = ZKindBCD::Zai;
  r.realized = z(k, x, y).realized(rep_.weight, &r.singular);
  return r;
}

Vec Mickelsson::apply_z(int k, int x, int y, const Vec& v) { return z(k, x, y).apply(rep_.weight, v); }

namespace {

Vec apply_power(Mickelsson& M, int k, int x, int y, long e, Vec v) {
  if (e < 0) throw std::logic_error("negative exponent");
  for (long t = 0; t < e && !is_zero(v); ++t) v = M.apply_z(k, x, y, v);
  return v;
}

long hdiff(Doubled a, Doubled b) {
  if ((a - b) % 2 != 0) throw std::logic_error("exponent is not an integer");
  return (a - b) / 2;
}

}  // namespace

PolyVec Mickelsson::interp(int k, const Vec& v) {
  const bool D = rep_.alg.series == Series::D;
  const int top = D ? k - 1 : k;
  PolyVec acc;
  for (int i = 1; i <= top; ++i) {
    auto op = [&](const Vec& x) {
      if (i == k) return apply_z(k, k, -k, x);
      return apply_z(k, k, i, apply_z(k, i, -k, x));
    };
    auto coeff = [&](const Vec& w) -> std::optional<Poly> {
      const Rat gi = g(i, w);
      Poly p{Rat(1)};
      for (int j = 1; j <= top; ++j) {
        if (j == i) continue;
        const Rat gj = g(j, w);
        const Rat d = gi * gi - gj * gj;
        if (d == 0) return std::nullopt;
        p = pmul(p, Poly{Rat(-gj * gj / d), Rat(0), Rat(1 / d)});
      }
      return p;
    };
    scaled_apply(acc, rep_.weight, v, op, coeff);
  }
  return acc;
}

PolyVec Mickelsson::zab_raw(int k, int a, int b, const Vec& v) {
  const Series s = rep_.alg.series;
  const std::vector<int> I = inner(k);
  PolyVec acc;
  auto prod = [&](const Vec& w) {
    Poly p{Rat(1)};
    for (int i : I) p = pmul(p, lin(g(i, w)));
    return p;
  };
  scaled_apply(
      acc, rep_.weight, v, [&](const Vec& x) { return rep_.gen(a, b) * x; },
      [&](const Vec& w) { return std::optional<Poly>(prod(w)); });
  if (a == b) {
    const Rat c = rep_.alg.rho(k) + Rat(1, 2);
    scaled_apply(
        acc, rep_.weight, v, [](const Vec& x) { return x; },
        [&](const Vec& w) { return std::optional<Poly>(pmul(lin(c), prod(w))); });
  }
  for (int i : I) {
    auto op = [&](const Vec& x) { return apply_z(k, a, i, apply_z(k, i, b, x)); };
    auto coeff = [&](const Vec& w) -> std::optional<Poly> {
      const Rat gi = g(i, w);
      Poly p{Rat(-1)};
      if (s == Series::D) p = pmul(p, lin(g(-i, w)));
      for (int j : I) {
        if (j == i || (s == Series::D && j == -i)) continue;
        const Rat d = gi - g(j, w);
        if (d == 0) return std::nullopt;
        p = pmul(p, Poly{Rat(g(j, w) / d), Rat(1 / d)});
      }
      return p;
    };
    // B, μ_1 = 0: g_{±1} = g_0 = 0 and the offending terms act by zero
    scaled_apply(acc, rep_.weight, v, op, coeff, s != Series::B);
  }
  if (s != Series::C)
    for (auto& c : acc) c = Rat(-1) * c;
  return acc;
}

PolyVec Mickelsson::zab(int k, int a, int b, const Vec& v) {
  PolyVec p = zab_raw(k, a, b, v);
  if (rep_.alg.series != Series::D) return p;
  const int d = poly_degree(p);
  if (d < 0) return {};
  // p = (2u + 1) q
  PolyVec q(static_cast<std::size_t>(d), Vec(v.size()));
  for (int t = d; t >= 1; --t) {
    Vec next = t < d ? q[static_cast<std::size_t>(t)] : Vec(v.size());
    q[static_cast<std::size_t>(t - 1)] = Rat(1, 2) * (p[static_cast<std::size_t>(t)] - next);
  }
  if (d == 0 || p[0] != q[0]) throw std::logic_error("Z_ab is not divisible by 2u+1");
  return q;
}

Vec Mickelsson::Z_at(int k, const Rat& u0, const Vec& v) {
  PolyVec p;
  try {
    p = interp(k, v);
  } catch (const SingularDenominator&) {
    p = zab(k, k, -k, v);
  }
  return p.empty() ? Vec(v.size()) : poly_eval(p, u0);
}

std::vector<const SparseMat*> Mickelsson::raising(int k) const {
  // simple raising operators of g_{k-1}
  std::vector<const SparseMat*> ops;
  for (int i = 1; i + 1 <= k - 1; ++i) ops.push_back(&rep_.gen(i, i + 1));
  switch (rep_.alg.series) {
    case Series::B:
      if (k >= 2) ops.push_back(&rep_.gen(0, 1));
      break;
    case Series::C:
      if (k >= 2) ops.push_back(&rep_.gen(-1, 1));
      break;
    default:
      if (k >= 3) ops.push_back(&rep_.gen(-1, 2));
  }
  return ops;
}

const std::vector<Vec>& Mickelsson::highest(int k) {
  auto it = highest_.find(k);
  if (it != highest_.end()) return it->second;
  return highest_[k] = joint_kernel(raising(k), rep_.weight, static_cast<std::size_t>(rep_.alg.n));
}

Vec Mickelsson::weight_of(const Vec& v) const {
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v[c] != 0) return rep_.weight[c];
  throw std::invalid_argument("zero vector has no weight");
}

std::vector<Vec> Mickelsson::highest_mu(int k, const DWeight& mu) {
  std::vector<Vec> out;
  for (const auto& v : highest(k)) {
    Vec w = weight_of(v);
    bool ok = true;
    for (int i = 0; i + 1 < k; ++i)
      if (w[static_cast<std::size_t>(i)] != half(mu[static_cast<std::size_t>(i)])) ok = false;
    if (ok) out.push_back(v);
  }
  return out;
}

// ------------------------------------------------------------------ checks

namespace {

Vec eps(int j, std::size_t n) {
  Vec e(n);
  if (j != 0) e[static_cast<std::size_t>(std::abs(j) - 1)] = j > 0 ? 1 : -1;
  return e;
}

bool killed(const std::vector<const SparseMat*>& ops, const Vec& v) {
  for (auto* o : ops)
    if (!is_zero(*o * v)) return false;
  return true;
}

bool has_weight(const std::vector<Vec>& weights, const Vec& v, const Vec& w) {
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v[c] != 0 && weights[c] != w) return false;
  return true;
}

}  // namespace

bool zia_weight_shift_ok(Mickelsson& M) {
  const int n = M.rep().alg.n;
  const auto nn = static_cast<std::size_t>(n);
  const auto ops = M.raising(n);
  for (const auto& v : M.highest(n)) {
    const Vec w = M.weight_of(v);
    for (int i : M.inner(n))
      for (int a : {n, -n}) {
        try {
          Vec y = M.apply_z(n, i, a, v);
          if (!is_zero(y) && (!killed(ops, y) || !has_weight(M.rep().weight, y, w + eps(i, nn) - eps(a, nn))))
            return false;
          y = M.apply_z(n, a, i, v);
          if (!is_zero(y) && (!killed(ops, y) || !has_weight(M.rep().weight, y, w + eps(a, nn) - eps(i, nn))))
            return false;
        } catch (const SingularDenominator&) {
        }
      }
  }
  return true;
}

bool zia_commute_ok(Mickelsson& M) {
  const int n = M.rep().alg.n;
  const auto I = M.inner(n);
  for (const auto& v : M.highest(n))
    for (int i : I)
      for (int j : I) {
        if (j <= i || i + j == 0) continue;
        for (int a : {n, -n}) {
          try {
            if (M.apply_z(n, i, a, M.apply_z(n, j, a, v)) != M.apply_z(n, j, a, M.apply_z(n, i, a, v))) return false;
            if (M.apply_z(n, a, i, M.apply_z(n, a, j, v)) != M.apply_z(n, a, j, M.apply_z(n, a, i, v))) return false;
          } catch (const SingularDenominator&) {
          }
        }
      }
  return true;
}

std::size_t interp_node_check(Mickelsson& M) {
  const int n = M.rep().alg.n;
  const int top = M.rep().alg.series == Series::D ? n - 1 : n;
  std::size_t count = 0;
  for (const auto& v : M.highest(n)) {
    const Vec w = M.weight_of(v);
    for (int i = 1; i <= top; ++i) {
      Vec lhs, rhs;
      try {
        PolyVec p = M.interp(n, v);
        lhs = p.empty() ? Vec(v.size()) : poly_eval(p, M.g(i, w));
      } catch (const SingularDenominator&) {
        continue;
      }
      rhs = i == n ? M.apply_z(n, n, -n, v) : M.apply_z(n, n, i, M.apply_z(n, i, -n, v));
      if (lhs != rhs) throw std::logic_error("Z(g_" + std::to_string(i) + ") differs from z_ni z_i,-n");
      ++count;
    }
  }
  return count;
}

// ------------------------------------------------------------------- bases

MultiplicityBasis multiplicity_basis(Mickelsson& M, const DWeight& mu) {
  const auto& rep = M.rep();
  const Series s = rep.alg.series;
  const int n = rep.alg.n;
  const DWeight& lam = rep.lambda;
  auto L = [&](int i) { return lam[static_cast<std::size_t>(i - 1)]; };
  auto Mu = [&](int i) { return mu[static_cast<std::size_t>(i - 1)]; };
  MultiplicityBasis out;
  out.spec = branch_BCD(s, lam, mu);
  const Rat ln = half(L(n)) + rep.alg.rho(n) + Rat(1, 2);
  for (std::size_t t = 0; t < out.spec.tuples.size(); ++t) {
    Vec v = unit_vec(rep.dim(), 0);
    if (s == Series::D) {
      const DWeight& nu = out.spec.tuples[t];
      auto Nu = [&](int i) { return i == 0 ? std::max(L(1), Mu(1)) : nu[static_cast<std::size_t>(i - 1)]; };
      for (long c = hdiff(Nu(n - 1), L(n)) - 1; c >= 0; --c) v = M.Z_at(n, ln + c, v);
      for (int i = n - 1; i >= 1; --i) {
        v = apply_power(M, n, i, -n, hdiff(Nu(i - 1), L(i)), v);
        v = apply_power(M, n, n, i, hdiff(Nu(i - 1), Mu(i)), v);
      }
    } else {
      const DWeight& nu = s == Series::B ? out.spec.nu[t] : out.spec.tuples[t];
      auto Nu = [&](int i) { return nu[static_cast<std::size_t>(i - 1)]; };
      for (long c = hdiff(Nu(n), L(n)) - 1; c >= 0; --c) v = M.Z_at(n, ln + c, v);
      for (int i = n - 1; i >= 1; --i) {
        v = apply_power(M, n, i, -n, hdiff(Nu(i), L(i)), v);
        v = apply_power(M, n, n, i, hdiff(Nu(i), Mu(i)), v);
      }
      if (s == Series::B) v = apply_power(M, n, n, 0, out.spec.sigma[t], v);
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

Vec xi_mu_bcd(Mickelsson& M, const DWeight& mu) {
  const auto& lam = M.rep().lambda;
  const int n = M.rep().alg.n;
  Vec v = unit_vec(M.rep().dim(), 0);
  for (int i = n - 1; i >= 1; --i) {
    const auto li = lam[static_cast<std::size_t>(i - 1)], mi = mu[static_cast<std::size_t>(i - 1)];
    const auto m = std::max(li, mi);
    v = apply_power(M, n, i, -n, hdiff(m, li), v);
    v = apply_power(M, n, n, i, hdiff(m, mi), v);
  }
  return v;
}

GTBasisBCD gt_basis_bcd(Mickelsson& M) {
  const auto& rep = M.rep();
  const Series s = rep.alg.series;
  const int n = rep.alg.n;
  const Family fam = s == Series::B ? Family::B3 : s == Series::C ? Family::C3 : Family::D3;
  GTBasisBCD out;
  out.patterns = enumerate(fam, rep.lambda);
  for (const auto& p : out.patterns) {
    Vec v = unit_vec(rep.dim(), 0);
    if (s == Series::D) {
      for (int k = n; k >= 2; --k) {
        auto lp = [&](int i) { return i == 0 ? std::max(p.lam(k, 1), p.lam(k - 1, 1)) : p.lamp(k - 1, i); };
        const Rat lkk = half(p.lam(k, k)) + rep.alg.rho(k) + Rat(1, 2);
        for (long c = hdiff(p.lamp(k - 1, k - 1), p.lam(k, k)) - 1; c >= 0; --c) v = M.Z_at(k, lkk + c, v);
        for (int i = k - 1; i >= 1; --i) {
          v = apply_power(M, k, i, -k, hdiff(lp(i - 1), p.lam(k, i)), v);
          v = apply_power(M, k, k, i, hdiff(lp(i - 1), p.lam(k - 1, i)), v);
        }
      }
    } else {
      for (int k = n; k >= 1; --k) {
        const Rat lkk = half(p.lam(k, k)) + rep.alg.rho(k) + Rat(1, 2);
        for (long c = hdiff(p.lamp(k, k), p.lam(k, k)) - 1; c >= 0; --c) v = M.Z_at(k, lkk + c, v);
        for (int i = k - 1; i >= 1; --i) {
          v = apply_power(M, k, i, -k, hdiff(p.lamp(k, i), p.lam(k, i)), v);
          v = apply_power(M, k, k, i, hdiff(p.lamp(k, i), p.lam(k - 1, i)), v);
        }
        if (s == Series::B) v = apply_power(M, k, k, 0, p.sigma[static_cast<std::size_t>(k - 1)], v);
      }
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

bool fnn_action_check(Mickelsson& M, const DWeight& mu) {
  const auto& rep = M.rep();
  if (rep.alg.series != Series::C) throw std::invalid_argument("fnn_action_check: C series only");
  const int n = rep.alg.n;
  const DWeight& lam = rep.lambda;
  const BranchSpec spec = branch_BCD(Series::C, lam, mu);
  const Vec xm = xi_mu_bcd(M, mu);
  std::vector<Rat> beta(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto li = lam[static_cast<std::size_t>(i - 1)];
    const Doubled top = i < n ? std::max(li, mu[static_cast<std::size_t>(i - 1)]) : li;
    beta[static_cast<std::size_t>(i - 1)] = half(top) - i + Rat(1, 2);
  }
  auto gamma = [&](const DWeight& nu, int i) -> Rat { return half(nu[static_cast<std::size_t>(i - 1)]) - i + Rat(1, 2); };
  std::map<DWeight, Vec> xs;
  for (const auto& nu : spec.tuples) {
    Vec v = xm;
    for (int i = 1; i <= n; ++i)
      for (Rat j = beta[static_cast<std::size_t>(i - 1)]; j < gamma(nu, i); j += 1) v = M.Z_at(n, j, v);
    if (is_zero(v)) throw std::logic_error("xi_nu vanishes");
    xs.emplace(nu, std::move(v));
  }
  Rat sl = 0, sm = 0;
  for (auto x : lam) sl += half(x);
  for (auto x : mu) sm += half(x);
  for (const auto& [nu, v] : xs) {
    Rat snu = 0;
    for (auto x : nu) snu += half(x);
    if (rep.gen(n, n) * v != (2 * snu - sl - sm) * v) throw std::logic_error("F_nn eigenvalue mismatch");
    Vec rhs(v.size());
    for (int i = 1; i <= n; ++i) {
      const Rat gi = gamma(nu, i);
      Vec zi = M.Z_at(n, gi, v);
      DWeight up = nu;
      up[static_cast<std::size_t>(i - 1)] += 2;
      auto it = xs.find(up);
      if (it != xs.end() ? zi != it->second : !is_zero(zi))
        throw std::logic_error("Z(gamma_i) xi_nu is not xi_{nu+delta_i}");
      Rat c = 1;
      for (int a = 1; a <= n; ++a)
        if (a != i) c /= gi * gi - gamma(nu, a) * gamma(nu, a);
      rhs = rhs + c * zi;
    }
    if (rep.gen(n, -n) * v != rhs) throw std::logic_error("F_{n,-n} action mismatch");
  }
  return true;
}

// ---------------------------------------------------------------- Z_ab(u)

ZabOperators zab_operators(Mickelsson& M, const DWeight& mu) {
  const auto& rep = M.rep();
  const int n = rep.alg.n;
  ZabOperators out;
  out.mu = mu;
  out.basis = M.highest_mu(n, mu);
  if (out.basis.empty()) throw std::invalid_argument("mu does not occur in the restriction");
  Coordinates co(out.basis);
  const std::size_t c = out.basis.size();
  for (int a : {n, -n})
    for (int b : {n, -n}) {
      std::vector<PolyVec> cols;
      std::size_t len = 0;
      for (const auto& v : out.basis) {
        cols.push_back(M.zab_raw(n, a, b, v));
        len = std::max(len, cols.back().size());
      }
      std::vector<SparseMat> coeffs;
      for (std::size_t k = 0; k < len; ++k) {
        SparseMat m(c, c);
        for (std::size_t t = 0; t < c; ++t) {
          Vec x = co.coords(poly_coeff(cols[t], k, rep.dim()));
          for (std::size_t r = 0; r < c; ++r)
            if (x[r] != 0) m.set(r, t, x[r]);
        }
        coeffs.push_back(std::move(m));
      }
      out.Z[{a > 0 ? 1 : -1, b > 0 ? 1 : -1}] = coeffs.empty() ? OpPoly(c, c) : OpPoly(std::move(coeffs));
    }
  switch (rep.alg.series) {
    case Series::B:
      out.prefactor_const = -1, out.prefactor_upow = -2 * n, out.prefactor_half = false;
      break;
    case Series::C:
      out.prefactor_const = 1, out.prefactor_upow = -2 * n, out.prefactor_half = true;
      break;
    default:
      out.prefactor_const = -2, out.prefactor_upow = -2 * n + 2, out.prefactor_half = false;
  }
  return out;
}

TwistedParams twisted_params(Series s, const DWeight& lambda, const DWeight& mu) {
  const int n = static_cast<int>(lambda.size());
  auto L = [&](int i) { return lambda[static_cast<std::size_t>(i - 1)]; };
  auto Mu = [&](int i) { return mu[static_cast<std::size_t>(i - 1)]; };
  TwistedParams tp;
  if (s == Series::C || s == Series::B) {
    const Rat sh = s == Series::C ? Rat(1, 2) : Rat(1);
    for (int i = 1; i <= n; ++i) {
      Rat a = i == 1 ? Rat(0) : half(std::min(L(i - 1), Mu(i - 1))) - i + sh;
      Rat b = (i < n ? half(std::max(L(i), Mu(i))) : half(L(n))) - i + sh;
      tp.factors.push_back({a, b});
    }
    if (s == Series::C) {
      tp.factors[0].first = Rat(-1, 2);
    } else if (L(1) % 2 == 0) {
      tp.factors2 = tp.factors;
      tp.factors2[0].first = -1;
      tp.deltas = {Rat(1, 2), Rat(1, 2)};
      if (tp.factors[0].second == 0) tp.factors2.clear();
    } else {
      tp.factors[0].first = Rat(-1, 2);
      tp.factors2 = tp.factors;
      tp.deltas = {Rat(0), Rat(1)};
    }
    return tp;
  }
  // D
  const Rat a1 = half(std::min(-std::abs(L(1)), -std::abs(Mu(1)))) - Rat(1, 2);
  const Rat a0 = a1 + half(std::abs(L(1) + Mu(1)));
  for (int i = 1; i <= n - 1; ++i) {
    Rat a = i == 1 ? a1 : half(std::min(L(i), Mu(i))) - i + Rat(1, 2);
    Rat b = (i + 1 < n ? half(std::max(L(i + 1), Mu(i + 1))) : half(L(n))) - i + Rat(1, 2);
    tp.factors.push_back({a, b});
  }
  tp.deltas = {-a0};
  return tp;
}

bool zab_symmetry_ok(const ZabOperators& Z, Series s, int n) {
  (void)n;
  const std::size_t c = Z.basis.size();
  const OpPoly two_u = OpPoly::scalar(c, {Rat(0), Rat(2)});
  // s_ab(u) = u^{-2m} P_ab(u) / d(u); multiplied through by the even d(u) = 1 - 4u^2 for D
  auto P = [&](int a, int b) {
    const OpPoly& z = Z.Z.at({a, b});
    if (s == Series::C) return OpPoly::scalar(c, {Rat(1, 2), Rat(1)}) * z;
    if (s == Series::D) return OpPoly::scalar(c, {Rat(-2), Rat(4)}) * z;
    return Rat(-1) * z;
  };
  const int eps = s == Series::C ? -1 : 1;
  for (int a : {1, -1})
    for (int b : {1, -1}) {
      const int th = s == Series::C ? a * b : 1;
      OpPoly lhs = two_u * (Rat(th) * P(-b, -a).at_neg());
      OpPoly pab = P(a, b);
      OpPoly rhs = two_u * pab + Rat(eps) * (pab - pab.at_neg());
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool zab_commute_ok(const ZabOperators& Z) {
  const OpPoly& z = Z.Z.at({1, -1});
  for (std::size_t i = 0; i < z.coeffs().size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!commutator(z.coeff(i), z.coeff(j)).is_zero()) return false;
  return true;
}

DWeight weight_s3_to_s4(const DWeight& lambda) {
  DWeight a(lambda.rbegin(), lambda.rend());
  for (auto& x : a) x = -x;
  return a;
}

DWeight weight_s4_to_s3(const DWeight& a) { return weight_s3_to_s4(a); }

int index_s4_to_s3(Series s, int n, int p) {
  const int N = s == Series::B ? 2 * n + 1 : 2 * n;
  if (p < 1 || p > N) throw std::invalid_argument("index out of range");
  if (p <= n) return p - n - 1;
  if (s == Series::B && p == n + 1) return 0;
  return n + 1 - (N - p + 1);
}

int index_s3_to_s4(Series s, int n, int a) {
  if (a < -n || a > n || (a == 0 && s != Series::B)) throw std::invalid_argument("index out of range");
  const int N = s == Series::B ? 2 * n + 1 : 2 * n;
  if (a < 0) return a + n + 1;
  if (a == 0) return n + 1;
  return N - (n + 1 - a) + 1;
}

SparseMat lowering_zia(Mickelsson& M, int i, int a) {
  const int n = M.rep().alg.n;
  if (a != n && a != -n) throw std::invalid_argument("lowering_zia: a must be n or -n");
  if (i <= -n || i >= n) throw std::invalid_argument("lowering_zia: i out of range");
  return M.lowering(n, i, a).realized;
}

OpPoly z_interp_poly(Mickelsson& M) {
  const int n = M.rep().alg.n;
  const auto& H = M.highest(n);
  const Coordinates co(H);
  std::vector<PolyVec> cols;
  std::size_t len = 0;
  for (const auto& v : H) {
    try {
      cols.push_back(M.interp(n, v));
    } catch (const SingularDenominator&) {
      cols.push_back(M.zab(n, n, -n, v));
    }
    len = std::max(len, cols.back().size());
  }
  const std::size_t c = H.size();
  if (len == 0) return OpPoly(c, c);
  std::vector<SparseMat> coeffs;
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Vec> m;
    for (const auto& p : cols) m.push_back(co.coords(poly_coeff(p, k, M.rep().dim())));
    coeffs.push_back(from_columns(c, m));
  }
  return OpPoly(std::move(coeffs));
}

SparseMat z_interp(Mickelsson& M, const Rat& u0) { return z_interp_poly(M).eval(u0); }

bool zab_interp_ok(Mickelsson& M, const ZabOperators& Z) {
  const int n = M.rep().alg.n;
  for (const auto& v : Z.basis) {
    PolyVec a;
    try {
      a = M.interp(n, v);
    } catch (const SingularDenominator&) {
      continue;
    }
    PolyVec b = M.zab(n, n, -n, v);
    const int d = std::max(poly_degree(a), poly_degree(b));
    for (int k = 0; k <= d; ++k)
      if (poly_coeff(a, static_cast<std::size_t>(k), v.size()) != poly_coeff(b, static_cast<std::size_t>(k), v.size()))
        return false;
  }
  return true;
}

}  // namespace gtb
