#include "gtb/gln.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace gtb {

namespace {

Pattern shifted(const Pattern& p, int k, int i, Doubled d) {
  Pattern q = p;
  q.rows[static_cast<std::size_t>(p.n - k)][static_cast<std::size_t>(i - 1)] += d;
  return q;
}

// all permutations of 0..s-1 with signs
std::vector<std::pair<std::vector<int>, int>> permutations(int s) {
  std::vector<int> p(static_cast<std::size_t>(s));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    int inv = 0;
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b)
        if (p[a] > p[b]) ++inv;
    out.push_back({p, inv % 2 ? -1 : 1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// E(u - shift)_{ab} as a linear operator polynomial
OpPoly e_entry(const GlnIrrep& rep, int a, int b, long shift) {
  const std::size_t d = rep.dim();
  SparseMat c0 = rep.gen(a, b);
  SparseMat c1(d, d);
  if (a == b) {
    c0 -= Rat(shift) * SparseMat::identity(d);
    c1 = SparseMat::identity(d);
  }
  return OpPoly::linear(c0, c1);
}

Vec apply_power(const SparseMat& m, Vec v, long k) {
  for (long t = 0; t < k; ++t) v = m * v;
  return v;
}

bool same_on(const std::vector<Vec>& space, const SparseMat& a, const SparseMat& b) {
  for (const auto& v : space)
    if (a * v != b * v) return false;
  return true;
}

// factorial of an integral rational
Rat fact(const Rat& x) {
  if (x.get_den() != 1) throw std::logic_error("factorial of a non-integer");
  return factorial(x.get_num().get_si());
}

SparseMat scalar_diag_shift(const SparseMat& h, const Rat& sign, const Rat& shift) {
  return sign * h + shift * SparseMat::identity(h.rows());
}

}  // namespace

std::size_t GlnIrrep::index_of(const Pattern& p) const {
  auto it = lookup.find(p.rows);
  return it == lookup.end() ? npos : it->second;
}

Rat l_entry(const Pattern& p, int k, int i) { return half(p.lam(k, i)) - Rat(i) + 1; }

GlnIrrep build_irrep(int n, const DWeight& lambda) {
  if (n < 1 || lambda.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("build_irrep: λ must have n entries");
  check_dominant(Family::A, lambda);
  GlnIrrep rep;
  rep.n = n;
  rep.lambda = lambda;
  rep.basis = enumerate(Family::A, lambda);
  for (std::size_t a = 0; a < rep.basis.size(); ++a) rep.lookup[rep.basis[a].rows] = a;
  const std::size_t d = rep.dim();

  for (int k = 1; k <= n; ++k) {
    SparseMat ekk(d, d);
    for (std::size_t c = 0; c < d; ++c) ekk.set(c, c, half(weight(rep.basis[c])[static_cast<std::size_t>(k - 1)]));
    rep.E[{k, k}] = ekk;
  }
  for (int k = 1; k < n; ++k) {
    SparseMat up(d, d), down(d, d);
    for (std::size_t c = 0; c < d; ++c) {
      const Pattern& p = rep.basis[c];
      for (int i = 1; i <= k; ++i) {
        Rat lki = l_entry(p, k, i);
        Rat den = 1;
        for (int j = 1; j <= k; ++j)
          if (j != i) den *= lki - l_entry(p, k, j);
        std::size_t r = rep.index_of(shifted(p, k, i, 2));
        if (r != npos) {
          Rat num = 1;
          for (int j = 1; j <= k + 1; ++j) num *= lki - l_entry(p, k + 1, j);
          up.add(r, c, -num / den);
        }
        r = rep.index_of(shifted(p, k, i, -2));
        if (r != npos) {
          Rat num = 1;
          for (int j = 1; j <= k - 1; ++j) num *= lki - l_entry(p, k - 1, j);
          down.add(r, c, num / den);
        }
      }
    }
    rep.E[{k, k + 1}] = up;
    rep.E[{k + 1, k}] = down;
  }
  // E_ij = [E_{i,i+1}, E_{i+1,j}] above the diagonal, [E_{i,i-1}, E_{i-1,j}] below
  for (int gap = 2; gap < n; ++gap)
    for (int i = 1; i + gap <= n; ++i) {
      int j = i + gap;
      rep.E[{i, j}] = commutator(rep.gen(i, i + 1), rep.gen(i + 1, j));
      rep.E[{j, i}] = commutator(rep.gen(j, j - 1), rep.gen(j - 1, i));
    }
  rep.normsq = norms(rep);
  return rep;
}

SparseMat gen_matrix(const GlnIrrep& rep, int i, int j) {
  if (i < 1 || j < 1 || i > rep.n || j > rep.n) throw std::out_of_range("gen_matrix: index out of range");
  return rep.gen(i, j);
}

Vec norms(const GlnIrrep& rep) {
  Vec out;
  for (const auto& p : rep.basis) {
    Rat N = 1;
    for (int k = 2; k <= rep.n; ++k) {
      for (int i = 1; i < k; ++i)
        for (int j = i; j < k; ++j) {
          N *= fact(l_entry(p, k, i) - l_entry(p, k - 1, j));
          N /= fact(l_entry(p, k - 1, i) - l_entry(p, k - 1, j));
        }
      for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
          N *= fact(l_entry(p, k, i) - l_entry(p, k, j) - 1);
          N /= fact(l_entry(p, k - 1, i) - l_entry(p, k, j) - 1);
        }
    }
    out.push_back(N);
  }
  return out;
}

SparseMat h_matrix(const GlnIrrep& rep, int i) {
  return rep.gen(i, i) - Rat(i - 1) * SparseMat::identity(rep.dim());
}

LoweringOpA lowering_operator(const GlnIrrep& rep, int i, ZKind kind, int m) {
  if (m == 0) m = rep.n;
  if (m > rep.n || i < 1 || i >= m) throw std::out_of_range("lowering_operator: need 1 <= i < m <= n");
  const std::size_t d = rep.dim();
  LoweringOpA z{kind, i, m, SparseMat(d, d)};
  const SparseMat hi = h_matrix(rep, i);
  // chain candidates: below i for z_{im}, strictly between i and m for z_{mi}
  std::vector<int> pool;
  if (kind == ZKind::Raising)
    for (int j = i - 1; j >= 1; --j) pool.push_back(j);
  else
    for (int j = i + 1; j < m; ++j) pool.push_back(j);
  const std::size_t np = pool.size();
  for (unsigned mask = 0; mask < (1u << np); ++mask) {
    std::vector<int> chain, comp;
    for (std::size_t t = 0; t < np; ++t) ((mask >> t) & 1 ? chain : comp).push_back(pool[t]);
    SparseMat term = SparseMat::identity(d);
    if (kind == ZKind::Raising) {
      // E_{i i1} E_{i1 i2} ... E_{is m}
      int prev = i;
      for (int c : chain) {
        term = term * rep.gen(prev, c);
        prev = c;
      }
      term = term * rep.gen(prev, m);
    } else {
      // E_{i1 i} E_{i2 i1} ... E_{m is}
      int prev = i;
      for (int c : chain) {
        term = term * rep.gen(c, prev);
        prev = c;
      }
      term = term * rep.gen(m, prev);
    }
    for (int j : comp) term = term * (hi - h_matrix(rep, j));
    z.realized += term;
  }
  return z;
}

std::vector<Vec> basis_via_lowering(const GlnIrrep& rep) {
  const int n = rep.n;
  std::map<std::pair<int, int>, SparseMat> zl;
  for (int k = 2; k <= n; ++k)
    for (int i = 1; i < k; ++i) zl[{k, i}] = lowering_operator(rep, i, ZKind::Lowering, k).realized;
  std::vector<Vec> out;
  for (const auto& p : rep.basis) {
    Vec v = unit_vec(rep.dim(), 0);
    // rightmost factor first: k = n down to 2, and within a level i = k-1 down to 1
    for (int k = n; k >= 2; --k)
      for (int i = k - 1; i >= 1; --i) v = apply_power(zl.at({k, i}), v, (p.lam(k, i) - p.lam(k - 1, i)) / 2);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> gl_highest_space(const GlnIrrep& rep) {
  const std::size_t d = rep.dim();
  SparseMat stack(d * static_cast<std::size_t>(std::max(1, rep.n - 2)), d);
  for (int j = 1; j + 1 < rep.n; ++j) {
    const SparseMat& e = rep.gen(j, j + 1);
    for (std::size_t r = 0; r < d; ++r)
      for (const auto& [c, v] : e.row(r)) stack.set(static_cast<std::size_t>(j - 1) * d + r, c, v);
  }
  return nullspace(stack);
}

Vec xi_mu(const GlnIrrep& rep, const DWeight& mu) {
  const int n = rep.n;
  if (mu.size() + 1 != static_cast<std::size_t>(n)) throw std::invalid_argument("xi_mu: μ must have n-1 entries");
  Vec v = unit_vec(rep.dim(), 0);
  for (int i = n - 1; i >= 1; --i) {
    Doubled k = rep.lambda[i - 1] - mu[i - 1];
    if (k < 0 || k % 2) throw std::invalid_argument("xi_mu: bad exponent");
    v = apply_power(lowering_operator(rep, i, ZKind::Lowering).realized, v, k / 2);
  }
  return v;
}

Rat lemma_aximu_check(const GlnIrrep& rep, const DWeight& mu, int i) {
  const int n = rep.n;
  if (mu.size() + 1 != static_cast<std::size_t>(n) || i < 1 || i >= n) throw std::invalid_argument("lemma_aximu_check: bad arguments");
  for (int j = 0; j + 1 < n; ++j)
    if (mu[j] > rep.lambda[j] || mu[j] < rep.lambda[j + 1] || (rep.lambda[j] - mu[j]) % 2)
      throw std::invalid_argument("lemma_aximu_check: μ violates betweenness");
  Rat mi = half(mu[i - 1]) - Rat(i) + 1;
  Rat closed = -1;
  for (int j = 1; j <= n; ++j) closed *= mi - (half(rep.lambda[j - 1]) - Rat(j) + 1);
  Vec lhs = lowering_operator(rep, i, ZKind::Raising).realized * xi_mu(rep, mu);
  Rat c = 0;
  if (mu[i - 1] == rep.lambda[i - 1]) {
    if (!is_zero(lhs)) throw std::logic_error("z_in ξ_μ should vanish");
  } else {
    DWeight up = mu;
    up[i - 1] += 2;
    if (!proportional(lhs, xi_mu(rep, up), c)) throw std::logic_error("z_in ξ_μ is not a multiple of ξ_{μ+δ_i}");
  }
  if (c != closed) throw std::logic_error("lemma coefficient mismatch");
  return c;
}

OpPoly quantum_minor(const GlnIrrep& rep, const std::vector<int>& a, const std::vector<int>& b, int form) {
  const int s = static_cast<int>(a.size());
  if (b.size() != a.size() || s == 0) throw std::invalid_argument("quantum_minor: index lists must have equal positive length");
  const std::size_t d = rep.dim();
  OpPoly total(d, d);
  for (const auto& [sig, sgn] : permutations(s)) {
    OpPoly term = OpPoly::scalar(d, {1});
    for (int t = 0; t < s; ++t) {
      if (form == 1)
        term = term * e_entry(rep, a[sig[t]], b[t], t);
      else
        term = term * e_entry(rep, a[t], b[sig[t]], s - 1 - t);
    }
    if (sgn > 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

OpPoly capelli_det(const GlnIrrep& rep, int m) {
  if (m < 1 || m > rep.n) throw std::out_of_range("capelli_det: m out of range");
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 1);
  return quantum_minor(rep, idx, idx);
}

OpPoly tau_lower(const GlnIrrep& rep, int i) {
  std::vector<int> rows, cols;
  for (int t = i + 1; t <= rep.n; ++t) rows.push_back(t);
  for (int t = i; t <= rep.n - 1; ++t) cols.push_back(t);
  return quantum_minor(rep, rows, cols);
}

OpPoly tau_raise(const GlnIrrep& rep, int i) {
  std::vector<int> rows, cols;
  for (int t = 1; t <= i; ++t) rows.push_back(t);
  for (int t = 1; t < i; ++t) cols.push_back(t);
  cols.push_back(rep.n);
  OpPoly p = quantum_minor(rep, rows, cols);
  return (i % 2 ? Rat(1) : Rat(-1)) * p;
}

bool tau_equals_z_check(const GlnIrrep& rep, int i) {
  const auto space = gl_highest_space(rep);
  const SparseMat hi = h_matrix(rep, i);
  SparseMat lower = op_poly_eval_left(tau_lower(rep, i), scalar_diag_shift(hi, -1, Rat(1 - i)));
  SparseMat raise = op_poly_eval_left(tau_raise(rep, i), scalar_diag_shift(hi, -1, 0));
  return same_on(space, lower, lowering_operator(rep, i, ZKind::Lowering).realized) &&
         same_on(space, raise, lowering_operator(rep, i, ZKind::Raising).realized);
}

bool capelli_interpolation_check(const GlnIrrep& rep, int i) {
  const auto space = gl_highest_space(rep);
  const OpPoly C = capelli_det(rep, rep.n);
  const SparseMat hi = h_matrix(rep, i);
  const SparseMat zin = lowering_operator(rep, i, ZKind::Raising).realized;
  const SparseMat zni = lowering_operator(rep, i, ZKind::Lowering).realized;
  const Rat sgn = rep.n % 2 ? 1 : -1;
  return same_on(space, op_poly_eval_left(C, scalar_diag_shift(hi, -1, 1)), sgn * (zin * zni)) &&
         same_on(space, op_poly_eval_left(C, scalar_diag_shift(hi, -1, 0)), sgn * (zni * zin));
}

OpPoly drinfeld_poly(const GlnIrrep& rep, int m, Drinfeld which) {
  if (m < 1 || m > rep.n || (which != Drinfeld::A && m >= rep.n)) throw std::out_of_range("drinfeld_poly: m out of range");
  std::vector<int> top(static_cast<std::size_t>(m));
  std::iota(top.begin(), top.end(), 1);
  std::vector<int> alt(top);
  alt.back() = m + 1;
  switch (which) {
    case Drinfeld::A: return quantum_minor(rep, top, top);
    case Drinfeld::B: return quantum_minor(rep, top, alt);
    case Drinfeld::C: return quantum_minor(rep, alt, top);
  }
  return {};
}

SparseMat drinfeld_action(const GlnIrrep& rep, int m, Drinfeld which, const Rat& u0) {
  return drinfeld_poly(rep, m, which).eval(u0);
}

bool drinfeld_check(const GlnIrrep& rep, int m) {
  const std::size_t d = rep.dim();
  const OpPoly A = drinfeld_poly(rep, m, Drinfeld::A);
  // A_m(u) at a few sample points, diagonal with ∏ (u + l_mi)
  for (Rat u : {Rat(0), Rat(3, 2), Rat(-7, 3)}) {
    SparseMat a = A.eval(u);
    SparseMat expect(d, d);
    for (std::size_t c = 0; c < d; ++c) {
      Rat v = 1;
      for (int i = 1; i <= m; ++i) v *= u + l_entry(rep.basis[c], m, i);
      expect.set(c, c, v);
    }
    if (!(a == expect)) return false;
  }
  if (m >= rep.n) return true;
  const OpPoly B = drinfeld_poly(rep, m, Drinfeld::B);
  const OpPoly C = drinfeld_poly(rep, m, Drinfeld::C);
  for (std::size_t c = 0; c < d; ++c) {
    const Pattern& p = rep.basis[c];
    const Vec e = unit_vec(d, c);
    for (int j = 1; j <= m; ++j) {
      const Rat lmj = l_entry(p, m, j);
      Rat cb = -1, cc = 1;
      for (int i = 1; i <= m + 1; ++i) cb *= l_entry(p, m + 1, i) - lmj;
      for (int i = 1; i <= m - 1; ++i) cc *= l_entry(p, m - 1, i) - lmj;
      Vec eb(d), ec(d);
      std::size_t r = rep.index_of(shifted(p, m, j, 2));
      if (r != npos) eb[r] = cb;
      r = rep.index_of(shifted(p, m, j, -2));
      if (r != npos) ec[r] = cc;
      if (B.eval(-lmj) * e != eb || C.eval(-lmj) * e != ec) return false;
    }
  }
  return true;
}

std::vector<Vec> kappa_basis(const GlnIrrep& rep, Vec* constants) {
  const int n = rep.n;
  std::vector<OpPoly> Cm(static_cast<std::size_t>(n));
  for (int m = 1; m < n; ++m) Cm[m] = drinfeld_poly(rep, m, Drinfeld::C);
  std::vector<Vec> out;
  if (constants) constants->clear();
  for (std::size_t idx = 0; idx < rep.dim(); ++idx) {
    const Pattern& p = rep.basis[idx];
    Vec v = unit_vec(rep.dim(), 0);
    // the k = n-1 brace acts first; inside a brace C_k acts first, then C_{k+1}, ...
    for (int k = n - 1; k >= 1; --k) {
      const Rat lk = half(rep.lambda[k - 1]) - Rat(k) + 1;
      for (int m = k; m <= n - 1; ++m) {
        const long steps = (rep.lambda[k - 1] - p.lam(m, k)) / 2;
        for (long t = 0; t < steps; ++t) v = Cm[m].eval(-lk + Rat(t)) * v;
      }
    }
    Rat c;
    if (!proportional(v, unit_vec(rep.dim(), idx), c) || c == 0)
      throw std::logic_error("κ_Λ is not a nonzero multiple of ξ_Λ");
    if (constants) constants->push_back(c);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Rat>> gt_eigenvalues(const Pattern& p) {
  if (p.family != Family::A) throw std::invalid_argument("gt_eigenvalues: A patterns only");
  std::vector<std::vector<Rat>> out;
  for (int m = 1; m <= p.n; ++m) {
    // e_0..e_m by the usual recurrence
    std::vector<Rat> e(static_cast<std::size_t>(m + 1), Rat(0));
    e[0] = 1;
    for (int i = 1; i <= m; ++i) {
      Rat l = l_entry(p, m, i);
      for (int t = i; t >= 1; --t) e[t] += l * e[t - 1];
    }
    out.emplace_back(e.begin() + 1, e.end());
  }
  return out;
}

bool gt_eigen_check(const GlnIrrep& rep) {
  const std::size_t d = rep.dim();
  for (int m = 1; m <= rep.n; ++m) {
    const OpPoly A = drinfeld_poly(rep, m, Drinfeld::A);
    if (A.degree() != m || !(A.coeff(static_cast<std::size_t>(m)) == SparseMat::identity(d))) return false;
    for (int i = 1; i <= m; ++i) {
      SparseMat expect(d, d);
      for (std::size_t c = 0; c < d; ++c) expect.set(c, c, gt_eigenvalues(rep.basis[c])[m - 1][i - 1]);
      if (!(A.coeff(static_cast<std::size_t>(m - i)) == expect)) return false;
    }
  }
  return true;
}

CharIdentityReport characteristic_identity_check(const GlnIrrep& rep) {
  const int n = rep.n;
  const std::size_t d = rep.dim(), N = static_cast<std::size_t>(n) * d;
  SparseMat E(N, N);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) E += kron(SparseMat::unit(static_cast<std::size_t>(n), i - 1, j - 1), rep.gen(i, j));
  const SparseMat I = SparseMat::identity(N);
  std::vector<Rat> alpha(static_cast<std::size_t>(n));
  std::vector<int> live;
  for (int r = 1; r <= n; ++r) {
    alpha[r - 1] = half(rep.lambda[r - 1]) + Rat(n - r);
    if (r == n || rep.lambda[r - 1] != rep.lambda[r]) live.push_back(r);
  }
  CharIdentityReport rep_out;
  SparseMat full = I;
  for (int r = 1; r <= n; ++r) full = full * (E - alpha[r - 1] * I);
  rep_out.full_product_zero = full.is_zero();
  SparseMat reduced = I;
  for (int r : live) reduced = reduced * (E - alpha[r - 1] * I);
  rep_out.reduced_product_zero = reduced.is_zero();

  SparseMat sumP(N, N), sumAP(N, N);
  rep_out.idempotent = true;
  rep_out.ranks = true;
  for (int r : live) {
    SparseMat P = I;
    Rat den = 1;
    for (int s : live)
      if (s != r) {
        P = P * (E - alpha[s - 1] * I);
        den *= alpha[r - 1] - alpha[s - 1];
      }
    P *= 1 / den;
    if (!(P * P == P)) rep_out.idempotent = false;
    DWeight lower = rep.lambda;
    lower[r - 1] -= 2;
    if (rank(P) != enumerate(Family::A, lower).size()) rep_out.ranks = false;
    sumP += P;
    sumAP += alpha[r - 1] * P;
  }
  rep_out.spectral = sumAP == E;
  rep_out.resolution = sumP == I;
  return rep_out;
}

}  // namespace gtb
