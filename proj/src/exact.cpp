#include "gtb/exact.hpp"

#include <stdexcept>

namespace gtb {

Rat rat(long num, long den) {
  if (den == 0) throw std::domain_error("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat half(long doubled) { return rat(doubled, 2); }

std::string to_string(const Rat& r) { return r.get_str(); }

Rat parse_rat(const std::string& s) {
  Rat r;
  if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Rat factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

Rat ipow(const Rat& x, unsigned k) {
  Rat r = 1;
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

// ---------------------------------------------------------------- SparseMat

SparseMat::SparseMat(std::size_t nrows, std::size_t ncols)
    : nrows_(nrows), ncols_(ncols), rows_(nrows) {}

SparseMat SparseMat::identity(std::size_t n) {
  SparseMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace(i, 1);
  return m;
}

SparseMat SparseMat::diag(const Vec& d) {
  SparseMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

SparseMat SparseMat::unit(std::size_t n, std::size_t i, std::size_t j) {
  SparseMat m(n, n);
  m.set(i, j, 1);
  return m;
}

Rat SparseMat::get(std::size_t i, std::size_t j) const {
  auto it = rows_.at(i).find(j);
  return it == rows_[i].end() ? Rat(0) : it->second;
}

void SparseMat::set(std::size_t i, std::size_t j, const Rat& v) {
  if (i >= nrows_ || j >= ncols_) throw std::out_of_range("SparseMat::set");
  if (v == 0)
    rows_[i].erase(j);
  else
    rows_[i][j] = v;
}

void SparseMat::add(std::size_t i, std::size_t j, const Rat& v) {
  if (i >= nrows_ || j >= ncols_) throw std::out_of_range("SparseMat::add");
  if (v == 0) return;
  auto [it, fresh] = rows_[i].emplace(j, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) rows_[i].erase(it);
  }
}

std::size_t SparseMat::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool SparseMat::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

SparseMat SparseMat::transpose() const {
  SparseMat t(ncols_, nrows_);
  for (std::size_t i = 0; i < nrows_; ++i)
    for (const auto& [j, v] : rows_[i]) t.rows_[j].emplace(i, v);
  return t;
}

Vec SparseMat::column(std::size_t j) const {
  Vec c(nrows_);
  for (std::size_t i = 0; i < nrows_; ++i) c[i] = get(i, j);
  return c;
}

static void check_same_shape(const SparseMat& a, const SparseMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
}

SparseMat& SparseMat::operator+=(const SparseMat& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < nrows_; ++i)
    for (const auto& [j, v] : o.rows_[i]) add(i, j, v);
  return *this;
}

SparseMat& SparseMat::operator-=(const SparseMat& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < nrows_; ++i)
    for (const auto& [j, v] : o.rows_[i]) add(i, j, -v);
  return *this;
}

SparseMat& SparseMat::operator*=(const Rat& s) {
  if (s == 0) {
    for (auto& r : rows_) r.clear();
    return *this;
  }
  for (auto& r : rows_)
    for (auto& [j, v] : r) v *= s;
  return *this;
}

bool operator==(const SparseMat& a, const SparseMat& b) {
  return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
}

SparseMat operator+(SparseMat a, const SparseMat& b) { return a += b; }
SparseMat operator-(SparseMat a, const SparseMat& b) { return a -= b; }
SparseMat operator*(const Rat& s, SparseMat a) { return a *= s; }

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
  SparseMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseMat::Row acc;
    for (const auto& [k, av] : a.row(i))
      for (const auto& [j, bv] : b.row(k)) acc[j] += av * bv;
    for (const auto& [j, v] : acc)
      if (v != 0) c.set(i, j, v);
  }
  return c;
}

Vec operator*(const SparseMat& a, const Vec& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matvec shape mismatch");
  Vec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& [j, x] : a.row(i))
      if (v[j] != 0) r[i] += x * v[j];
  return r;
}

SparseMat commutator(const SparseMat& a, const SparseMat& b) { return a * b - b * a; }

SparseMat kron(const SparseMat& a, const SparseMat& b) {
  SparseMat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& [j, av] : a.row(i))
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (const auto& [q, bv] : b.row(p)) k.set(i * b.rows() + p, j * b.cols() + q, av * bv);
  return k;
}

SparseMat from_columns(std::size_t nrows, const std::vector<Vec>& cols) {
  SparseMat m(nrows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != nrows) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t i = 0; i < nrows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

// ------------------------------------------------------------------ vectors

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec operator+(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec operator-(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec operator*(const Rat& s, Vec a) {
  for (auto& x : a) x *= s;
  return a;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

bool proportional(const Vec& a, const Vec& b, Rat& c) {
  if (a.size() != b.size()) return false;
  std::size_t k = 0;
  while (k < b.size() && b[k] == 0) ++k;
  if (k == b.size()) {
    c = 0;
    return is_zero(a);
  }
  c = a[k] / b[k];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != c * b[i]) return false;
  return true;
}

// --------------------------------------------------------------- elimination

Rref rref(std::vector<Vec> rows, std::size_t ncols) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rat inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (std::size_t j = c; j < rows[r].size(); ++j)
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

static std::vector<Vec> dense_rows(const SparseMat& m) {
  std::vector<Vec> rows(m.rows(), Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) rows[i][j] = v;
  return rows;
}

std::vector<Vec> nullspace(const SparseMat& m) {
  Rref e = rref(dense_rows(m), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const SparseMat& m) { return rref(dense_rows(m), m.cols()).pivots.size(); }

std::size_t rank(const std::vector<Vec>& vecs) {
  if (vecs.empty()) return 0;
  return rref(vecs, vecs.front().size()).pivots.size();
}

Vec solve(const std::vector<Vec>& a, const Vec& b) {
  const std::size_t n = a.size();
  std::vector<Vec> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("solve: matrix not square");
    aug[i] = a[i];
    aug[i].push_back(b.at(i));
  }
  Rref e = rref(std::move(aug), n);
  if (e.pivots.size() != n) throw std::domain_error("solve: singular matrix");
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.rows[i][n];
  return x;
}

Coordinates::Coordinates(std::vector<Vec> basis) : basis_(std::move(basis)) {
  const std::size_t m = basis_.size();
  if (m == 0) return;
  const std::size_t n = basis_.front().size();
  std::vector<Vec> aug(m);
  for (std::size_t k = 0; k < m; ++k) {
    aug[k] = basis_[k];
    aug[k].resize(n + m);
    aug[k][n + k] = 1;
  }
  Rref e = rref(std::move(aug), n);
  if (e.pivots.size() != m) throw std::domain_error("Coordinates: basis is linearly dependent");
  pivots_ = e.pivots;
  for (auto& row : e.rows) {
    reduced_.emplace_back(row.begin(), row.begin() + static_cast<long>(n));
    transform_.emplace_back(row.begin() + static_cast<long>(n), row.end());
  }
}

Vec Coordinates::coords(const Vec& v) const {
  const std::size_t m = basis_.size();
  Vec x(m);
  if (m == 0) {
    if (!is_zero(v)) throw std::domain_error("vector not in span");
    return x;
  }
  Vec rest = v;
  for (std::size_t r = 0; r < m; ++r) {
    Rat c = v[pivots_[r]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < rest.size(); ++j)
      if (reduced_[r][j] != 0) rest[j] -= c * reduced_[r][j];
    for (std::size_t k = 0; k < m; ++k)
      if (transform_[r][k] != 0) x[k] += c * transform_[r][k];
  }
  if (!is_zero(rest)) throw std::domain_error("vector not in span");
  return x;
}

bool Coordinates::contains(const Vec& v) const {
  try {
    coords(v);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

// ------------------------------------------------------------------- OpPoly

OpPoly::OpPoly(std::size_t nrows, std::size_t ncols) : nrows_(nrows), ncols_(ncols) {}

OpPoly::OpPoly(std::vector<SparseMat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("OpPoly: shape unknown for empty list");
  nrows_ = coeffs_.front().rows();
  ncols_ = coeffs_.front().cols();
  for (const auto& c : coeffs_) check_same_shape(c, coeffs_.front());
  trim();
}

OpPoly OpPoly::scalar(std::size_t n, const std::vector<Rat>& c) {
  OpPoly p(n, n);
  for (const auto& x : c) p.coeffs_.push_back(x * SparseMat::identity(n));
  p.trim();
  return p;
}

OpPoly OpPoly::linear(const SparseMat& c0, const SparseMat& c1) { return OpPoly({c0, c1}); }

void OpPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SparseMat OpPoly::eval(const Rat& u) const {
  SparseMat r(nrows_, ncols_);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    r *= u;
    r += coeffs_[k];
  }
  return r;
}

OpPoly OpPoly::at_neg() const {
  OpPoly p = *this;
  for (std::size_t k = 1; k < p.coeffs_.size(); k += 2) p.coeffs_[k] *= Rat(-1);
  return p;
}

OpPoly OpPoly::shifted(const Rat& a) const {
  // p(u+a) = Σ_k c_k Σ_j C(k,j) a^{k-j} u^j
  OpPoly p(nrows_, ncols_);
  p.coeffs_.assign(coeffs_.size(), SparseMat(nrows_, ncols_));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Rat binom = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      if (j > 0) binom = binom * Rat(static_cast<long>(k - j + 1)) / Rat(static_cast<long>(j));
      p.coeffs_[j] += (binom * ipow(a, static_cast<unsigned>(k - j))) * coeffs_[k];
    }
  }
  p.trim();
  return p;
}

OpPoly OpPoly::divide_by_u() const {
  if (coeffs_.empty()) return *this;
  if (!coeffs_.front().is_zero()) throw std::domain_error("OpPoly: division by u is not exact");
  OpPoly p(nrows_, ncols_);
  p.coeffs_.assign(coeffs_.begin() + 1, coeffs_.end());
  p.trim();
  return p;
}

bool OpPoly::is_even() const {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2)
    if (!coeffs_[k].is_zero()) return false;
  return true;
}

OpPoly& OpPoly::operator+=(const OpPoly& o) {
  if (nrows_ != o.nrows_ || ncols_ != o.ncols_) throw std::invalid_argument("OpPoly shape mismatch");
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), SparseMat(nrows_, ncols_));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

OpPoly& OpPoly::operator-=(const OpPoly& o) {
  if (nrows_ != o.nrows_ || ncols_ != o.ncols_) throw std::invalid_argument("OpPoly shape mismatch");
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), SparseMat(nrows_, ncols_));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

bool operator==(const OpPoly& a, const OpPoly& b) {
  return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.coeffs_ == b.coeffs_;
}

OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
OpPoly operator-(OpPoly a, const OpPoly& b) { return a -= b; }

OpPoly operator*(const OpPoly& a, const OpPoly& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("OpPoly product shape mismatch");
  if (a.is_zero() || b.is_zero()) return OpPoly(a.rows(), b.cols());
  std::vector<SparseMat> c(a.coeffs().size() + b.coeffs().size() - 1, SparseMat(a.rows(), b.cols()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeff(i) * b.coeff(j);
  return OpPoly(std::move(c));
}

OpPoly operator*(const SparseMat& m, const OpPoly& p) {
  if (p.is_zero()) return OpPoly(m.rows(), p.cols());
  std::vector<SparseMat> c;
  for (const auto& x : p.coeffs()) c.push_back(m * x);
  return OpPoly(std::move(c));
}

OpPoly operator*(const OpPoly& p, const SparseMat& m) {
  if (p.is_zero()) return OpPoly(p.rows(), m.cols());
  std::vector<SparseMat> c;
  for (const auto& x : p.coeffs()) c.push_back(x * m);
  return OpPoly(std::move(c));
}

OpPoly operator*(const Rat& s, const OpPoly& p) {
  if (p.is_zero() || s == 0) return OpPoly(p.rows(), p.cols());
  std::vector<SparseMat> c;
  for (const auto& x : p.coeffs()) c.push_back(s * x);
  return OpPoly(std::move(c));
}

OpPoly kron(const OpPoly& a, const OpPoly& b) {
  const std::size_t r = a.rows() * b.rows(), c = a.cols() * b.cols();
  if (a.is_zero() || b.is_zero()) return OpPoly(r, c);
  std::vector<SparseMat> k(a.coeffs().size() + b.coeffs().size() - 1, SparseMat(r, c));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) k[i + j] += kron(a.coeff(i), b.coeff(j));
  return OpPoly(std::move(k));
}

SparseMat op_poly_eval_left(const OpPoly& p, const SparseMat& h) {
  if (h.rows() != h.cols() || h.rows() != p.cols()) throw std::invalid_argument("op_poly_eval_left: shape mismatch");
  SparseMat r(p.rows(), p.cols());
  SparseMat power = SparseMat::identity(h.rows());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k > 0) power = power * h;
    r += p.coeff(k) * power;
  }
  return r;
}

}  // namespace gtb
