#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace gtb {

// gmpxx keeps mpq_class canonical after every arithmetic operation;
// use rat() when building from a numerator/denominator pair.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

Rat rat(long num, long den = 1);
Rat half(long doubled);  // doubled/2
std::string to_string(const Rat& r);
Rat parse_rat(const std::string& s);
Rat factorial(long n);
Rat ipow(const Rat& x, unsigned k);

class SparseMat {
 public:
  using Row = std::map<std::size_t, Rat>;

  SparseMat() = default;
  SparseMat(std::size_t nrows, std::size_t ncols);

  static SparseMat identity(std::size_t n);
  static SparseMat diag(const Vec& d);
  static SparseMat unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return nrows_; }
  std::size_t cols() const { return ncols_; }
  Rat get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rat& v);
  void add(std::size_t i, std::size_t j, const Rat& v);
  const Row& row(std::size_t i) const { return rows_[i]; }

  std::size_t nnz() const;
  bool is_zero() const;
  SparseMat transpose() const;
  Vec column(std::size_t j) const;

  SparseMat& operator+=(const SparseMat& o);
  SparseMat& operator-=(const SparseMat& o);
  SparseMat& operator*=(const Rat& s);

  friend bool operator==(const SparseMat& a, const SparseMat& b);

 private:
  std::size_t nrows_ = 0, ncols_ = 0;
  std::vector<Row> rows_;
};

SparseMat operator+(SparseMat a, const SparseMat& b);
SparseMat operator-(SparseMat a, const SparseMat& b);
SparseMat operator*(const SparseMat& a, const SparseMat& b);
SparseMat operator*(const Rat& s, SparseMat a);
Vec operator*(const SparseMat& a, const Vec& v);
SparseMat commutator(const SparseMat& a, const SparseMat& b);
SparseMat kron(const SparseMat& a, const SparseMat& b);
SparseMat from_columns(std::size_t nrows, const std::vector<Vec>& cols);

// vector helpers
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(const Rat& s, Vec a);
Rat dot(const Vec& a, const Vec& b);
// if a = c*b for some scalar c, returns true and sets c
bool proportional(const Vec& a, const Vec& b, Rat& c);

// Basis of {v : m v = 0}; reduced row echelon form, pivots chosen by
// smallest column index, one basis vector per free column.
std::vector<Vec> nullspace(const SparseMat& m);
std::size_t rank(const SparseMat& m);
std::size_t rank(const std::vector<Vec>& vecs);

// Rows of a matrix in reduced row echelon form plus pivot columns.
struct Rref {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};
Rref rref(std::vector<Vec> rows, std::size_t ncols);

// Exact solve of a square nonsingular system; throws if singular.
Vec solve(const std::vector<Vec>& a, const Vec& b);

// Coordinates of vectors in a fixed linearly independent family.
class Coordinates {
 public:
  explicit Coordinates(std::vector<Vec> basis);
  std::size_t size() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  // throws std::domain_error if v is not in the span
  Vec coords(const Vec& v) const;
  bool contains(const Vec& v) const;

 private:
  std::vector<Vec> basis_;
  std::vector<Vec> reduced_;  // rref of [basis | I] restricted rows
  std::vector<std::size_t> pivots_;
  std::vector<Vec> transform_;
};

class OpPoly {
 public:
  OpPoly() = default;
  OpPoly(std::size_t nrows, std::size_t ncols);
  explicit OpPoly(std::vector<SparseMat> coeffs);
  // scalar polynomial times identity
  static OpPoly scalar(std::size_t n, const std::vector<Rat>& c);
  // c0 + c1*u with matrix coefficients
  static OpPoly linear(const SparseMat& c0, const SparseMat& c1);

  std::size_t rows() const { return nrows_; }
  std::size_t cols() const { return ncols_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const SparseMat& coeff(std::size_t k) const { return coeffs_[k]; }
  const std::vector<SparseMat>& coeffs() const { return coeffs_; }

  SparseMat eval(const Rat& u) const;
  OpPoly at_neg() const;              // p(-u)
  OpPoly shifted(const Rat& a) const;  // p(u + a)
  OpPoly divide_by_u() const;         // throws if constant term nonzero
  bool is_even() const;

  OpPoly& operator+=(const OpPoly& o);
  OpPoly& operator-=(const OpPoly& o);
  friend bool operator==(const OpPoly& a, const OpPoly& b);

 private:
  void trim();
  std::size_t nrows_ = 0, ncols_ = 0;
  std::vector<SparseMat> coeffs_;
};

OpPoly operator+(OpPoly a, const OpPoly& b);
OpPoly operator-(OpPoly a, const OpPoly& b);
OpPoly operator*(const OpPoly& a, const OpPoly& b);
OpPoly operator*(const SparseMat& m, const OpPoly& p);
OpPoly operator*(const OpPoly& p, const SparseMat& m);
OpPoly operator*(const Rat& s, const OpPoly& p);
OpPoly kron(const OpPoly& a, const OpPoly& b);

// Σ_j coeff_j · h^j, coefficients to the left of the powers of h.
SparseMat op_poly_eval_left(const OpPoly& p, const SparseMat& h);

}  // namespace gtb
