#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gtb/weights.hpp"

namespace gtb {

// A   : gl_n triangular pattern
// B3,C3,D3 : the symplectic/orthogonal patterns built on the chain g_1 ⊂ ... ⊂ g_n
//            with non-positive highest weights (index set -n..n)
// B4,D4 : the orthogonal patterns for the chain o_N ⊃ o_{N-1} ⊃ ... (positive convention)
enum class Family { A, B3, C3, D3, B4, D4 };

std::string family_name(Family f);

// Row layout, top to bottom:
//   A      : λ_n, λ_{n-1}, ..., λ_1              (row k has k entries)
//   B3, C3, B4 : λ_n, λ'_n, λ_{n-1}, λ'_{n-1}, ..., λ_1, λ'_1
//   D3, D4 : λ_n, λ'_{n-1}, λ_{n-1}, ..., λ'_1, λ_1
// B3 also carries σ_k (k = 1..n) in sigma[k-1].
struct Pattern {
  Family family = Family::A;
  int n = 0;
  std::vector<DWeight> rows;
  std::vector<int> sigma;

  // λ_ki and λ'_ki with 1-based k, i
  Doubled lam(int k, int i) const;
  Doubled lamp(int k, int i) const;
  const DWeight& row(int k) const;
  const DWeight& rowp(int k) const;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.family == b.family && a.n == b.n && a.rows == b.rows && a.sigma == b.sigma;
  }
};

// Structural problems (wrong row count or length) are reported by exception,
// distinct from a well-shaped array that violates the inequalities.
struct MalformedPattern : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonDominantWeight : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void check_shape(const Pattern& p);  // throws MalformedPattern
bool validate(const Pattern& p);     // throws MalformedPattern on bad shape

// Dominance of a top row for each family; throws NonDominantWeight.
void check_dominant(Family f, const DWeight& lambda);
bool is_dominant(Family f, const DWeight& lambda);

// All patterns with the given top row, in descending lexicographic order
// (rows top to bottom, entries left to right, σ_k read right after row λ'_k).
std::vector<Pattern> enumerate(Family f, const DWeight& lambda);

// Lexicographic key used by enumerate; larger key comes first.
std::vector<Doubled> order_key(const Pattern& p);

// Weight (doubled) of the basis vector labelled by p: for A the E_kk
// eigenvalues, for B3/C3/D3 the F_kk eigenvalues. The B4/D4 bases are not
// weight bases (F_kk with k >= 2 is not in the chain), so weight() throws there.
DWeight weight(const Pattern& p);

struct SemistandardTableau {
  std::vector<std::vector<int>> rows;  // entries 1..n
  friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;
};

bool is_semistandard(const SemistandardTableau& t);
SemistandardTableau pattern_to_tableau(const Pattern& p);
Pattern tableau_to_pattern(const SemistandardTableau& t, int n);

// Bridge between the non-positive convention (index set -n..n) and the
// usual dominant weights: a_i = -λ_{n+1-i}. Involutive.
DWeight s3_to_standard(const DWeight& lambda);
DWeight standard_to_s3(const DWeight& a);

}  // namespace gtb
