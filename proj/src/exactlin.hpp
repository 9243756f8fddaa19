#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gk {

using Rational = mpq_class;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_ints(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  const std::vector<Rational>& data() const { return a_; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix col(std::size_t j) const;
  Matrix cols_range(std::size_t j0, std::size_t j1) const;
  Matrix rows_range(std::size_t i0, std::size_t i1) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  // Copies m into this matrix with its top-left corner at (i, j).
  void place(std::size_t i, std::size_t j, const Matrix& m);

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& m);
Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);
// Diagonal block matrix with d ones followed by n-d zeros (or the reverse).
Matrix proj_first(std::size_t n, std::size_t d);
Matrix proj_last(std::size_t n, std::size_t d);

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
bool invertible(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
Matrix inverse_or_throw(const Matrix& m);

// Column span in reduced column-echelon form.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(const Matrix& generators);
  static Subspace coords(std::size_t ambient, std::size_t first, std::size_t count);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  // Row indices of the echelon pivots, one per basis column.
  std::vector<std::size_t> pivot_rows() const;
  bool contains(const Matrix& v) const;
  bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  std::size_t n_ = 0;
  Matrix basis_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace preimage(const Matrix& m, const Subspace& w);
// Standard basis vectors at the non-pivot rows of s; together with s a basis of the ambient space.
Matrix complement_basis(const Subspace& s);

// Particular solution of a·x = b with free variables at zero, or nullopt.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Linear matrix equations sum_t L_t X_{u_t} R_t = C over unknown matrices.
struct Term {
  Matrix left;
  std::size_t unknown;
  Matrix right;
};
struct LinearEquation {
  std::vector<Term> terms;
  Matrix rhs;
};
struct Unknown {
  std::size_t rows, cols;
  bool must_be_invertible = false;
};
struct FeasibilityOptions {
  std::uint64_t seed = 0;
  int draws = 64;
  long range = 3;
};
struct Feasibility {
  bool linear_consistent = false;
  bool found = false;
  int draws_used = 0;
  std::vector<Matrix> values;
};
Feasibility solve_feasible(const std::vector<Unknown>& unknowns,
                           const std::vector<LinearEquation>& eqs,
                           const FeasibilityOptions& opt = {});

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

Matrix random_int_matrix(std::size_t r, std::size_t c, long lo, long hi, std::mt19937_64& rng);
Matrix random_invertible(std::size_t n, long lo, long hi, std::mt19937_64& rng);

}  // namespace gk
