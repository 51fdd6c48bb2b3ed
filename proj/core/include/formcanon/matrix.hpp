// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "formcanon/poly.hpp"

namespace formcanon {

// ---------------------------------------------------------------------------
// Dense matrices over a formcanon field, with exact Gaussian elimination.
// Indices are 0-based. adjoint() is the conjugate transpose with respect to
// the field's distinguished involution.
// ---------------------------------------------------------------------------

class matrix {
public:
  matrix() : matrix(field::rationals(), 0, 0) {}
  matrix(const field& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

  static matrix identity(const field& f, std::size_t n);
  static matrix from_rows(const field& f, const std::vector<std::vector<scalar>>& rows);
  static matrix diag(const field& f, const std::vector<scalar>& d);
  static matrix block_diag(const field& f, const std::vector<matrix>& blocks);
  static matrix column(const field& f, const std::vector<scalar>& v);

  const field& get_field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  matrix operator+(const matrix& o) const;
  matrix operator-(const matrix& o) const;
  matrix operator*(const matrix& o) const;
  matrix operator*(const scalar& c) const;
  matrix operator-() const;
  friend bool operator==(const matrix& a, const matrix& b);
  friend bool operator!=(const matrix& a, const matrix& b) { return !(a == b); }

  matrix transpose() const;
  matrix adjoint() const;  // conjugate transpose
  bool is_zero() const;
  bool is_identity() const;

  matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const matrix& m);
  matrix hcat(const matrix& right) const;
  matrix vcat(const matrix& below) const;
  std::vector<scalar> col_vector(std::size_t j) const;

  std::string to_string() const;  // human-readable, for diagnostics

private:
  field f_;
  std::size_t rows_, cols_;
  std::vector<scalar> a_;
};

// ---- elimination kit --------------------------------------------------------

std::size_t rank(const matrix& a);
scalar determinant(const matrix& a);
bool try_inverse(const matrix& a, matrix* out);
matrix inverse(const matrix& a);  // throws invalid_input_error when singular
// One solution X of A X = B, if any.
std::optional<matrix> solve_linear(const matrix& a, const matrix& b);
// Basis of the right kernel, as columns (possibly 0 columns).
matrix nullspace(const matrix& a);
// Basis of the column space: the pivot columns of a (deterministic choice).
matrix column_space(const matrix& a);
// Basis of {w : a w lies in the column space of s}.
matrix preimage(const matrix& a, const matrix& s);
// Do the columns of u and v together span the full space with trivial
// intersection? (u, v bases of subspaces of K^n.)
bool is_direct_sum(const matrix& u, const matrix& v);

// Basis of {G : A G = G B} (A n x n, B m x m, G n x m).
std::vector<matrix> commutant_basis(const matrix& a, const matrix& b);

// Congruent diagonalization of a Hermitian matrix (g = g.adjoint()): returns
// (d, c) with c invertible and c.adjoint() * g * c = diag(d). Zero entries of
// d appear exactly when g is singular. Needs characteristic != 2.
std::pair<std::vector<scalar>, matrix> congruent_diagonalize(const matrix& g);

// Searches the span of the given square matrices for an invertible element:
// single elements, prefix sums, then seeded random combinations (exhaustive
// over small finite coefficient spaces). Returns nothing if the search budget
// is exhausted.
std::optional<matrix> find_invertible_combination(const std::vector<matrix>& basis,
                                                  std::uint64_t seed, int budget = 400);

// ---- structured matrices -----------------------------------------------------

// Companion matrix of a monic chi = x^n + c_1 x^(n-1) + ... + c_n: ones on the
// subdiagonal, last column (-c_n, ..., -c_1)^T.
matrix companion_matrix(const poly& chi);
// Jordan block with given eigenvalue; ones on the superdiagonal.
matrix jordan_block(const field& f, std::size_t n, const scalar& lambda);
// Anti-identity (reversal) permutation.
matrix reversal_permutation(const field& f, std::size_t n);
// [A \ B] = [[0, B], [A, 0]].
matrix skew_sum(const matrix& a, const matrix& b);
// f(M) by Horner.
matrix poly_eval_matrix(const poly& f, const matrix& m);
// Minimal polynomial via Krylov chains.
poly min_poly(const matrix& a);

matrix random_matrix(const field& f, std::size_t rows, std::size_t cols, rng& r,
                     std::int64_t height = 3);
matrix random_invertible(const field& f, std::size_t n, rng& r, std::int64_t height = 3);

}  // namespace formcanon
