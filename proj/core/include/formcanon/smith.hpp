// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "formcanon/factor.hpp"
#include "formcanon/matrix.hpp"

namespace formcanon {

// ---------------------------------------------------------------------------
// Matrices over K[x], just enough for the Smith normal form of xI - A with
// tracked unimodular transforms, and the similarity extraction that turns a
// square matrix into its primary rational (Frobenius) form.
// ---------------------------------------------------------------------------

class poly_matrix {
public:
  poly_matrix(const field& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), e_(rows * cols, poly(f)) {}

  static poly_matrix identity(const field& f, std::size_t n);
  static poly_matrix characteristic(const matrix& a);  // xI - A

  const field& get_field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  poly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const poly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  poly_matrix operator*(const poly_matrix& o) const;
  friend bool operator==(const poly_matrix& a, const poly_matrix& b);

  // Right value sum_i C_i M^i where *this = sum_i C_i x^i (matrix coefficients).
  matrix right_value(const matrix& m) const;

private:
  field f_;
  std::size_t rows_, cols_;
  std::vector<poly> e_;
};

// U (xI - A) V = diag(1, ..., 1, d_1, ..., d_k) with monic d_i, d_i | d_{i+1}.
// Uinv and Vinv are tracked alongside so no polynomial-matrix inversion is
// ever needed.
struct smith_result {
  std::vector<poly> invariant_factors;  // nonconstant factors only, ascending
  poly_matrix u, uinv, v, vinv;
};

smith_result smith_of_characteristic(const matrix& a);

poly char_poly(const matrix& a);

// ---------------------------------------------------------------------------
// Primary rational form: S^{-1} A S = block_diag of companion(p^s) blocks,
// sorted by (p, s descending) with p ordered by poly::compare. The companion
// convention puts ones on the subdiagonal.
// ---------------------------------------------------------------------------

struct primary_block {
  poly p;  // monic irreducible
  int s;   // power
  poly chi() const { return p.pow(s); }
  std::size_t size() const { return static_cast<std::size_t>(p.degree() * s); }
  matrix to_matrix() const { return companion_matrix(chi()); }
};

struct primary_form {
  std::vector<primary_block> blocks;
  matrix transform;  // S, verified: S^{-1} A S = assembled()
  matrix assembled() const;
};

primary_form frobenius_primary(const matrix& a, std::uint64_t seed = default_seed);

}  // namespace formcanon
