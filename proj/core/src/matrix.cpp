// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#include "formcanon/matrix.hpp"

#include <algorithm>

namespace formcanon {

namespace {
void check_same_field(const matrix& a, const matrix& b) {
  require_internal(a.get_field() == b.get_field(), "mixed-field matrix arithmetic");
}
}  // namespace

matrix matrix::identity(const field& f, std::size_t n) {
  matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

matrix matrix::from_rows(const field& f, const std::vector<std::vector<scalar>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require_input(rows[i].size() == c, "ragged rows in matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

matrix matrix::diag(const field& f, const std::vector<scalar>& d) {
  matrix m(f, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

matrix matrix::block_diag(const field& f, const std::vector<matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  matrix m(f, r, c);
  std::size_t i0 = 0, j0 = 0;
  for (const auto& b : blocks) {
    m.set_block(i0, j0, b);
    i0 += b.rows();
    j0 += b.cols();
  }
  return m;
}

matrix matrix::column(const field& f, const std::vector<scalar>& v) {
  matrix m(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

matrix matrix::operator+(const matrix& o) const {
  check_same_field(*this, o);
  require_internal(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in +");
  matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

matrix matrix::operator-(const matrix& o) const {
  check_same_field(*this, o);
  require_internal(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in -");
  matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

matrix matrix::operator-() const {
  matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
  return m;
}

matrix matrix::operator*(const matrix& o) const {
  check_same_field(*this, o);
  require_internal(cols_ == o.rows_, "matrix shape mismatch in *");
  matrix m(f_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const scalar& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o(k, j).is_zero()) continue;
        m(i, j) += aik * o(k, j);
      }
    }
  }
  return m;
}

matrix matrix::operator*(const scalar& c) const {
  matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
  return m;
}

bool operator==(const matrix& a, const matrix& b) {
  return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

matrix matrix::transpose() const {
  matrix m(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

matrix matrix::adjoint() const {
  matrix m(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j).conj();
  return m;
}

bool matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const scalar& x) { return x.is_zero(); });
}

bool matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    }
  return true;
}

matrix matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nrows,
                         std::size_t ncols) const {
  require_internal(r0 + nrows <= rows_ && c0 + ncols <= cols_, "submatrix out of range");
  matrix m(f_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void matrix::set_block(std::size_t r0, std::size_t c0, const matrix& m) {
  require_internal(r0 + m.rows() <= rows_ && c0 + m.cols() <= cols_, "set_block out of range");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

matrix matrix::hcat(const matrix& right) const {
  check_same_field(*this, right);
  require_internal(rows_ == right.rows_, "hcat shape mismatch");
  matrix m(f_, rows_, cols_ + right.cols_);
  m.set_block(0, 0, *this);
  m.set_block(0, cols_, right);
  return m;
}

matrix matrix::vcat(const matrix& below) const {
  check_same_field(*this, below);
  require_internal(cols_ == below.cols_, "vcat shape mismatch");
  matrix m(f_, rows_ + below.rows_, cols_);
  m.set_block(0, 0, *this);
  m.set_block(rows_, 0, below);
  return m;
}

std::vector<scalar> matrix::col_vector(std::size_t j) const {
  std::vector<scalar> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

std::string matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i == 0 ? "[" : " [";
    for (std::size_t j = 0; j < cols_; ++j) {
      out += (*this)(i, j).to_string();
      if (j + 1 < cols_) out += ", ";
    }
    out += "]";
    if (i + 1 < rows_) out += "\n";
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// elimination
// ---------------------------------------------------------------------------

namespace {

// In-place reduction to reduced row echelon form; returns pivot columns.
// When transform != nullptr it accumulates the row operations (starts as
// identity and satisfies transform * original = rref).
std::vector<std::size_t> rref_in_place(matrix& m, matrix* transform) {
  const field& f = m.get_field();
  if (transform) *transform = matrix::identity(f, m.rows());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = m.rows();
    for (std::size_t i = row; i < m.rows(); ++i) {
      if (!m(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(sel, j));
      if (transform)
        for (std::size_t j = 0; j < transform->cols(); ++j)
          std::swap((*transform)(row, j), (*transform)(sel, j));
    }
    scalar inv = m(row, col).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    if (transform)
      for (std::size_t j = 0; j < transform->cols(); ++j)
        (*transform)(row, j) = (*transform)(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      scalar c = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - c * m(row, j);
      if (transform)
        for (std::size_t j = 0; j < transform->cols(); ++j)
          (*transform)(i, j) = (*transform)(i, j) - c * (*transform)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const matrix& a) {
  matrix m = a;
  return rref_in_place(m, nullptr).size();
}

scalar determinant(const matrix& a) {
  require_input(a.is_square(), "determinant of a non-square matrix");
  const field& f = a.get_field();
  matrix m = a;
  scalar det = f.one();
  std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = n;
    for (std::size_t i = col; i < n; ++i) {
      if (!m(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == n) return f.zero();
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(sel, j));
      det = -det;
    }
    det = det * m(col, col);
    scalar inv = m(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      scalar c = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) = m(i, j) - c * m(col, j);
    }
  }
  return det;
}

bool try_inverse(const matrix& a, matrix* out) {
  require_input(a.is_square(), "inverse of a non-square matrix");
  matrix m = a;
  matrix t = a;
  auto pivots = rref_in_place(m, &t);
  if (pivots.size() != a.rows()) return false;
  if (out) *out = t;
  return true;
}

matrix inverse(const matrix& a) {
  matrix out;
  require_input(try_inverse(a, &out), "matrix is singular");
  return out;
}

std::optional<matrix> solve_linear(const matrix& a, const matrix& b) {
  require_internal(a.rows() == b.rows(), "solve_linear shape mismatch");
  const field& f = a.get_field();
  matrix aug = a.hcat(b);
  auto pivots = rref_in_place(aug, nullptr);
  // Any pivot in the b-part means inconsistency.
  for (std::size_t p : pivots)
    if (p >= a.cols()) return std::nullopt;
  matrix x(f, a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  }
  return x;
}

matrix nullspace(const matrix& a) {
  const field& f = a.get_field();
  matrix m = a;
  auto pivots = rref_in_place(m, nullptr);
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (pi < pivots.size() && pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  matrix basis(f, a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis(fc, k) = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, fc);
  }
  return basis;
}

matrix column_space(const matrix& a) {
  matrix m = a;
  auto pivots = rref_in_place(m, nullptr);
  matrix basis(a.get_field(), a.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < a.rows(); ++i) basis(i, k) = a(i, pivots[k]);
  return basis;
}

matrix preimage(const matrix& a, const matrix& s) {
  require_internal(a.rows() == s.rows(), "preimage shape mismatch");
  // Solve a w = s t: kernel of [a | -s], keep the w-part, then re-basis.
  matrix stacked = a.hcat(-s);
  matrix ker = nullspace(stacked);
  matrix wpart = ker.submatrix(0, 0, a.cols(), ker.cols());
  return column_space(wpart);
}

bool is_direct_sum(const matrix& u, const matrix& v) {
  if (u.rows() != v.rows()) return false;
  matrix joint = u.hcat(v);
  return u.cols() + v.cols() == u.rows() && rank(joint) == u.rows();
}

std::vector<matrix> commutant_basis(const matrix& a, const matrix& b) {
  require_input(a.is_square() && b.is_square(), "commutant_basis requires square matrices");
  const field& f = a.get_field();
  std::size_t n = a.rows(), m = b.rows();
  // Unknown G is n x m; equations (A G - G B)(i, j) = 0.
  matrix sys(f, n * m, n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t eq = i * m + j;
      // sum_k A(i,k) G(k,j) - sum_k G(i,k) B(k,j)
      for (std::size_t k = 0; k < n; ++k) sys(eq, k * m + j) += a(i, k);
      for (std::size_t k = 0; k < m; ++k) sys(eq, i * m + k) -= b(k, j);
    }
  }
  matrix ker = nullspace(sys);
  std::vector<matrix> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    matrix g(f, n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) g(i, j) = ker(i * m + j, c);
    out.push_back(g);
  }
  return out;
}

std::pair<std::vector<scalar>, matrix> congruent_diagonalize(const matrix& g) {
  require_input(g.is_square(), "diagonalization needs a square input");
  require_input(g == g.adjoint(), "diagonalization needs a Hermitian input");
  const field& f = g.get_field();
  require_input(f.characteristic() != 2, "characteristic 2 is unsupported");
  const std::size_t n = g.rows();
  matrix work = g;
  matrix c = matrix::identity(f, n);

  // Column operation col_j += col_i * t, mirrored on rows and accumulated.
  auto add_col = [&](std::size_t j, std::size_t i, const scalar& t) {
    for (std::size_t row = 0; row < n; ++row)
      work(row, j) = work(row, j) + work(row, i) * t;
    const scalar tc = t.conj();
    for (std::size_t col = 0; col < n; ++col)
      work(j, col) = work(j, col) + tc * work(i, col);
    for (std::size_t row = 0; row < n; ++row)
      c(row, j) = c(row, j) + c(row, i) * t;
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t row = 0; row < n; ++row)
      std::swap(work(row, i), work(row, j));
    for (std::size_t col = 0; col < n; ++col)
      std::swap(work(i, col), work(j, col));
    for (std::size_t row = 0; row < n; ++row) std::swap(c(row, i), c(row, j));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i)
      if (!work(i, i).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      // All remaining diagonal entries vanish; mix in an off-diagonal one.
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!work(i, j).is_zero()) {
            oi = i;
            oj = j;
            break;
          }
      if (oi == n) break;  // the remaining block is zero
      // col_oi += col_oj * conj(w) makes the (oi, oi) entry 2 w conj(w) != 0.
      add_col(oi, oj, work(oi, oj).conj());
      require_internal(!work(oi, oi).is_zero(),
                       "off-diagonal mixing creates a pivot");
      pivot = oi;
    }
    if (pivot != k) swap_cols(pivot, k);
    const scalar dinv = work(k, k).inverse();
    for (std::size_t j = k + 1; j < n; ++j) {
      if (work(k, j).is_zero()) continue;
      add_col(j, k, -(dinv * work(k, j)));
    }
  }

  std::vector<scalar> d;
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) d.push_back(work(i, i));
  require_internal(c.adjoint() * g * c == matrix::diag(f, d),
                   "congruent diagonalization verifies");
  return {d, c};
}

std::optional<matrix> find_invertible_combination(const std::vector<matrix>& basis,
                                                  std::uint64_t seed, int budget) {
  if (basis.empty()) return std::nullopt;
  const field& f = basis[0].get_field();
  matrix out;
  for (const auto& b : basis)
    if (try_inverse(b, &out)) return b;
  matrix acc(f, basis[0].rows(), basis[0].cols());
  for (const auto& b : basis) {
    acc = acc + b;
    if (try_inverse(acc, &out)) return acc;
  }
  // Exhaustive over all coefficient tuples when that is small enough.
  if (f.is_finite()) {
    double total = 1;
    for (std::size_t i = 0; i < basis.size() && total <= 2e5; ++i)
      total *= static_cast<double>(f.order());
    if (total <= 2e5) {
      std::vector<scalar> elems = f.all_elements();
      std::vector<std::size_t> digits(basis.size(), 0);
      while (true) {
        matrix cand(f, basis[0].rows(), basis[0].cols());
        for (std::size_t i = 0; i < basis.size(); ++i)
          cand = cand + basis[i] * elems[digits[i]];
        if (try_inverse(cand, &out)) return cand;
        std::size_t pos = 0;
        while (pos < digits.size()) {
          if (++digits[pos] < elems.size()) break;
          digits[pos] = 0;
          ++pos;
        }
        if (pos == digits.size()) return std::nullopt;
      }
    }
  }
  rng r(seed ^ 0xa02bdbf7bb3c0a7ull);
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::int64_t height = 1 + attempt / 50;
    matrix cand(f, basis[0].rows(), basis[0].cols());
    for (const auto& b : basis) cand = cand + b * f.random_element(r, height);
    if (try_inverse(cand, &out)) return cand;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// structured matrices
// ---------------------------------------------------------------------------

matrix companion_matrix(const poly& chi) {
  require_input(chi.is_monic() && chi.degree() >= 1, "companion matrix needs a monic polynomial");
  const field& f = chi.get_field();
  auto n = static_cast<std::size_t>(chi.degree());
  matrix m(f, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = f.one();
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -chi.coeff(static_cast<int>(i));
  return m;
}

matrix jordan_block(const field& f, std::size_t n, const scalar& lambda) {
  matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = lambda;
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = f.one();
  return m;
}

matrix reversal_permutation(const field& f, std::size_t n) {
  matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = f.one();
  return m;
}

matrix skew_sum(const matrix& a, const matrix& b) {
  require_internal(a.get_field() == b.get_field(), "mixed-field skew sum");
  matrix m(a.get_field(), b.rows() + a.rows(), a.cols() + b.cols());
  m.set_block(0, a.cols(), b);
  m.set_block(b.rows(), 0, a);
  return m;
}

matrix poly_eval_matrix(const poly& f, const matrix& m) {
  require_input(m.is_square(), "polynomial of a non-square matrix");
  const field& fld = m.get_field();
  matrix acc(fld, m.rows(), m.rows());
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * m;
    for (std::size_t d = 0; d < m.rows(); ++d) acc(d, d) += f.coeff(i);
  }
  return acc;
}

poly min_poly(const matrix& a) {
  require_input(a.is_square(), "minimal polynomial of a non-square matrix");
  const field& f = a.get_field();
  std::size_t n = a.rows();
  poly m = poly::constant(f.one());
  for (std::size_t basis_i = 0; basis_i < n; ++basis_i) {
    if (m.degree() == static_cast<int>(n)) break;
    // Krylov chain of e_i.
    matrix v(f, n, 1);
    v(basis_i, 0) = f.one();
    matrix krylov = v;
    poly local(f);
    for (std::size_t d = 1; d <= n; ++d) {
      matrix next = a * krylov.submatrix(0, krylov.cols() - 1, n, 1);
      // Is next in the span of krylov columns?
      auto sol = solve_linear(krylov, next);
      if (sol) {
        // next = sum c_k A^k e_i: minimal polynomial of e_i is
        // x^d - sum c_k x^k.
        std::vector<scalar> cs(d + 1, f.zero());
        for (std::size_t k = 0; k < d; ++k) cs[k] = -(*sol)(k, 0);
        cs[d] = f.one();
        local = poly(f, std::move(cs));
        break;
      }
      krylov = krylov.hcat(next);
    }
    require_internal(!local.is_zero(), "krylov chain failed to terminate");
    // m = lcm(m, local)
    poly g = poly_gcd(m, local);
    m = (m * local / g).monic();
  }
  require_internal(poly_eval_matrix(m, a).is_zero(), "minimal polynomial does not annihilate");
  return m;
}

matrix random_matrix(const field& f, std::size_t rows, std::size_t cols, rng& r,
                     std::int64_t height) {
  matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.random_element(r, height);
  return m;
}

matrix random_invertible(const field& f, std::size_t n, rng& r, std::int64_t height) {
  while (true) {
    matrix m = random_matrix(f, n, n, r, height);
    if (rank(m) == n) return m;
  }
}

}  // namespace formcanon
