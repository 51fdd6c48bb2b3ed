// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#include "formcanon/smith.hpp"

#include <algorithm>

namespace formcanon {

poly_matrix poly_matrix::identity(const field& f, std::size_t n) {
  poly_matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = poly::constant(f.one());
  return m;
}

poly_matrix poly_matrix::characteristic(const matrix& a) {
  require_input(a.is_square(), "characteristic matrix of a non-square matrix");
  const field& f = a.get_field();
  std::size_t n = a.rows();
  poly_matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = -poly::constant(a(i, j));
      if (i == j) m(i, j) = m(i, j) + poly::x(f);
    }
  return m;
}

poly_matrix poly_matrix::operator*(const poly_matrix& o) const {
  require_internal(cols_ == o.rows_, "poly_matrix shape mismatch in *");
  poly_matrix m(f_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const poly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o(k, j).is_zero()) continue;
        m(i, j) = m(i, j) + a * o(k, j);
      }
    }
  return m;
}

bool operator==(const poly_matrix& a, const poly_matrix& b) {
  return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

matrix poly_matrix::right_value(const matrix& m) const {
  require_input(m.is_square(), "right value requires a square argument");
  require_internal(cols_ == m.rows(), "right value shape mismatch");
  int maxdeg = 0;
  for (const auto& p : e_) maxdeg = std::max(maxdeg, p.degree());
  matrix acc(f_, rows_, cols_);
  matrix mpow = matrix::identity(f_, m.rows());
  for (int d = 0; d <= maxdeg; ++d) {
    matrix coeff_d(f_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) coeff_d(i, j) = (*this)(i, j).coeff(d);
    acc = acc + coeff_d * mpow;
    if (d < maxdeg) mpow = mpow * m;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Smith normal form with tracked transforms and their inverses
// ---------------------------------------------------------------------------

namespace {

struct smith_state {
  poly_matrix m, u, uinv, v, vinv;

  void row_add(std::size_t i, std::size_t j, const poly& q) {
    // R_i += q R_j on m and u; compensate on uinv columns: C_j -= q C_i.
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = m(i, c) + q * m(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = u(i, c) + q * u(j, c);
    for (std::size_t r = 0; r < uinv.rows(); ++r) uinv(r, j) = uinv(r, j) - q * uinv(r, i);
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    for (std::size_t r = 0; r < uinv.rows(); ++r) std::swap(uinv(r, i), uinv(r, j));
  }
  void row_scale(std::size_t i, const scalar& c) {
    scalar cinv = c.inverse();
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = m(i, k) * c;
    for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) = u(i, k) * c;
    for (std::size_t r = 0; r < uinv.rows(); ++r) uinv(r, i) = uinv(r, i) * cinv;
  }
  void col_add(std::size_t j, std::size_t i, const poly& q) {
    // C_j += q C_i on m and v; compensate on vinv rows: R_i -= q R_j.
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = m(r, j) + q * m(r, i);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, j) = v(r, j) + q * v(r, i);
    for (std::size_t c = 0; c < vinv.cols(); ++c) vinv(i, c) = vinv(i, c) - q * vinv(j, c);
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    for (std::size_t c = 0; c < vinv.cols(); ++c) std::swap(vinv(i, c), vinv(j, c));
  }
};

}  // namespace

smith_result smith_of_characteristic(const matrix& a) {
  const field& f = a.get_field();
  std::size_t n = a.rows();
  smith_state st{poly_matrix::characteristic(a), poly_matrix::identity(f, n),
                 poly_matrix::identity(f, n), poly_matrix::identity(f, n),
                 poly_matrix::identity(f, n)};

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Select the nonzero entry of minimal degree in the trailing submatrix.
      std::size_t bi = n, bj = n;
      int best = -1;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const poly& e = st.m(i, j);
          if (e.is_zero()) continue;
          if (best < 0 || e.degree() < best) {
            best = e.degree();
            bi = i;
            bj = j;
          }
        }
      require_internal(best >= 0, "characteristic matrix cannot have a zero trailing block");
      st.row_swap(t, bi);
      st.col_swap(t, bj);

      bool reduced = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (st.m(i, t).is_zero()) continue;
        auto [q, r] = st.m(i, t).divmod(st.m(t, t));
        st.row_add(i, t, -q);
        if (!r.is_zero()) reduced = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (st.m(t, j).is_zero()) continue;
        auto [q, r] = st.m(t, j).divmod(st.m(t, t));
        st.col_add(j, t, -q);
        if (!r.is_zero()) reduced = false;
      }
      if (!reduced) continue;  // smaller-degree remainders appeared

      // Pivot now alone in its row and column. Enforce divisibility of the
      // rest of the submatrix.
      bool divisible = true;
      for (std::size_t i = t + 1; i < n && divisible; ++i)
        for (std::size_t j = t + 1; j < n && divisible; ++j) {
          if (!st.m(t, t).divides(st.m(i, j))) {
            st.row_add(t, i, poly::constant(f.one()));
            divisible = false;
          }
        }
      if (divisible) break;
    }
    st.row_scale(t, st.m(t, t).leading().inverse());
  }

  smith_result out{{}, st.u, st.uinv, st.v, st.vinv};
  for (std::size_t t = 0; t < n; ++t) {
    if (st.m(t, t).degree() >= 1) out.invariant_factors.push_back(st.m(t, t));
  }
  // Verification: U (xI - A) V must equal the diagonal we produced, and the
  // tracked inverses must really invert.
  poly_matrix check = st.u * poly_matrix::characteristic(a) * st.v;
  require_internal(check == st.m, "smith transform mismatch");
  require_internal(st.u * st.uinv == poly_matrix::identity(f, n), "smith: uinv mismatch");
  require_internal(st.vinv * st.v == poly_matrix::identity(f, n), "smith: vinv mismatch");
  for (std::size_t t = 0; t + 1 < out.invariant_factors.size(); ++t)
    require_internal(out.invariant_factors[t].divides(out.invariant_factors[t + 1]),
                     "smith: invariant factors do not form a chain");
  return out;
}

poly char_poly(const matrix& a) {
  auto sm = smith_of_characteristic(a);
  poly chi = poly::constant(a.get_field().one());
  for (const auto& d : sm.invariant_factors) chi = chi * d;
  return chi;
}

// ---------------------------------------------------------------------------
// primary rational form
// ---------------------------------------------------------------------------

matrix primary_form::assembled() const {
  std::vector<matrix> ms;
  ms.reserve(blocks.size());
  for (const auto& b : blocks) ms.push_back(b.to_matrix());
  require_internal(!blocks.empty() || transform.rows() == 0, "empty primary form");
  const field& f = transform.get_field();
  return matrix::block_diag(f, ms);
}

primary_form frobenius_primary(const matrix& a, std::uint64_t seed) {
  require_input(a.is_square(), "primary form of a non-square matrix");
  const field& f = a.get_field();
  std::size_t n = a.rows();
  if (n == 0) return primary_form{{}, matrix(f, 0, 0)};

  auto sm_a = smith_of_characteristic(a);
  std::vector<primary_block> blocks;
  for (const auto& d : sm_a.invariant_factors) {
    for (const auto& [p, s] : factorize(d, seed)) blocks.push_back(primary_block{p, s});
  }
  std::sort(blocks.begin(), blocks.end(), [](const primary_block& x, const primary_block& y) {
    int c = poly::compare(x.p, y.p);
    if (c != 0) return c < 0;
    return x.s > y.s;
  });

  primary_form out{std::move(blocks), matrix(f, 0, 0)};
  matrix c = out.assembled();
  require_internal(c.rows() == n, "primary blocks do not fill the matrix");

  auto sm_c = smith_of_characteristic(c);
  require_internal(sm_a.invariant_factors == sm_c.invariant_factors,
                   "primary form has different invariant factors");

  // From U_A (xI-A) V_A = D = U_C (xI-C) V_C one gets
  //   (xI-C) = R(x) (xI-A) Q(x),  Q = V_A Vinv_C,  Q^{-1} = V_C Vinv_A,
  // and the right value T of Q^{-1} at A satisfies T A = C T. T is invertible
  // for equivalence transforms of characteristic matrices; we verify and fall
  // back to a commutant search if the check ever failed.
  poly_matrix qinv = sm_c.v * sm_a.vinv;
  matrix t = qinv.right_value(a);
  matrix s;
  if (try_inverse(t, &s)) {
    require_internal(t * a == c * t, "similarity candidate does not intertwine");
  } else {
    auto basis = commutant_basis(a, c);  // {X : A X = X C}
    auto inv = find_invertible_combination(basis, seed);
    require_internal(inv.has_value(), "no invertible intertwiner found");
    s = *inv;
    require_internal(a * s == s * c, "fallback intertwiner does not intertwine");
    out.transform = s;
    require_internal(inverse(s) * a * s == c, "primary form transform failed verification");
    return out;
  }
  out.transform = s;
  require_internal(inverse(s) * a * s == c, "primary form transform failed verification");
  return out;
}

}  // namespace formcanon
