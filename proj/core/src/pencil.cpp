// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#include "formcanon/pencil.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace formcanon {

// ---------------------------------------------------------------------------
// canonical blocks
// ---------------------------------------------------------------------------

matrix strip_n1(const field& f, int m) {
  matrix n1(f, static_cast<std::size_t>(m), static_cast<std::size_t>(m) + 1);
  for (int i = 0; i < m; ++i) n1(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = f.one();
  return n1;
}

matrix strip_n2(const field& f, int m) {
  matrix n2(f, static_cast<std::size_t>(m), static_cast<std::size_t>(m) + 1);
  for (int i = 0; i < m; ++i)
    n2(static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1) = f.one();
  return n2;
}

pencil_block pencil_block::make_row_strip(const field& f, int m) {
  require_internal(m >= 0, "row strip parameter must be nonnegative");
  pencil_block b;
  b.fld = f;
  b.kind = pencil_block_kind::row_strip;
  b.m = m;
  b.p = poly(f);
  return b;
}

pencil_block pencil_block::make_col_strip(const field& f, int m) {
  pencil_block b = make_row_strip(f, m);
  b.kind = pencil_block_kind::col_strip;
  return b;
}

pencil_block pencil_block::make_regular(const poly& p, int s) {
  require_internal(s >= 1 && p.degree() >= 1 && p.is_monic(), "bad regular pencil block");
  pencil_block b;
  b.fld = p.get_field();
  b.kind = pencil_block_kind::regular;
  b.p = p;
  b.s = s;
  return b;
}

pencil_block pencil_block::make_nilpotent(const field& f, int n) {
  require_internal(n >= 1, "nilpotent pair size must be positive");
  pencil_block b;
  b.fld = f;
  b.kind = pencil_block_kind::nilpotent_pair;
  b.p = poly(f);
  b.s = n;
  return b;
}

std::size_t pencil_block::rows() const {
  switch (kind) {
    case pencil_block_kind::row_strip: return static_cast<std::size_t>(m);
    case pencil_block_kind::col_strip: return static_cast<std::size_t>(m) + 1;
    case pencil_block_kind::regular: return static_cast<std::size_t>(p.degree() * s);
    case pencil_block_kind::nilpotent_pair: return static_cast<std::size_t>(s);
  }
  return 0;
}

std::size_t pencil_block::cols() const {
  switch (kind) {
    case pencil_block_kind::row_strip: return static_cast<std::size_t>(m) + 1;
    case pencil_block_kind::col_strip: return static_cast<std::size_t>(m);
    default: return rows();
  }
}

std::pair<matrix, matrix> pencil_block::to_matrices() const {
  switch (kind) {
    case pencil_block_kind::row_strip:
      return {strip_n1(fld, m), strip_n2(fld, m)};
    case pencil_block_kind::col_strip:
      return {strip_n2(fld, m).transpose(), strip_n1(fld, m).transpose()};
    case pencil_block_kind::regular:
      return {companion_matrix(p.pow(s)), matrix::identity(fld, rows())};
    case pencil_block_kind::nilpotent_pair:
      return {matrix::identity(fld, rows()),
              jordan_block(fld, rows(), fld.zero())};
  }
  throw internal_error("bad pencil block kind");
}

bool operator==(const pencil_block& a, const pencil_block& b) {
  return a.fld == b.fld && a.kind == b.kind && a.m == b.m && a.p == b.p && a.s == b.s;
}

int pencil_block::compare(const pencil_block& a, const pencil_block& b) {
  auto kind_rank = [](pencil_block_kind k) {
    switch (k) {
      case pencil_block_kind::row_strip: return 0;
      case pencil_block_kind::col_strip: return 1;
      case pencil_block_kind::regular: return 2;
      case pencil_block_kind::nilpotent_pair: return 3;
    }
    return 4;
  };
  int ka = kind_rank(a.kind), kb = kind_rank(b.kind);
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (a.kind) {
    case pencil_block_kind::row_strip:
    case pencil_block_kind::col_strip:
      return a.m == b.m ? 0 : (a.m < b.m ? -1 : 1);
    case pencil_block_kind::regular: {
      int c = poly::compare(a.p, b.p);
      if (c != 0) return c;
      return a.s == b.s ? 0 : (a.s > b.s ? -1 : 1);  // higher powers first
    }
    case pencil_block_kind::nilpotent_pair:
      return a.s == b.s ? 0 : (a.s < b.s ? -1 : 1);
  }
  return 0;
}

std::pair<matrix, matrix> pencil_decomposition::assembled(const field& f) const {
  std::vector<matrix> firsts, seconds;
  for (const auto& b : blocks) {
    auto [x, y] = b.to_matrices();
    firsts.push_back(std::move(x));
    seconds.push_back(std::move(y));
  }
  return {matrix::block_diag(f, firsts), matrix::block_diag(f, seconds)};
}

// ---------------------------------------------------------------------------
// morphism spaces
// ---------------------------------------------------------------------------

std::vector<rep_morphism> morphism_space(const std::vector<matrix>& x,
                                         const std::vector<matrix>& y) {
  require_input(!x.empty() && x.size() == y.size(),
                "morphism_space requires matching nonempty tuples");
  const field& f = x[0].get_field();
  std::size_t rx = x[0].rows(), cx = x[0].cols();
  std::size_t ry = y[0].rows(), cy = y[0].cols();
  for (const auto& mx : x)
    require_input(mx.rows() == rx && mx.cols() == cx, "morphism_space: ragged tuple");
  for (const auto& my : y)
    require_input(my.rows() == ry && my.cols() == cy, "morphism_space: ragged tuple");

  // Unknowns: g (cy x cx) then h (ry x rx), row-major. Equations, for each
  // alpha and each (i, j): sum_l h(i,l) X_a(l,j) - sum_k Y_a(i,k) g(k,j) = 0.
  std::size_t gn = cy * cx, hn = ry * rx;
  matrix sys(f, x.size() * ry * cx, gn + hn);
  std::size_t row = 0;
  for (std::size_t alpha = 0; alpha < x.size(); ++alpha) {
    for (std::size_t i = 0; i < ry; ++i) {
      for (std::size_t j = 0; j < cx; ++j, ++row) {
        for (std::size_t l = 0; l < rx; ++l) sys(row, gn + i * rx + l) += x[alpha](l, j);
        for (std::size_t k = 0; k < cy; ++k) sys(row, k * cx + j) -= y[alpha](i, k);
      }
    }
  }
  matrix ker = nullspace(sys);
  std::vector<rep_morphism> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    rep_morphism m{matrix(f, cy, cx), matrix(f, ry, rx)};
    for (std::size_t k = 0; k < cy; ++k)
      for (std::size_t j = 0; j < cx; ++j) m.g(k, j) = ker(k * cx + j, c);
    for (std::size_t i = 0; i < ry; ++i)
      for (std::size_t l = 0; l < rx; ++l) m.h(i, l) = ker(gn + i * rx + l, c);
    for (std::size_t alpha = 0; alpha < x.size(); ++alpha)
      require_internal(m.h * x[alpha] == y[alpha] * m.g, "morphism space solve failed");
    out.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// decomposition machinery
// ---------------------------------------------------------------------------

namespace {

// Extends the (independent) columns of `given` to a basis of the full space
// by greedily appending standard basis vectors.
matrix complete_basis(const matrix& given) {
  const field& f = given.get_field();
  std::size_t n = given.rows();
  matrix cur = given;
  require_internal(rank(cur) == cur.cols(), "complete_basis: given columns are dependent");
  for (std::size_t i = 0; i < n && cur.cols() < n; ++i) {
    matrix e(f, n, 1);
    e(i, 0) = f.one();
    matrix cand = cur.hcat(e);
    if (rank(cand) == cand.cols()) cur = cand;
  }
  require_internal(cur.cols() == n, "complete_basis: completion failed");
  return cur;
}

struct peel_result {
  int m = 0;
  matrix p, q;  // p * a * q = diag(strip, rest), fully decoupled
};

// Solves n1 z + y a22 = -a12 and n2 z + y b22 = -b12 for z ((m+1) x c2) and
// y (m x r2). Solvable whenever the peeled chain is of minimal degree.
std::pair<matrix, matrix> solve_strip_decoupling(const field& f, int m, const matrix& a12,
                                                 const matrix& a22, const matrix& b12,
                                                 const matrix& b22) {
  std::size_t um = static_cast<std::size_t>(m);
  std::size_t c2 = a22.cols(), r2 = a22.rows();
  matrix z(f, um + 1, c2), y(f, um, r2);
  if (um == 0 || c2 == 0) return {z, y};

  matrix n1 = strip_n1(f, m), n2 = strip_n2(f, m);
  std::size_t zn = (um + 1) * c2, yn = um * r2;
  matrix sys(f, 2 * um * c2, zn + yn);
  matrix rhs(f, 2 * um * c2, 1);
  std::size_t row = 0;
  for (int alpha = 0; alpha < 2; ++alpha) {
    const matrix& n = alpha == 0 ? n1 : n2;
    const matrix& m22 = alpha == 0 ? a22 : b22;
    const matrix& c12 = alpha == 0 ? a12 : b12;
    for (std::size_t i = 0; i < um; ++i) {
      for (std::size_t j = 0; j < c2; ++j, ++row) {
        for (std::size_t k = 0; k <= um; ++k) sys(row, k * c2 + j) += n(i, k);
        for (std::size_t l = 0; l < r2; ++l) sys(row, zn + i * r2 + l) += m22(l, j);
        rhs(row, 0) = -c12(i, j);
      }
    }
  }
  auto sol = solve_linear(sys, rhs);
  require_internal(sol.has_value(), "pencil: strip decoupling must be solvable at minimal degree");
  for (std::size_t k = 0; k <= um; ++k)
    for (std::size_t j = 0; j < c2; ++j) z(k, j) = (*sol)(k * c2 + j, 0);
  for (std::size_t i = 0; i < um; ++i)
    for (std::size_t l = 0; l < r2; ++l) y(i, l) = (*sol)(zn + i * r2 + l, 0);
  return {z, y};
}

// Finds a right singular chain of minimal degree and splits it off:
// p * a * q = diag(N1(m), rest), p * b * q = diag(N2(m), rest). Returns
// nothing when the pencil has full normal column rank (no right strips).
std::optional<peel_result> peel_row_strip(const matrix& a, const matrix& b) {
  const field& f = a.get_field();
  std::size_t r = a.rows(), c = a.cols();
  for (std::size_t d = 0; d < c; ++d) {
    // Chains v_0..v_d with A v_0 = 0, A v_k + B v_{k-1} = 0, B v_d = 0.
    matrix sys(f, (d + 2) * r, (d + 1) * c);
    for (std::size_t k = 0; k <= d; ++k) {
      sys.set_block(k * r, k * c, a);
      sys.set_block((k + 1) * r, k * c, b);
    }
    matrix ker = nullspace(sys);
    if (ker.cols() == 0) continue;

    // Reorder as q_j = (-1)^j v_{d-j}: then B q_0 = 0, B q_j = A q_{j-1},
    // A q_m = 0, matching the strip pair (N1, N2) columnwise.
    std::size_t m = d;
    matrix qblk(f, c, m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
      bool neg = (j % 2) == 1;
      for (std::size_t i = 0; i < c; ++i) {
        scalar v = ker((d - j) * c + i, 0);
        qblk(i, j) = neg ? -v : v;
      }
    }
    matrix aq = a * qblk;
    matrix wblk = aq.submatrix(0, 0, r, m);
    require_internal(rank(qblk) == m + 1, "pencil: minimal chain columns are dependent");
    require_internal(rank(wblk) == m, "pencil: minimal chain images are dependent");

    matrix qfull = complete_basis(qblk);
    matrix pinv = complete_basis(wblk);
    matrix p1 = inverse(pinv);
    matrix a1 = p1 * a * qfull;
    matrix b1 = p1 * b * qfull;

    std::size_t r2 = r - m, c2 = c - (m + 1);
    require_internal(a1.submatrix(0, 0, m, m + 1) == strip_n1(f, static_cast<int>(m)) &&
                         b1.submatrix(0, 0, m, m + 1) == strip_n2(f, static_cast<int>(m)),
                     "pencil: peeled block is not a strip");
    require_internal(a1.submatrix(m, 0, r2, m + 1).is_zero() &&
                         b1.submatrix(m, 0, r2, m + 1).is_zero(),
                     "pencil: peeled strip is not row-closed");

    matrix a12 = a1.submatrix(0, m + 1, m, c2), a22 = a1.submatrix(m, m + 1, r2, c2);
    matrix b12 = b1.submatrix(0, m + 1, m, c2), b22 = b1.submatrix(m, m + 1, r2, c2);
    auto [z, y] = solve_strip_decoupling(f, static_cast<int>(m), a12, a22, b12, b22);

    matrix p2 = matrix::identity(f, r);
    p2.set_block(0, m, y);
    matrix q2 = matrix::identity(f, c);
    q2.set_block(0, m + 1, z);

    peel_result res;
    res.m = static_cast<int>(m);
    res.p = p2 * p1;
    res.q = qfull * q2;
    return res;
  }
  return std::nullopt;
}

// Splits a regular pencil into its finite part (Phi, I) and infinite part
// (I, J(0)) using the fixed points of V -> A^(-1)(B V) and W -> B^(-1)(A W).
void split_regular(const matrix& a, const matrix& b, std::uint64_t seed,
                   std::vector<pencil_block>& blocks, matrix* p_out, matrix* q_out) {
  const field& f = a.get_field();
  std::size_t n = a.rows();
  require_internal(a.is_square() && b.rows() == n && b.cols() == n,
                   "pencil: residual pencil must be square");
  if (n == 0) {
    *p_out = matrix(f, 0, 0);
    *q_out = matrix(f, 0, 0);
    return;
  }

  matrix v = matrix::identity(f, n);
  for (;;) {
    matrix nv = preimage(a, b * v);
    if (nv.cols() == v.cols()) break;
    v = nv;
  }
  matrix w(f, n, 0);
  for (;;) {
    matrix nw = preimage(b, a * w);
    if (nw.cols() == w.cols()) break;
    w = nw;
  }
  std::size_t nf = v.cols(), ni = w.cols();
  require_internal(nf + ni == n && rank(v.hcat(w)) == n,
                   "pencil: deflating subspaces of a regular pencil must be complementary");

  matrix qloc = v.hcat(w);
  matrix pinvloc = (b * v).hcat(a * w);
  require_internal(rank(pinvloc) == n, "pencil: codomain deflation is not a basis");
  matrix ploc = inverse(pinvloc);
  matrix af = ploc * a * qloc, bf = ploc * b * qloc;
  require_internal(af.submatrix(0, nf, nf, ni).is_zero() &&
                       af.submatrix(nf, 0, ni, nf).is_zero() &&
                       bf.submatrix(0, nf, nf, ni).is_zero() &&
                       bf.submatrix(nf, 0, ni, nf).is_zero(),
                   "pencil: regular split is not block-diagonal");

  matrix p_fin(f, 0, 0), q_fin(f, 0, 0), p_inf(f, 0, 0), q_inf(f, 0, 0);

  if (nf > 0) {
    matrix afin = af.submatrix(0, 0, nf, nf), bfin = bf.submatrix(0, 0, nf, nf);
    matrix m = inverse(bfin) * afin;
    primary_form pf = frobenius_primary(m, seed);
    for (const auto& blk : pf.blocks) blocks.push_back(pencil_block::make_regular(blk.p, blk.s));
    q_fin = pf.transform;
    p_fin = inverse(bfin * pf.transform);
  }
  if (ni > 0) {
    matrix ainf = af.submatrix(nf, nf, ni, ni), binf = bf.submatrix(nf, nf, ni, ni);
    matrix nmat = inverse(ainf) * binf;
    primary_form pf = frobenius_primary(nmat, seed);
    std::vector<matrix> revs;
    for (const auto& blk : pf.blocks) {
      require_internal(blk.p == poly::x(f), "pencil: infinite part must be nilpotent");
      blocks.push_back(pencil_block::make_nilpotent(f, blk.s));
      revs.push_back(reversal_permutation(f, blk.size()));
    }
    matrix t = pf.transform * matrix::block_diag(f, revs);
    q_inf = t;
    p_inf = inverse(ainf * t);
  }

  *p_out = matrix::block_diag(f, {p_fin, p_inf}) * ploc;
  *q_out = qloc * matrix::block_diag(f, {q_fin, q_inf});
}

// Appends blocks in discovery order and produces p * a * q = block diagonal.
void decompose_rec(const matrix& a, const matrix& b, std::uint64_t seed,
                   std::vector<pencil_block>& blocks, matrix* p_out, matrix* q_out) {
  const field& f = a.get_field();
  std::size_t r = a.rows(), c = a.cols();

  if (auto pr = peel_row_strip(a, b)) {
    std::size_t m = static_cast<std::size_t>(pr->m);
    matrix a1 = pr->p * a * pr->q, b1 = pr->p * b * pr->q;
    matrix a2 = a1.submatrix(m, m + 1, r - m, c - m - 1);
    matrix b2 = b1.submatrix(m, m + 1, r - m, c - m - 1);
    blocks.push_back(pencil_block::make_row_strip(f, pr->m));
    matrix p2, q2;
    decompose_rec(a2, b2, seed, blocks, &p2, &q2);
    *p_out = matrix::block_diag(f, {matrix::identity(f, m), p2}) * pr->p;
    *q_out = pr->q * matrix::block_diag(f, {matrix::identity(f, m + 1), q2});
    return;
  }

  if (auto pc = peel_row_strip(a.transpose(), b.transpose())) {
    std::size_t m = static_cast<std::size_t>(pc->m);
    // pc peels (N1, N2) off the transposed pair; transposing back leaves
    // (N1^T, N2^T) in front, and reversal conjugation turns that into the
    // canonical (N2^T, N1^T).
    matrix pl = pc->q.transpose(), ql = pc->p.transpose();
    matrix rev_rows = matrix::identity(f, r);
    rev_rows.set_block(0, 0, reversal_permutation(f, m + 1));
    matrix rev_cols = matrix::identity(f, c);
    rev_cols.set_block(0, 0, reversal_permutation(f, m));
    pl = rev_rows * pl;
    ql = ql * rev_cols;

    matrix a1 = pl * a * ql, b1 = pl * b * ql;
    matrix a2 = a1.submatrix(m + 1, m, r - m - 1, c - m);
    matrix b2 = b1.submatrix(m + 1, m, r - m - 1, c - m);
    blocks.push_back(pencil_block::make_col_strip(f, pc->m));
    matrix p2, q2;
    decompose_rec(a2, b2, seed, blocks, &p2, &q2);
    *p_out = matrix::block_diag(f, {matrix::identity(f, m + 1), p2}) * pl;
    *q_out = ql * matrix::block_diag(f, {matrix::identity(f, m), q2});
    return;
  }

  split_regular(a, b, seed, blocks, p_out, q_out);
}

}  // namespace

pencil_decomposition kronecker_decompose(const matrix& a, const matrix& b,
                                         std::uint64_t seed) {
  require_input(a.get_field() == b.get_field(), "pencil matrices over different fields");
  require_input(a.rows() == b.rows() && a.cols() == b.cols(),
                "pencil matrices must share their shape");
  const field& f = a.get_field();

  pencil_decomposition dec;
  decompose_rec(a, b, seed, dec.blocks, &dec.p, &dec.q);

  // Permute discovery order into the canonical block order.
  std::vector<std::size_t> order(dec.blocks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return pencil_block::compare(dec.blocks[i], dec.blocks[j]) < 0;
  });
  std::vector<std::size_t> row_off(dec.blocks.size() + 1, 0), col_off(dec.blocks.size() + 1, 0);
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    row_off[i + 1] = row_off[i] + dec.blocks[i].rows();
    col_off[i + 1] = col_off[i] + dec.blocks[i].cols();
  }
  matrix rperm(f, a.rows(), a.rows());
  matrix cperm(f, a.cols(), a.cols());
  std::size_t tr = 0, tc = 0;
  for (std::size_t t = 0; t < order.size(); ++t) {
    const pencil_block& blk = dec.blocks[order[t]];
    for (std::size_t i = 0; i < blk.rows(); ++i) rperm(tr + i, row_off[order[t]] + i) = f.one();
    for (std::size_t j = 0; j < blk.cols(); ++j) cperm(col_off[order[t]] + j, tc + j) = f.one();
    tr += blk.rows();
    tc += blk.cols();
  }
  dec.p = rperm * dec.p;
  dec.q = dec.q * cperm;
  std::vector<pencil_block> sorted;
  sorted.reserve(order.size());
  for (std::size_t t : order) sorted.push_back(dec.blocks[t]);
  dec.blocks = std::move(sorted);

  auto [ca, cb] = dec.assembled(f);
  require_internal(dec.p * a * dec.q == ca && dec.p * b * dec.q == cb,
                   "pencil: certificate identity failed");
  require_internal(rank(dec.p) == a.rows() && rank(dec.q) == a.cols(),
                   "pencil: certificate transforms are singular");
  return dec;
}

}  // namespace formcanon
