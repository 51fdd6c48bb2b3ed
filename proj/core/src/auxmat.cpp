// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#include "formcanon/auxmat.hpp"

#include <utility>
#include <vector>

#include "formcanon/common.hpp"

namespace formcanon {

namespace {

// Window with `first` at index lo, `last` at index hi, zeros between. A
// length-one window keeps only `last`.
sequence_window end_seeded_window(const field& f, int lo, int hi,
                                  const scalar& first, const scalar& last) {
  require_internal(hi >= lo, "auxmat: empty seed fragment");
  std::vector<scalar> vals(static_cast<std::size_t>(hi - lo + 1), f.zero());
  vals.front() = first;
  vals.back() = last;
  return sequence_window(lo, std::move(vals));
}

// Extends the seed over at least [need_lo, need_hi] by the chi-recurrence.
// The theorems guarantee the seed is consistent with chi; a failure here
// means a construction bug, so surface it as an internal error.
sequence_window grow(const sequence_window& seed, const poly& chi, int need_lo,
                     int need_hi) {
  require_internal(seed.satisfies(chi),
                   "auxmat: seed fragment breaks its own recurrence");
  int lo = need_lo < seed.lo() ? need_lo : seed.lo();
  int hi = need_hi > seed.hi() ? need_hi : seed.hi();
  return seed.extend(chi, lo, hi);
}

// Toeplitz matrix [a_{j-i}] of size n from a window covering [1-n, n-1].
matrix toeplitz_from(const field& f, const sequence_window& w, std::size_t n) {
  matrix a(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = w.at(static_cast<int>(j) - static_cast<int>(i));
  return a;
}

void check_block(const primary_block& blk) {
  require_input(blk.p.degree() >= 1, "block polynomial must be nonconstant");
  require_input(blk.p.is_monic(), "block polynomial must be monic");
  require_input(blk.s >= 1, "block power must be at least 1");
}

void check_epsilon(const field& f, int eps) {
  require_input(eps == 1 || eps == -1, "epsilon must be +1 or -1");
  require_input(eps == 1 || f.identity_involution(),
                "epsilon must be +1 under a nonidentity involution");
}

scalar skew_unit_or_die(const field& f) {
  std::optional<scalar> k = f.skew_unit();
  require_internal(k.has_value(),
                   "auxmat: skew-unit seed reached under an identity involution");
  return *k;
}

aux_matrix_result missing(std::string condition) {
  aux_matrix_result r;
  r.exists = false;
  r.failed_condition = std::move(condition);
  return r;
}

aux_matrix_result found(matrix a, sequence_window w) {
  aux_matrix_result r;
  r.exists = true;
  r.mat = std::move(a);
  r.window = std::move(w);
  return r;
}

// p = x + alpha with alpha^(n-1) = -1?
bool linear_with_sign_flip(const poly& p, std::size_t n) {
  if (p.degree() != 1) return false;
  const field& f = p.get_field();
  scalar alpha = p.constant_term();
  return alpha.pow(n - 1) == -f.one();
}

}  // namespace

aux_matrix_result cosquare_root(const primary_block& blk) {
  check_block(blk);
  const field& f = blk.p.get_field();
  const poly chi = blk.chi();
  const std::size_t n = blk.size();

  if (chi.constant_term().is_zero() || !is_conj_self_reciprocal(chi))
    return missing("A1");
  if (f.identity_involution() && blk.p.degree() == 1 &&
      blk.p.constant_term() == (n % 2 == 0 ? -f.one() : f.one()))
    return missing("A2");

  scalar a = f.one();
  if (n % 2 == 0) {
    if (linear_with_sign_flip(blk.p, n)) a = skew_unit_or_die(f);
  } else {
    if (blk.p == poly::x(f) + poly::constant(f.one()))
      a = skew_unit_or_die(f);
    else
      a = chi.eval(-f.one());
  }

  const int m = (static_cast<int>(n) + 1) / 2;
  sequence_window seed = end_seeded_window(f, -m, m - 1, a.conj(), a);
  sequence_window w = grow(seed, chi, 1 - static_cast<int>(n),
                           static_cast<int>(n) - 1);
  matrix amat = toeplitz_from(f, w, n);

  const matrix phi = blk.to_matrix();
  require_internal(amat == amat.adjoint() * phi,
                   "auxmat: cosquare root fails its defining equation");
  require_internal(rank(amat) == n, "auxmat: cosquare root is singular");
  require_internal(is_strictly_recurrent(w, blk.p, blk.s),
                   "auxmat: cosquare root sequence is not strictly recurrent");
  return found(std::move(amat), std::move(w));
}

aux_matrix_result pair_symmetrizer(const primary_block& blk, int eps) {
  check_block(blk);
  const field& f = blk.p.get_field();
  check_epsilon(f, eps);
  const poly chi = blk.chi();
  const std::size_t n = blk.size();
  const scalar eps_s = f.from_int(eps);

  poly rhs = chi.conj_coeffs().scale_argument(eps_s);
  if (eps == -1 && n % 2 == 1) rhs = -rhs;
  if (chi != rhs) return missing("B1");
  if (eps == -1 && n % 2 == 0 && blk.p == poly::x(f)) return missing("B2");

  const bool singular = chi.constant_term().is_zero();
  sequence_window seed =
      singular ? end_seeded_window(f, 2, static_cast<int>(n) + 1, f.zero(), f.one())
               : end_seeded_window(f, 2, static_cast<int>(n) + 1, f.one(), f.zero());
  if (n == 1) seed = sequence_window(2, {f.one()});
  sequence_window w = grow(seed, chi, 2, 2 * static_cast<int>(n));

  matrix amat(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    scalar row_sign = eps_s.pow(i + 1);
    for (std::size_t j = 0; j < n; ++j)
      amat(i, j) = row_sign * w.at(static_cast<int>(i + j) + 2);
  }

  const matrix phi = blk.to_matrix();
  const matrix aphi = amat * phi;
  require_internal(amat == amat.adjoint(),
                   "auxmat: symmetrizer is not Hermitian");
  require_internal(aphi == aphi.adjoint() * eps_s,
                   "auxmat: symmetrized block has the wrong symmetry");
  require_internal(rank(amat) == n, "auxmat: symmetrizer is singular");
  return found(std::move(amat), std::move(w));
}

aux_matrix_result invariant_form(const primary_block& blk, int eps) {
  check_block(blk);
  const field& f = blk.p.get_field();
  check_epsilon(f, eps);
  const poly chi = blk.chi();
  const std::size_t n = blk.size();
  const scalar eps_s = f.from_int(eps);
  const int sign_of_n = n % 2 == 0 ? 1 : -1;

  if (chi.constant_term().is_zero() || !is_conj_self_reciprocal(chi))
    return missing("C1");
  if (f.identity_involution() && eps == sign_of_n && blk.p.degree() == 1)
    return missing("C2");

  const int m = n % 2 == 0 ? static_cast<int>(n) / 2
                           : (static_cast<int>(n) - 1) / 2;
  sequence_window seed(0, {f.one()});
  if (n % 2 == 0) {
    const scalar an = chi.constant_term();
    if (an != eps_s) {
      seed = end_seeded_window(f, -m, m, eps_s * an.conj() - f.one(),
                               an - eps_s);
    } else if (f.identity_involution()) {
      require_internal(eps == 1,
                       "auxmat: even-size identity-involution seed needs eps = +1");
      const scalar a1 = chi.coeff(static_cast<int>(n) - 1);
      std::vector<scalar> vals(n + 1, f.zero());
      vals.front() = a1;
      vals.back() = a1;
      if (n == 2) {
        vals[1] = f.from_int(-2);
      } else {
        vals[1] = -f.one();
        vals[n - 1] = -f.one();
      }
      seed = sequence_window(-m, std::move(vals));
    } else {
      scalar k = skew_unit_or_die(f);
      seed = end_seeded_window(f, -m, m, -k, k);
    }
  } else {
    if (linear_with_sign_flip(blk.p, n)) {
      scalar k = skew_unit_or_die(f);
      seed = end_seeded_window(f, -m, m, -k, k);
    } else {
      seed = end_seeded_window(f, -m, m, eps_s, f.one());
    }
  }

  sequence_window w = grow(seed, chi, 1 - static_cast<int>(n),
                           static_cast<int>(n) - 1);
  matrix amat = toeplitz_from(f, w, n);

  const matrix phi = blk.to_matrix();
  require_internal(amat == amat.adjoint() * eps_s,
                   "auxmat: invariant form has the wrong symmetry");
  require_internal(amat == phi.adjoint() * amat * phi,
                   "auxmat: invariant form is not congruence-invariant");
  require_internal(rank(amat) == n, "auxmat: invariant form is singular");
  require_internal(is_strictly_recurrent(w, blk.p, blk.s),
                   "auxmat: invariant form sequence is not strictly recurrent");
  return found(std::move(amat), std::move(w));
}

bool is_congruence_invariant(const matrix& a, const matrix& phi) {
  require_input(a.rows() == a.cols(), "matrix must be square");
  require_input(phi.rows() == phi.cols() && phi.rows() == a.rows(),
                "matrix sizes must match");
  if (rank(a) != a.rows()) return false;
  return a == phi.adjoint() * a * phi;
}

}  // namespace formcanon
