// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>

#include "formcanon/matrix.hpp"
#include "formcanon/poly.hpp"
#include "formcanon/smith.hpp"

namespace formcanon {

// ---------------------------------------------------------------------------
// Auxiliary matrices attached to a Frobenius block Phi = companion(p^s).
//
// Three families, each defined by an exact matrix equation:
//
//   cosquare_root    A = A^* Phi              (so the *-cosquare A^{-*}A = Phi)
//   pair_symmetrizer A = A^*,  A Phi = eps (A Phi)^*
//   invariant_form   A = eps A^* = Phi^* A Phi
//
// with eps in {+1, -1} and eps = +1 required under a nonidentity involution.
// Existence depends only on (p, s, eps, involution); when a matrix of the
// family exists at all, an explicit one is produced as a Toeplitz (or
// row-signed Hankel) matrix filled from a short seed fragment extended by the
// linear recurrence of chi = p^s. Every returned matrix is re-verified
// against its defining equation and for nonsingularity before being handed
// out.
// ---------------------------------------------------------------------------

// Outcome of an auxiliary-matrix construction. Non-existence is a regular
// result value, not an error: `exists` is false and `failed_condition` names
// the violated existence condition ("A1"/"A2" for cosquare_root, "B1"/"B2"
// for pair_symmetrizer, "C1"/"C2" for invariant_form). On success `mat`
// holds the verified nonsingular matrix and `window` the recurrent scalar
// sequence its entries were drawn from.
struct aux_matrix_result {
  bool exists = false;
  std::optional<matrix> mat;
  std::optional<sequence_window> window;
  std::string failed_condition;
};

// Nonsingular A with A = A^* Phi for Phi = companion(p^s), n = deg(p^s).
// Exists iff
//   (A1) chi is conj-self-reciprocal (in particular chi(0) != 0), and
//   (A2) p != x + (-1)^(n-1) when the involution on the field is the
//        identity.
// The seed fragment is (conj(a), 0, ..., 0, a) placed at indices -m..m-1,
// m = ceil(n/2), with a chosen per case:
//   n even: a = 1, except a = skew unit when p = x + alpha, alpha^(n-1) = -1;
//   n odd:  a = skew unit when p = x + 1, else a = chi(-1).
aux_matrix_result cosquare_root(const primary_block& blk);

// Nonsingular Hermitian A such that congruence by A makes Phi eps-selfadjoint:
// A = A^* and A Phi = eps (A Phi)^*. Exists iff
//   (B1) chi(x) = eps^n conj(chi)(eps x), and
//   (B2) chi is not an even power of x when eps = -1.
// The matrix is [eps^i a_{i+j}] with seed (a_2..a_{n+1}) = (1,0,...,0) for
// nonsingular Phi and (0,...,0,1) for singular Phi.
// Throws invalid_input_error when eps = -1 under a nonidentity involution.
aux_matrix_result pair_symmetrizer(const primary_block& blk, int eps);

// Nonsingular eps-Hermitian A invariant under congruence by Phi:
// A = eps A^* = Phi^* A Phi. Exists iff
//   (C1) chi is conj-self-reciprocal, and
//   (C2) deg(p) > 1 whenever the involution is the identity and
//        eps = (-1)^n.
// The seed fragment sits at indices -m..m (n even: m = n/2; n odd:
// m = (n-1)/2) and is chosen per case:
//   n even, chi(0) != eps:             (eps*conj(a_n) - 1, 0,...,0, a_n - eps)
//   n even, chi(0) = eps, id. invol.:  (a_1, -1, 0,...,0, -1, a_1)
//                                      ((a_1, -2, a_1) when n = 2)
//   n even, chi(0) = eps, nonid.:      (-k, 0,...,0, k), k the skew unit
//   n odd, p = x + alpha, alpha^(n-1) = -1:  (-k, 0,...,0, k)
//   n odd, otherwise:                  (eps, 0,...,0, 1)
// where a_n = chi(0) and a_1 = coefficient of x^(n-1) in chi.
// Throws invalid_input_error when eps = -1 under a nonidentity involution.
aux_matrix_result invariant_form(const primary_block& blk, int eps);

// True iff a is square, nonsingular, and a = phi^* a phi. For a Frobenius
// block phi this holds exactly when a is Toeplitz along diagonals with the
// diagonal sequence strictly recurrent under chi(phi) and chi
// conj-self-reciprocal; the constructions above all pass this predicate
// against their own block.
bool is_congruence_invariant(const matrix& a, const matrix& phi);

}  // namespace formcanon
