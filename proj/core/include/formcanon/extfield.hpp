// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "formcanon/matrix.hpp"
#include "formcanon/poly.hpp"

namespace formcanon {

// ---------------------------------------------------------------------------
// Residue fields K[x]/p(x) with an involution induced by the base involution
// and an action on the generator kappa (the residue of x):
//
//   plain:          f(kappa)° = conj(f)(kappa)        requires conj(p) = p
//   kappa_inverse:  f(kappa)° = conj(f)(kappa^{-1})   requires p conj-self-
//                                                     reciprocal
//   kappa_delta:    f(kappa)° = conj(f)(delta·kappa)  requires conj(p)(delta x)
//                                                     ~ p and delta·conj(delta)=1
//
// These are the coefficient domains of the Hermitian data attached to
// indecomposable selfadjoint summands; each decomposition problem induces
// one of the three actions on its residue field.
// ---------------------------------------------------------------------------

enum class involution_action { plain, kappa_inverse, kappa_delta };

class ext_field {
public:
  // plain or kappa_inverse over a monic irreducible modulus.
  ext_field(const poly& modulus, involution_action action);
  // kappa_delta with the given unit-norm scaling.
  ext_field(const poly& modulus, const scalar& delta);

  const field& base() const { return modulus_.get_field(); }
  const poly& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }
  involution_action action() const { return action_; }
  const scalar& delta() const;  // kappa_delta only
  // Is the induced involution the identity map on the whole residue field?
  bool identity_on_residue() const { return identity_; }
  // Number of elements of the residue field (finite base only).
  mpz_class order() const;

  friend bool operator==(const ext_field& a, const ext_field& b);
  friend bool operator!=(const ext_field& a, const ext_field& b) {
    return !(a == b);
  }

  poly reduce(const poly& f) const;
  poly mul(const poly& a, const poly& b) const;
  poly pow(const poly& a, const mpz_class& e) const;
  poly inv(const poly& a) const;  // invalid_input_error on zero
  poly conj_res(const poly& a) const;
  poly kappa() const;
  poly one() const;
  poly from_base(const scalar& c) const;
  bool is_stationary(const poly& a) const;

  // All residues in a deterministic order (finite base; throws when the
  // order exceeds the cap).
  std::vector<poly> all_residues(std::size_t cap = 1u << 20) const;

  // Monic minimal polynomial of a residue over the base field.
  poly min_poly_res(const poly& elem) const;

  // Exact square root in the residue field. `decided` is always true over a
  // finite base; over q/qi it can come back false in rare cases where the
  // factorization-based search cannot separate candidate roots, and callers
  // must then treat squareness as unknown.
  struct sqrt_result {
    bool decided = false;
    std::optional<poly> root;
  };
  sqrt_result sqrt_res(const poly& elem) const;

  // -- symmetric Laurent representation (kappa_inverse action) --------------
  // Every stationary element is uniquely
  //   conj(a_r) k^{-r} + ... + conj(a_1) k^{-1} + a_0 + a_1 k + ... + a_r k^r
  // where deg(p) = 2r or 2r+1, a_0 is conj-fixed, and for even degree a_r is
  // constrained per the involution: a_r = 0 (identity involution),
  // a_r conj-fixed (nonidentity, p(0) != 1), a_r conj-negated (nonidentity,
  // p(0) = 1). Returns (a_0, ..., a_r); the reconstruction is verified.
  std::vector<scalar> stationary_coefficients(const poly& elem) const;
  poly from_stationary_coefficients(const std::vector<scalar>& coeffs) const;
  int laurent_radius() const { return degree() / 2; }

private:
  void init_checks();
  poly modulus_;
  involution_action action_;
  scalar delta_;
  bool identity_ = false;
};

// ---------------------------------------------------------------------------
// Matrices over a residue field, entries stored as reduced polynomials.
// Just enough for congruence witnesses: multiply, adjoint, invert, compare.
// ---------------------------------------------------------------------------
class residue_matrix {
public:
  residue_matrix(const ext_field& e, std::size_t rows, std::size_t cols);
  static residue_matrix identity(const ext_field& e, std::size_t n);
  static residue_matrix diagonal(const ext_field& e,
                                 const std::vector<poly>& d);

  const ext_field& ext() const { return e_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  poly& operator()(std::size_t i, std::size_t j);
  const poly& operator()(std::size_t i, std::size_t j) const;

  residue_matrix operator*(const residue_matrix& o) const;
  residue_matrix adjoint() const;
  residue_matrix inverse() const;  // invalid_input_error when singular
  friend bool operator==(const residue_matrix& a, const residue_matrix& b);
  friend bool operator!=(const residue_matrix& a, const residue_matrix& b) {
    return !(a == b);
  }

  std::string to_string() const;

private:
  ext_field e_;
  std::size_t rows_, cols_;
  std::vector<poly> a_;
};

// Congruent diagonalization of a Hermitian residue matrix: returns (d, c)
// with c° g c = diag(d), c invertible. Zero diagonal entries appear exactly
// when g is singular.
std::pair<std::vector<poly>, residue_matrix> hermitian_diagonalize(
    const ext_field& e, const residue_matrix& g);

}  // namespace formcanon
