// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "formcanon/scalar.hpp"

namespace formcanon {

// ---------------------------------------------------------------------------
// Univariate polynomials over a formcanon field, stored densely by ascending
// power (coeff(i) is the coefficient of x^i) with no trailing zeros; the zero
// polynomial has degree -1.
//
// Text form (CLI and JSON): terms in descending power joined by '+'/'-', e.g.
// "x^3 - 2*x + 1/2", with bracketed coefficients for two-component fields:
// "x^2 + [0,1]*x + [1,0]".
// ---------------------------------------------------------------------------

class poly {
public:
  poly() : poly(field::rationals()) {}
  explicit poly(const field& f) : f_(f) {}
  poly(const field& f, std::vector<scalar> ascending_coeffs);

  static poly constant(const scalar& c);
  static poly x(const field& f);
  static poly monomial(const field& f, int deg, const scalar& c);
  // Builds from coefficients listed by descending power (leading first).
  static poly from_descending(const field& f, const std::vector<scalar>& cs);

  const field& get_field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  scalar coeff(int i) const;
  scalar leading() const;
  scalar constant_term() const { return coeff(0); }
  const std::vector<scalar>& coeffs() const { return c_; }

  poly operator+(const poly& o) const;
  poly operator-(const poly& o) const;
  poly operator*(const poly& o) const;
  poly operator-() const;
  poly operator*(const scalar& c) const;
  friend bool operator==(const poly& a, const poly& b);
  friend bool operator!=(const poly& a, const poly& b) { return !(a == b); }

  // Division with remainder: *this = q * d + r, deg r < deg d. d nonzero.
  std::pair<poly, poly> divmod(const poly& d) const;
  poly operator/(const poly& d) const { return divmod(d).first; }
  poly operator%(const poly& d) const { return divmod(d).second; }
  bool divides(const poly& multiple) const;

  bool is_monic() const;
  poly monic() const;  // nonzero input
  poly pow(int e) const;
  poly derivative() const;
  scalar eval(const scalar& at) const;
  // Coefficientwise involution.
  poly conj_coeffs() const;
  // f(c * x).
  poly scale_argument(const scalar& c) const;
  // Substitution f(g(x)).
  poly compose(const poly& g) const;

  // Total order for canonical sorting: by degree, then lexicographically on
  // descending coefficients via scalar::compare. Returns -1/0/+1.
  static int compare(const poly& a, const poly& b);

  std::string to_string() const;
  static poly parse(const field& f, std::string_view text);

private:
  void normalize();

  field f_;
  std::vector<scalar> c_;
};

// Monic gcd (0 if both zero).
poly poly_gcd(poly a, poly b);
// Extended gcd: returns monic g with u*a + v*b = g.
poly poly_ext_gcd(const poly& a, const poly& b, poly* u, poly* v);
// Inverse of a modulo m (gcd(a, m) = 1, deg m >= 1); throws invalid_input_error
// if not coprime.
poly poly_mod_inverse(const poly& a, const poly& m);
// Product of distinct irreducible factors (monic); input nonzero. Correct in
// characteristic 0 and over the supported finite fields (uses p-th roots).
poly squarefree_part_poly(const poly& f);

// The conjugate-reciprocal polynomial: coefficients conjugated, order
// reversed, normalized monic. Defined when f(0) != 0 (throws otherwise).
// For monic f with f(0) != 0 this is an involution.
poly conj_reciprocal(const poly& f);
bool is_conj_self_reciprocal(const poly& f);

// Random monic polynomial of exact degree d.
poly random_monic_poly(const field& f, int d, rng& r, std::int64_t height = 5);

// ---------------------------------------------------------------------------
// Finite windows a_lo, ..., a_hi of field values, used for linearly recurrent
// sequences. A polynomial f = g_0 x^m + g_1 x^(m-1) + ... + g_m (g_0 != 0)
// "governs" a sequence when g_0 a_{l+m} + g_1 a_{l+m-1} + ... + g_m a_l = 0
// for every l; on a finite window the condition is checked wherever the
// stencil fits (vacuously true if the window is shorter than m+1).
// ---------------------------------------------------------------------------

class sequence_window {
public:
  sequence_window(int lo, std::vector<scalar> values);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(vals_.size()) - 1; }
  int length() const { return static_cast<int>(vals_.size()); }
  const scalar& at(int index) const;  // index in [lo, hi]
  const std::vector<scalar>& values() const { return vals_; }

  bool satisfies(const poly& f) const;

  // Extends the window to cover [new_lo, new_hi] using the recurrence f.
  // Right extension always works (leading coefficient is invertible); left
  // extension requires f(0) != 0 and throws invalid_input_error mentioning the
  // non-invertible end coefficient otherwise. The existing values must already
  // satisfy f (throws invalid_input_error if not).
  sequence_window extend(const poly& f, int new_lo, int new_hi) const;

private:
  int lo_;
  std::vector<scalar> vals_;
};

// True when the window satisfies chi = p^s but not p^(s-1). (For s = 1 the
// degree-0 recurrence p^0 = 1 is satisfied only by the zero sequence.)
bool is_strictly_recurrent(const sequence_window& w, const poly& p, int s);

}  // namespace formcanon
