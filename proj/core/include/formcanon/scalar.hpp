// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "formcanon/common.hpp"

namespace formcanon {

// ---------------------------------------------------------------------------
// Supported coefficient fields, each with its distinguished involution:
//
//   rationals              Q          identity
//   gaussian_rationals     Q(i)       complex conjugation
//   prime_field            GF(p)      identity                (p an odd prime)
//   prime_square_field     GF(p^2)    Frobenius x -> x^p      (p an odd prime)
//
// GF(p^2) is realized as GF(p)[t]/(t^2 - n) where n is the least quadratic
// nonresidue mod p; the Frobenius sends t to -t. Characteristic 2 is rejected
// at construction (the classification requires 1/2).
// ---------------------------------------------------------------------------

enum class field_kind {
  rationals,
  gaussian_rationals,
  prime_field,
  prime_square_field,
};

class scalar;

class field {
public:
  field() = default;  // rationals

  static field rationals();
  static field gaussian_rationals();
  static field prime(std::int64_t p);
  static field prime_square(std::int64_t p);

  // Parses a field tag: "q", "qi", "gf:P", "gf:P,2".
  static field parse(std::string_view tag);

  field_kind kind() const { return kind_; }
  std::int64_t characteristic() const;  // 0 for q / qi
  std::int64_t modulus() const { return p_; }          // finite fields only
  std::int64_t nonresidue() const { return nonres_; }  // prime_square only
  bool is_finite() const;
  std::uint64_t order() const;  // finite fields only
  // True when the distinguished involution is the identity (q, gf:P).
  bool identity_involution() const;
  std::string tag() const;

  scalar zero() const;
  scalar one() const;
  scalar from_int(std::int64_t n) const;
  scalar from_rational(const mpq_class& q) const;  // q, qi only
  // A skew element k with conj(k) = -k, k != 0: i for Q(i), t for GF(p^2).
  // Empty for identity-involution fields.
  std::optional<scalar> skew_unit() const;
  // All field elements in a fixed order (finite fields only; throws otherwise).
  std::vector<scalar> all_elements() const;
  // Uniformly random element (finite) / random of bounded height (infinite:
  // numerators and denominators drawn from [-height, height]).
  scalar random_element(rng& r, std::int64_t height = 5) const;

  friend bool operator==(const field& a, const field& b) = default;

private:
  field(field_kind k, std::int64_t p, std::int64_t nonres)
      : kind_(k), p_(p), nonres_(nonres) {}

  field_kind kind_ = field_kind::rationals;
  std::int64_t p_ = 0;
  std::int64_t nonres_ = 0;
};

// ---------------------------------------------------------------------------
// scalar: an element of one of the fields above, with exact arithmetic.
//
// Text encodings (used by the polynomial parser and JSON I/O):
//   q       "a/b" or "a"
//   qi      "[re,im]" with rational components (JSON: array of two strings)
//   gf:P    canonical residue 0..p-1 (JSON: integer)
//   gf:P,2  "[a,b]" meaning a + b t (JSON: array of two integers)
// ---------------------------------------------------------------------------

class scalar {
public:
  scalar() : f_(field::rationals()), v_(mpq_class(0)) {}

  const field& get_field() const { return f_; }

  // -- arithmetic (operands must share a field) -----------------------------
  scalar operator+(const scalar& o) const;
  scalar operator-(const scalar& o) const;
  scalar operator*(const scalar& o) const;
  scalar operator/(const scalar& o) const;  // throws invalid_input_error on /0
  scalar operator-() const;
  scalar& operator+=(const scalar& o) { return *this = *this + o; }
  scalar& operator-=(const scalar& o) { return *this = *this - o; }
  scalar& operator*=(const scalar& o) { return *this = *this * o; }
  scalar& operator/=(const scalar& o) { return *this = *this / o; }

  scalar inverse() const;  // throws invalid_input_error on 0
  // The field's distinguished involution.
  scalar conj() const;
  scalar pow(std::uint64_t e) const;

  bool is_zero() const;
  bool is_one() const;
  bool is_conj_fixed() const { return conj() == *this; }

  friend bool operator==(const scalar& a, const scalar& b);
  friend bool operator!=(const scalar& a, const scalar& b) { return !(a == b); }

  // Total order used for canonical sorting and tie-breaking. Returns -1/0/+1.
  // q: by value; qi: lexicographic on (re, im); finite: by residue (pair).
  static int compare(const scalar& a, const scalar& b);

  std::string to_string() const;
  static scalar parse(const field& f, std::string_view text);

  // max(|num|,|den|) over all rational components; 1 for finite fields.
  mpz_class height() const;

  // Rational components (q / qi only).
  const mpq_class& rational_part() const;
  const mpq_class& imaginary_part() const;  // qi only
  // Residue components (finite fields; second component 0 for gf:P).
  std::int64_t residue_a() const;
  std::int64_t residue_b() const;

  // -- square/norm classes ---------------------------------------------------
  bool is_square() const;  // is there w in the same field with w^2 = *this?
  // Canonical representative of the coset modulo nonzero squares:
  //   q:    signed squarefree integer
  //   gf:P: 1 or the least nonresidue (0 for 0)
  // Only these two fields support it (throws unsupported_error otherwise).
  scalar square_class_representative() const;
  // Canonical representative modulo the norm group {c * conj(c)} of the
  // nonidentity-involution fields, for conj-fixed scalars:
  //   qi:     sign * product of primes = 3 (mod 4) in the squarefree part
  //   gf:P,2: 1 (norms are all of GF(p)*), for nonzero scalars
  scalar norm_class_representative() const;

  friend class field;

private:
  struct qi_value {
    mpq_class re, im;
    friend bool operator==(const qi_value&, const qi_value&) = default;
  };
  struct fin_value {
    std::int64_t a = 0, b = 0;
    friend bool operator==(const fin_value&, const fin_value&) = default;
  };

  scalar(field f, std::variant<mpq_class, qi_value, fin_value> v)
      : f_(f), v_(std::move(v)) {}

  field f_;
  std::variant<mpq_class, qi_value, fin_value> v_;
};

// ---------------------------------------------------------------------------
// Exact integer number theory used for square/norm classes and (elsewhere)
// Hilbert symbols: deterministic Miller-Rabin plus Pollard rho.
// ---------------------------------------------------------------------------

bool is_probable_prime(const mpz_class& n);
// Prime factorization of |n| as (prime, exponent) pairs in increasing prime
// order; n must be nonzero.
std::vector<std::pair<mpz_class, int>> factor_integer(const mpz_class& n);
// Signed squarefree part: the unique squarefree d with n = d * m^2, sign kept.
mpz_class squarefree_part(const mpz_class& n);
// Legendre symbol (a|p) for odd prime p: -1, 0, +1.
int legendre_symbol(const mpz_class& a, const mpz_class& p);
// Least quadratic nonresidue modulo an odd prime.
std::int64_t least_nonresidue(std::int64_t p);

}  // namespace formcanon
