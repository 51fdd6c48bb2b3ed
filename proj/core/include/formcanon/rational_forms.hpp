// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "formcanon/matrix.hpp"
#include "formcanon/poly.hpp"

namespace formcanon {

// ---------------------------------------------------------------------------
// Local invariants of rational quadratic forms. A "place" is encoded as an
// mpz: 0 for the real place, otherwise a prime (2 allowed).
// ---------------------------------------------------------------------------

// Hilbert symbol (a, b)_v in {-1, +1} for nonzero rationals.
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const mpz_class& v);

// Places where the given nonzero rationals can produce nontrivial local
// invariants: the real place, 2, and the odd primes dividing some squarefree
// part. Sorted, deduplicated.
std::vector<mpz_class> relevant_places(const std::vector<mpq_class>& values);

// Hasse invariant prod_{i<j} (d_i, d_j)_v of a nondegenerate diagonal form.
int hasse_invariant(const std::vector<mpq_class>& diag, const mpz_class& v);

// (positives, negatives) of a nondegenerate diagonal form.
std::pair<int, int> signature_of(const std::vector<mpq_class>& diag);

// ---------------------------------------------------------------------------
// Equivalence of nondegenerate diagonal quadratic forms over the rationals.
// Rank, signature, discriminant square class, and the Hasse invariants at the
// relevant places decide equivalence completely; when the forms are
// equivalent, a congruence witness w with w^T diag(f) w = diag(g) is built by
// represent-and-split search. The verdict is decisive either way; only the
// witness construction is bounded (witness_found = false when the search cap
// is exhausted, which callers must surface honestly).
// ---------------------------------------------------------------------------

struct quadratic_verdict {
  bool equivalent = false;
  bool witness_found = false;
  std::optional<matrix> witness;  // over field::rationals(), exact, verified
  std::string report;
};

quadratic_verdict decide_quadratic(const std::vector<mpq_class>& f,
                                   const std::vector<mpq_class>& g,
                                   int height_cap = 60);

// One rational vector v with sum f_i v_i^2 = target (nonzero target), or
// nullopt within the bound. Stages: single coordinates (square ratio), then
// coordinate pairs, then a pruned integer search over all coordinates.
std::optional<std::vector<mpq_class>> represent_by_diagonal(
    const std::vector<mpq_class>& f, const mpq_class& target,
    int height_cap = 60);

// ---------------------------------------------------------------------------
// Exact real-root machinery for rational polynomials (Sturm chains).
// ---------------------------------------------------------------------------

struct root_interval {
  mpq_class lo, hi;  // lo == hi encodes an exact rational root
};

// Isolating intervals for the distinct real roots, in increasing order.
std::vector<root_interval> isolate_real_roots(const poly& f);

// Number of distinct real roots of f in the half-open interval (a, b].
int sturm_count(const poly& f, const mpq_class& a, const mpq_class& b);

// Sign (-1, 0, +1) of g at the unique root of f inside iv.
int sign_at_root(const poly& g, const poly& f, root_interval iv);

// ---------------------------------------------------------------------------
// Norms from quadratic extensions Q(sqrt(D)), D a squarefree nonsquare.
// ---------------------------------------------------------------------------

// Exact decision via Hilbert symbols: a is a norm iff (a, D)_v = 1 at every
// relevant place.
bool is_norm_from_quadratic(const mpq_class& a, const mpz_class& D);

// Solve x^2 + y^2 = a for positive rational a with trivial norm class
// (Gaussian factorization; exact, deterministic, unbounded).
std::optional<std::pair<mpq_class, mpq_class>> sum_of_two_squares(
    const mpq_class& a);

// Solve x^2 - D y^2 = a. Complete for D = -1 (reduces to two squares); for
// other D a bounded denominator/coordinate search, nullopt when capped.
std::optional<std::pair<mpq_class, mpq_class>> solve_norm_equation(
    const mpq_class& a, const mpz_class& D, int height_cap = 400);

// ---------------------------------------------------------------------------
// The compression of a palindromic polynomial: for self-reciprocal p of even
// degree 2r (identity involution coefficients), the unique monic P of degree
// r with p(x) / x^r = P(x + 1/x). Works over any supported field.
// ---------------------------------------------------------------------------
poly compressed_reciprocal(const poly& p);

}  // namespace formcanon
