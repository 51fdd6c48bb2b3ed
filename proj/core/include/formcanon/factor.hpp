// formcanon: exact canonical forms for forms and operators over involutive fields.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "formcanon/poly.hpp"

namespace formcanon {

// Complete factorization into monic irreducibles with multiplicities:
// f = leading(f) * prod factor^mult. Deterministic for a fixed seed (the seed
// drives the equal-degree splitting over finite fields); output sorted by
// poly::compare, so equal inputs give byte-equal results.
//
// Supported fields: gf:P and gf:P,2 (Cantor-Zassenhaus), q (Hensel lifting
// with subset recombination), qi (squarefree norm descent to q).
std::vector<std::pair<poly, int>> factorize(const poly& f, std::uint64_t seed = default_seed);

bool is_irreducible(const poly& f, std::uint64_t seed = default_seed);

// All monic irreducible polynomials of degree d over a finite field, sorted
// by poly::compare. Guarded against huge enumerations (order^d <= 10^6).
std::vector<poly> monic_irreducibles(const field& f, int d);

// base^e mod m over any supported field (e >= 0).
poly poly_powmod(const poly& base, const mpz_class& e, const poly& m);

}  // namespace formcanon
