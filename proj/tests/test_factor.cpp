// formcanon tests: polynomial factorization over all supported fields.
// SPDX-License-Identifier: MIT
#include <doctest.h>

#include "formcanon/factor.hpp"

using namespace formcanon;

namespace {

poly pp(const field& f, const char* text) { return poly::parse(f, text); }

// Multiplies a factorization back together, including the leading unit.
poly assemble(const scalar& lead, const std::vector<std::pair<poly, int>>& fs) {
  poly out = poly::constant(lead);
  for (const auto& [g, m] : fs) out = out * g.pow(m);
  return out;
}

void check_factorization(const poly& f) {
  auto fs = factorize(f);
  CHECK(assemble(f.leading(), fs) == f);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    CHECK(fs[i].first.is_monic());
    CHECK(fs[i].second >= 1);
    CHECK(is_irreducible(fs[i].first));
    if (i + 1 < fs.size()) CHECK(poly::compare(fs[i].first, fs[i + 1].first) < 0);
  }
}

}  // namespace

TEST_CASE("prime field factorization") {
  field f5 = field::prime(5);
  auto fs = factorize(pp(f5, "x^2 + 1"));
  REQUIRE(fs.size() == 2);  // -1 = 2^2 mod 5
  CHECK(fs[0].first == pp(f5, "x + 2"));
  CHECK(fs[1].first == pp(f5, "x + 3"));

  field f3 = field::prime(3);
  auto irr = factorize(pp(f3, "x^2 + 1"));
  REQUIRE(irr.size() == 1);  // -1 is not a square mod 3
  CHECK(irr[0].first == pp(f3, "x^2 + 1"));
  CHECK(irr[0].second == 1);
  CHECK(is_irreducible(pp(f3, "x^2 + 1")));
  CHECK(!is_irreducible(pp(f5, "x^2 + 1")));

  auto mult = factorize(pp(f3, "x + 1").pow(2) * pp(f3, "x^2 + 1"));
  REQUIRE(mult.size() == 2);
  CHECK(mult[0] == std::pair{pp(f3, "x + 1"), 2});
  CHECK(mult[1] == std::pair{pp(f3, "x^2 + 1"), 1});

  // p-th powers exercise the inseparable branch: (x+1)^3 = x^3 + 1 over GF(3).
  auto cube = factorize(pp(f3, "x^3 + 1"));
  REQUIRE(cube.size() == 1);
  CHECK(cube[0] == std::pair{pp(f3, "x + 1"), 3});

  check_factorization(pp(f5, "2*x^6 + x^4 + 3*x + 4"));
}

TEST_CASE("quadratic extension factorization") {
  field f9 = field::prime_square(3);
  // x^2 - t splits since t is a square in GF(9).
  check_factorization(pp(f9, "x^2 + [0,2]"));
  CHECK(factorize(pp(f9, "x^2 + [0,2]")).size() == 2);
  // x^2 - (1+t) stays irreducible ((1+t) is a nonsquare).
  CHECK(is_irreducible(pp(f9, "x^2 + [2,2]")));
  // (x - t)^3 (x + t) exercises multiplicity and the Frobenius p-th root,
  // whose coefficient p-th root is conjugation in GF(9).
  poly f = pp(f9, "x + [0,2]").pow(3) * pp(f9, "x + [0,1]");
  auto fs = factorize(f);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == std::pair{pp(f9, "x + [0,1]"), 1});
  CHECK(fs[1] == std::pair{pp(f9, "x + [0,2]"), 3});
  rng r(3);
  check_factorization(random_monic_poly(f9, 6, r));
}

TEST_CASE("rational factorization") {
  field q = field::rationals();
  auto fs = factorize(pp(q, "x^2 - 1"));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == pp(q, "x - 1"));
  CHECK(fs[1].first == pp(q, "x + 1"));

  // x^4 + 1 factors modulo every prime but is irreducible over q: the
  // recombination search must reject all proper subsets.
  auto x41 = factorize(pp(q, "x^4 + 1"));
  REQUIRE(x41.size() == 1);
  CHECK(x41[0] == std::pair{pp(q, "x^4 + 1"), 1});
  CHECK(is_irreducible(pp(q, "x^4 + 1")));

  // Non-monic input with rational roots: 6x^2 + 5x + 1 = 6(x + 1/2)(x + 1/3).
  auto nm = factorize(pp(q, "6*x^2 + 5*x + 1"));
  REQUIRE(nm.size() == 2);
  CHECK(nm[0].first == pp(q, "x + 1/3"));
  CHECK(nm[1].first == pp(q, "x + 1/2"));
  CHECK(assemble(q.from_int(6), nm) == pp(q, "6*x^2 + 5*x + 1"));

  auto mixed = factorize(pp(q, "x^4 - x^2 - 2"));  // (x^2 + 1)(x^2 - 2)
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].first == pp(q, "x^2 - 2"));
  CHECK(mixed[1].first == pp(q, "x^2 + 1"));

  auto rep = factorize(pp(q, "x - 1").pow(2) * pp(q, "x + 2"));
  REQUIRE(rep.size() == 2);
  CHECK(rep[0] == std::pair{pp(q, "x - 1"), 2});
  CHECK(rep[1] == std::pair{pp(q, "x + 2"), 1});

  check_factorization(pp(q, "x^6 - 3*x^4 + 3/7*x + 2"));
  CHECK(factorize(pp(q, "5")).empty());  // units have no factors
}

TEST_CASE("gaussian rational factorization") {
  field qi = field::gaussian_rationals();
  auto fs = factorize(pp(qi, "x^2 + 1"));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == pp(qi, "x - [0,1]"));
  CHECK(fs[1].first == pp(qi, "x + [0,1]"));

  CHECK(is_irreducible(pp(qi, "x^2 - 2")));

  // x^4 + 1 = (x^2 - i)(x^2 + i) over q(i); both quadratics are irreducible.
  auto x41 = factorize(pp(qi, "x^4 + 1"));
  REQUIRE(x41.size() == 2);
  CHECK(x41[0].first == pp(qi, "x^2 - [0,1]"));
  CHECK(x41[1].first == pp(qi, "x^2 + [0,1]"));

  auto sq = factorize(pp(qi, "x^2 + 1").pow(2));
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].second == 2);
  CHECK(sq[1].second == 2);

  check_factorization(pp(qi, "x^3 + [1,1]*x + [0,3]"));
}

TEST_CASE("factorization is deterministic") {
  field f7 = field::prime(7);
  rng r(99);
  for (int trial = 0; trial < 5; ++trial) {
    poly f = random_monic_poly(f7, 8, r);
    CHECK(factorize(f, 123) == factorize(f, 123));
    check_factorization(f);
  }
}

TEST_CASE("irreducible enumeration") {
  field f3 = field::prime(3);
  auto deg1 = monic_irreducibles(f3, 1);
  REQUIRE(deg1.size() == 3);
  CHECK(deg1[0] == pp(f3, "x"));
  auto deg2 = monic_irreducibles(f3, 2);
  REQUIRE(deg2.size() == 3);  // (9 - 3) / 2
  CHECK(deg2[0] == pp(f3, "x^2 + 1"));
  CHECK(deg2[1] == pp(f3, "x^2 + x + 2"));
  CHECK(deg2[2] == pp(f3, "x^2 + 2*x + 2"));
  CHECK_THROWS_AS(monic_irreducibles(field::rationals(), 2), invalid_input_error);
}

TEST_CASE("powmod") {
  field f5 = field::prime(5);
  poly m = pp(f5, "x^2 + 2");
  poly r = poly_powmod(pp(f5, "x"), mpz_class(24), m);
  // x^2 = -2 mod m, so x^24 = (-2)^12 = 2^12 = 4096 = 1 mod 5.
  CHECK(r == pp(f5, "1"));
}
