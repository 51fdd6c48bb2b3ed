// formcanon tests: polynomial arithmetic, text forms, and recurrent windows.
// SPDX-License-Identifier: MIT
#include <doctest.h>

#include "formcanon/poly.hpp"

using namespace formcanon;

namespace {
poly pp(const field& f, const char* text) { return poly::parse(f, text); }
}  // namespace

TEST_CASE("construction and normalization") {
  field q = field::rationals();
  poly z(q);
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  poly f(q, {q.from_int(1), q.from_int(2), q.zero()});  // trailing zero dropped
  CHECK(f.degree() == 1);
  CHECK(f.coeff(0) == q.one());
  CHECK(f.coeff(1) == q.from_int(2));
  CHECK(f.coeff(7).is_zero());  // out-of-range coefficients read as zero
  CHECK(poly::x(q).degree() == 1);
  CHECK(poly::monomial(q, 3, q.from_int(2)).to_string() == "2*x^3");
  poly g = poly::from_descending(q, {q.one(), q.zero(), q.from_int(-1)});
  CHECK(g == pp(q, "x^2 - 1"));
}

TEST_CASE("arithmetic, division, gcd") {
  field q = field::rationals();
  CHECK(pp(q, "x + 1") * pp(q, "x - 1") == pp(q, "x^2 - 1"));
  CHECK(pp(q, "x^2 - 1") + pp(q, "1") == pp(q, "x^2"));
  auto [quot, rem] = pp(q, "x^3 + 2*x + 1").divmod(pp(q, "x^2 + 1"));
  CHECK(quot == pp(q, "x"));
  CHECK(rem == pp(q, "x + 1"));
  CHECK(pp(q, "x + 1").divides(pp(q, "x^2 - 1")));
  CHECK(!pp(q, "x + 2").divides(pp(q, "x^2 - 1")));
  CHECK(poly_gcd(pp(q, "x^2 - 1"), pp(q, "x^2 + 2*x + 1")) == pp(q, "x + 1"));

  poly u, v;
  poly a = pp(q, "x^3 + 1"), b = pp(q, "x^2 + 1");
  poly g = poly_ext_gcd(a, b, &u, &v);
  CHECK(g == pp(q, "1"));
  CHECK(u * a + v * b == g);

  poly inv = poly_mod_inverse(pp(q, "x"), pp(q, "x^2 + 1"));
  CHECK((inv * pp(q, "x")) % pp(q, "x^2 + 1") == pp(q, "1"));
  CHECK_THROWS_AS(poly_mod_inverse(pp(q, "x + 1"), pp(q, "x^2 + 2*x + 1")),
                  invalid_input_error);

  CHECK(pp(q, "x^2 + 1").eval(q.from_int(2)) == q.from_int(5));
  CHECK(pp(q, "x^3 - 2*x").derivative() == pp(q, "3*x^2 - 2"));
  CHECK(pp(q, "2*x^2 + 4").monic() == pp(q, "x^2 + 2"));
  CHECK(pp(q, "x + 1").pow(2) == pp(q, "x^2 + 2*x + 1"));
  CHECK(pp(q, "x^2 + x").scale_argument(q.from_int(2)) == pp(q, "4*x^2 + 2*x"));
  CHECK(pp(q, "x^2 + 1").compose(pp(q, "x - 1")) == pp(q, "x^2 - 2*x + 2"));
  CHECK(squarefree_part_poly(pp(q, "x^3 + 2*x^2 + x")) == pp(q, "x^2 + x"));
}

TEST_CASE("finite-field polynomial arithmetic") {
  field f5 = field::prime(5);
  CHECK(pp(f5, "x + 3") * pp(f5, "x + 4") == pp(f5, "x^2 + 2*x + 2"));
  // Squarefree part in characteristic p: (x+1)^5 has derivative 0.
  poly pth = pp(f5, "x + 1").pow(5);
  CHECK(pth == pp(f5, "x^5 + 1"));
  CHECK(squarefree_part_poly(pth) == pp(f5, "x + 1"));

  field f9 = field::prime_square(3);
  poly h = pp(f9, "x^2 + [0,1]*x + [1,0]");
  CHECK(h.coeff(1) == *f9.skew_unit());
  CHECK(h.conj_coeffs() == pp(f9, "x^2 + [0,2]*x + 1"));
}

TEST_CASE("text round trips") {
  field q = field::rationals();
  for (const char* s : {"0", "1", "-1", "x", "-x", "x^3 - 2*x + 1/2",
                        "x^2 - 3/4", "2*x^5 + x"}) {
    poly f = pp(q, s);
    CHECK(poly::parse(q, f.to_string()) == f);
    CHECK(f.to_string() == s);
  }
  field qi = field::gaussian_rationals();
  poly g = pp(qi, "x^2 + [0,1]*x + [1,0]");
  CHECK(poly::parse(qi, g.to_string()) == g);
  field f5 = field::prime(5);
  CHECK(pp(f5, "x^2 + 4*x + 3").to_string() == "x^2 + 4*x + 3");
  CHECK(pp(f5, "x^2 - x") == pp(f5, "x^2 + 4*x"));
  CHECK_THROWS_AS(poly::parse(q, "x^^2"), invalid_input_error);
  CHECK_THROWS_AS(poly::parse(q, "y + 1"), invalid_input_error);
}

TEST_CASE("ordering") {
  field q = field::rationals();
  CHECK(poly::compare(pp(q, "x"), pp(q, "x^2")) == -1);   // lower degree first
  CHECK(poly::compare(pp(q, "x - 3"), pp(q, "x - 2")) == -1);
  CHECK(poly::compare(pp(q, "x + 1"), pp(q, "x + 1")) == 0);
}

TEST_CASE("conjugate-reciprocal") {
  field q = field::rationals();
  poly f = pp(q, "x^2 + 2*x + 3");
  CHECK(conj_reciprocal(f) == pp(q, "x^2 + 2/3*x + 1/3"));
  CHECK(conj_reciprocal(conj_reciprocal(f)) == f);  // involution on monic f
  CHECK(is_conj_self_reciprocal(pp(q, "x^2 + 1")));
  CHECK(is_conj_self_reciprocal(pp(q, "x^2 - 1")));
  CHECK(is_conj_self_reciprocal(pp(q, "x - 1")));
  CHECK(!is_conj_self_reciprocal(pp(q, "x + 2")));
  CHECK_THROWS_AS(conj_reciprocal(pp(q, "x^2 + x")), invalid_input_error);

  field qi = field::gaussian_rationals();
  // x - i has root i with 1/conj(i) = i, so it is conj-self-reciprocal.
  poly xi = pp(qi, "x - [0,1]");
  CHECK(conj_reciprocal(xi) == xi);
  CHECK(is_conj_self_reciprocal(xi));
  CHECK(!is_conj_self_reciprocal(pp(qi, "x - [0,2]")));

  field f9 = field::prime_square(3);
  poly ft = pp(f9, "x - [0,1]");  // root t, conj-inverse 1/(-t) = ... check closure
  CHECK(conj_reciprocal(conj_reciprocal(ft)) == ft);
}

TEST_CASE("sequence windows and recurrences") {
  field q = field::rationals();
  auto fib = sequence_window(0, {q.from_int(1), q.from_int(1), q.from_int(2),
                                 q.from_int(3), q.from_int(5), q.from_int(8)});
  poly rec = pp(q, "x^2 - x - 1");
  CHECK(fib.satisfies(rec));
  CHECK(!fib.satisfies(pp(q, "x - 1")));

  auto right = fib.extend(rec, 0, 8);
  CHECK(right.at(7) == q.from_int(21));
  CHECK(right.at(8) == q.from_int(34));

  auto left = fib.extend(rec, -2, 5);
  CHECK(left.at(-1) == q.from_int(0));
  CHECK(left.at(-2) == q.from_int(1));
  CHECK(left.satisfies(rec));

  // Both-sided extension of a short window.
  auto both = sequence_window(0, {q.one(), q.one()}).extend(rec, -1, 3);
  CHECK(both.at(3) == q.from_int(3));

  // Left extension fails when the recurrence has constant term zero.
  poly xsq = pp(q, "x^2");
  auto w = sequence_window(0, {q.one(), q.zero(), q.zero()});
  CHECK(w.satisfies(xsq));
  CHECK_NOTHROW(w.extend(xsq, 0, 5));
  CHECK_THROWS_WITH_AS(w.extend(xsq, -1, 2),
                       doctest::Contains("non-invertible end coefficient"),
                       invalid_input_error);

  // Extending a window that does not satisfy the recurrence is rejected.
  CHECK_THROWS_AS(fib.extend(pp(q, "x - 1"), 0, 7), invalid_input_error);
}

TEST_CASE("strict recurrence depth") {
  field q = field::rationals();
  poly p = pp(q, "x - 1");
  // a_l = l + 1 satisfies (x-1)^2 but not (x-1): strictly 2-recurrent.
  auto arith = sequence_window(0, {q.from_int(1), q.from_int(2), q.from_int(3),
                                   q.from_int(4)});
  CHECK(is_strictly_recurrent(arith, p, 2));
  CHECK(!is_strictly_recurrent(arith, p, 1));
  // The constant sequence is (x-1)-recurrent, hence not strict at depth 2.
  auto ones = sequence_window(0, {q.one(), q.one(), q.one()});
  CHECK(is_strictly_recurrent(ones, p, 1));
  CHECK(!is_strictly_recurrent(ones, p, 2));
  // Depth 1 demands a nonzero sequence (the empty product governs only 0).
  auto zeros = sequence_window(0, {q.zero(), q.zero()});
  CHECK(!is_strictly_recurrent(zeros, p, 1));
  // Geometric sequence 2^l is strictly (x-2)-recurrent at depth 1.
  auto geom = sequence_window(0, {q.from_int(1), q.from_int(2), q.from_int(4)});
  CHECK(is_strictly_recurrent(geom, pp(q, "x - 2"), 1));
}

TEST_CASE("random polynomials are deterministic and monic") {
  field f9 = field::prime_square(3);
  rng r1(7), r2(7);
  for (int d = 1; d <= 4; ++d) {
    poly a = random_monic_poly(f9, d, r1);
    poly b = random_monic_poly(f9, d, r2);
    CHECK(a == b);
    CHECK(a.is_monic());
    CHECK(a.degree() == d);
  }
}
