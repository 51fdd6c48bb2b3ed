// formcanon tests: rational quadratic form invariants and real-root tools.
// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <vector>

#include "formcanon/common.hpp"
#include "formcanon/rational_forms.hpp"
#include "formcanon/scalar.hpp"

using namespace formcanon;

namespace {

poly pp(const char* text) {
  return poly::parse(field::rationals(), text);
}

mpq_class q(long num, long den = 1) { return mpq_class(num, den); }

}  // namespace

TEST_CASE("Hilbert symbols at small places") {
  CHECK(hilbert_symbol(q(-1), q(-1), 0) == -1);
  CHECK(hilbert_symbol(q(-1), q(-1), 2) == -1);
  CHECK(hilbert_symbol(q(-1), q(-1), 3) == 1);
  CHECK(hilbert_symbol(q(-1), q(-1), 5) == 1);
  CHECK(hilbert_symbol(q(1), q(-7), 2) == 1);
  CHECK(hilbert_symbol(q(2), q(3), 3) == -1);
  CHECK(hilbert_symbol(q(2), q(3), 2) == -1);
  CHECK(hilbert_symbol(q(2), q(3), 5) == 1);
  CHECK(hilbert_symbol(q(2), q(3), 0) == 1);
  CHECK(hilbert_symbol(q(5), q(5), 5) == 1);
  CHECK(hilbert_symbol(q(3), q(3), 3) == -1);
  CHECK(hilbert_symbol(q(2), q(-1), 2) == 1);
  // Denominators only shift by squares: (1/2, 3)_v = (2, 3)_v.
  CHECK(hilbert_symbol(q(1, 2), q(3), 3) == -1);
  CHECK(hilbert_symbol(q(1, 2), q(3), 2) == -1);
  CHECK_THROWS_AS(hilbert_symbol(q(0), q(1), 2), invalid_input_error);
  CHECK_THROWS_AS(hilbert_symbol(q(1), q(1), 4), invalid_input_error);
}

TEST_CASE("Hilbert symbols: bimultiplicativity and the product formula") {
  rng r(default_seed);
  int checked = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const mpq_class a(r.range(-30, 30), r.range(1, 12));
    const mpq_class b(r.range(-30, 30), r.range(1, 12));
    const mpq_class c(r.range(-30, 30), r.range(1, 12));
    if (a == 0 || b == 0 || c == 0) continue;
    ++checked;
    const auto places = relevant_places({a, b, c});
    int product = 1;
    for (const auto& v : places) {
      CHECK(hilbert_symbol(a * b, c, v) ==
            hilbert_symbol(a, c, v) * hilbert_symbol(b, c, v));
      CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
      product *= hilbert_symbol(a, b, v);
    }
    // Places outside the relevant set contribute +1, so the global product
    // reduces to the relevant ones.
    CHECK(product == 1);
  }
  CHECK(checked > 150);
}

TEST_CASE("relevant places collect prime support") {
  const auto places = relevant_places({q(6), q(-5, 2)});
  // 0, 2, and the odd primes 3, 5 (2 appears once).
  REQUIRE(places.size() == 4);
  CHECK(places[0] == 0);
  CHECK(places[1] == 2);
  CHECK(places[2] == 3);
  CHECK(places[3] == 5);
}

TEST_CASE("quadratic form equivalence over the rationals") {
  // <1,1> and <2,2>: same rank, signature, discriminant class, and Hasse
  // invariants everywhere.
  auto v = decide_quadratic({q(1), q(1)}, {q(2), q(2)});
  CHECK(v.equivalent);
  REQUIRE(v.witness_found);
  REQUIRE(v.witness.has_value());

  // <1,1> vs <1,-1>: signatures differ.
  v = decide_quadratic({q(1), q(1)}, {q(1), q(-1)});
  CHECK_FALSE(v.equivalent);
  CHECK(v.report.find("signature") != std::string::npos);

  // <1,1,1> vs <1,1,7>: discriminant classes differ.
  v = decide_quadratic({q(1), q(1), q(1)}, {q(1), q(1), q(7)});
  CHECK_FALSE(v.equivalent);
  CHECK(v.report.find("discriminant") != std::string::npos);

  // <2,3> vs <1,6>: all classical invariants agree except the Hasse
  // invariant (at 2 and 3).
  v = decide_quadratic({q(2), q(3)}, {q(1), q(6)});
  CHECK_FALSE(v.equivalent);
  CHECK(v.report.find("Hasse") != std::string::npos);

  // <3,3> vs <1,1>: same discriminant class 9 ~ 1, but Hasse differs at 3.
  v = decide_quadratic({q(3), q(3)}, {q(1), q(1)});
  CHECK_FALSE(v.equivalent);

  // <2,3> vs <5,30>: equivalent with a nontrivial witness.
  v = decide_quadratic({q(2), q(3)}, {q(5), q(30)});
  CHECK(v.equivalent);
  CHECK(v.witness_found);

  // Rank mismatch.
  v = decide_quadratic({q(1)}, {q(1), q(1)});
  CHECK_FALSE(v.equivalent);

  // Permutations and square scalings are equivalences.
  v = decide_quadratic({q(1), q(2)}, {q(2), q(1)});
  CHECK(v.equivalent);
  CHECK(v.witness_found);
  v = decide_quadratic({q(3), q(-5)}, {q(27), q(-20)});
  CHECK(v.equivalent);
  CHECK(v.witness_found);
}

TEST_CASE("witnesses are exact congruences") {
  const field fq = field::rationals();
  const std::vector<std::vector<mpq_class>> lhs = {
      {q(1), q(1)}, {q(2), q(3)}, {q(1), q(-1)}, {q(2), q(3), q(10)}};
  const std::vector<std::vector<mpq_class>> rhs = {
      {q(2), q(2)}, {q(5), q(30)}, {q(-5), q(5)}, {q(3), q(2), q(10)}};
  for (std::size_t t = 0; t < lhs.size(); ++t) {
    const auto v = decide_quadratic(lhs[t], rhs[t]);
    REQUIRE(v.equivalent);
    REQUIRE(v.witness_found);
    std::vector<scalar> df, dg;
    for (const auto& a : lhs[t]) df.push_back(fq.from_rational(a));
    for (const auto& a : rhs[t]) dg.push_back(fq.from_rational(a));
    CHECK(v.witness->adjoint() * matrix::diag(fq, df) * *v.witness ==
          matrix::diag(fq, dg));
  }
}

TEST_CASE("representation search") {
  auto rep = represent_by_diagonal({q(1), q(1)}, q(2));
  REQUIRE(rep.has_value());
  CHECK((*rep)[0] * (*rep)[0] + (*rep)[1] * (*rep)[1] == 2);

  // 7 is not a sum of two rational squares.
  CHECK_FALSE(represent_by_diagonal({q(1), q(1)}, q(7)).has_value());

  rep = represent_by_diagonal({q(1), q(-1)}, q(5));
  REQUIRE(rep.has_value());
  CHECK((*rep)[0] * (*rep)[0] - (*rep)[1] * (*rep)[1] == 5);

  rep = represent_by_diagonal({q(2), q(3), q(10)}, q(1, 2));
  REQUIRE(rep.has_value());
  CHECK(2 * (*rep)[0] * (*rep)[0] + 3 * (*rep)[1] * (*rep)[1] +
            10 * (*rep)[2] * (*rep)[2] ==
        q(1, 2));
}

TEST_CASE("real root isolation and signs at roots") {
  const poly f = pp("x^2 - 2");
  const auto roots = isolate_real_roots(f);
  REQUIRE(roots.size() == 2);
  CHECK(sign_at_root(pp("x"), f, roots[0]) == -1);
  CHECK(sign_at_root(pp("x"), f, roots[1]) == 1);
  CHECK(sign_at_root(pp("x^2 - 2"), f, roots[1]) == 0);
  CHECK(sign_at_root(pp("x^2 - 3"), f, roots[0]) == -1);
  CHECK(sign_at_root(pp("x^3"), f, roots[0]) == -1);

  // Rational roots come back as exact points or isolating intervals; either
  // way the shared-root sign is 0.
  const poly g = pp("x^3 - 7*x + 6");  // roots 1, 2, -3
  const auto r3 = isolate_real_roots(g);
  REQUIRE(r3.size() == 3);
  CHECK(sign_at_root(pp("x + 3"), g, r3[0]) == 0);
  CHECK(sign_at_root(pp("x - 1"), g, r3[1]) == 0);
  CHECK(sign_at_root(pp("x - 2"), g, r3[2]) == 0);
  CHECK(sign_at_root(pp("x"), g, r3[0]) == -1);
  CHECK(sign_at_root(pp("x"), g, r3[1]) == 1);

  CHECK(isolate_real_roots(pp("x^2 + 1")).empty());
  // Repeated roots are isolated once.
  CHECK(isolate_real_roots(pp("x^2 - 2*x + 1")).size() == 1);

  CHECK(sturm_count(pp("x^2 - 2"), q(0), q(2)) == 1);
  CHECK(sturm_count(pp("x^2 - 2"), q(-2), q(2)) == 2);
  CHECK(sturm_count(pp("x^2 - 4"), q(0), q(2)) == 1);  // right endpoint counts
  CHECK(sturm_count(pp("x^2 - 4"), q(2), q(3)) == 0);  // left endpoint open
}

TEST_CASE("norms from quadratic extensions") {
  CHECK(is_norm_from_quadratic(q(2), -1));
  CHECK_FALSE(is_norm_from_quadratic(q(7), -1));
  CHECK_FALSE(is_norm_from_quadratic(q(-1), -1));
  CHECK_FALSE(is_norm_from_quadratic(q(3), -1));
  CHECK(is_norm_from_quadratic(q(25, 2), -1));
  CHECK(is_norm_from_quadratic(q(6), 3));
  CHECK_FALSE(is_norm_from_quadratic(q(2), 3));
  CHECK(is_norm_from_quadratic(q(-1), 5));
  CHECK(is_norm_from_quadratic(q(7), -3));
  CHECK_THROWS_AS(is_norm_from_quadratic(q(1), 4), invalid_input_error);
  CHECK_THROWS_AS(is_norm_from_quadratic(q(1), 12), invalid_input_error);
}

TEST_CASE("sum of two squares") {
  auto r = sum_of_two_squares(q(5));
  REQUIRE(r.has_value());
  CHECK(r->first * r->first + r->second * r->second == 5);

  r = sum_of_two_squares(q(25, 2));
  REQUIRE(r.has_value());
  CHECK(r->first * r->first + r->second * r->second == q(25, 2));

  r = sum_of_two_squares(q(9));
  REQUIRE(r.has_value());
  CHECK(r->first * r->first + r->second * r->second == 9);

  CHECK_FALSE(sum_of_two_squares(q(3)).has_value());
  CHECK_FALSE(sum_of_two_squares(q(-4)).has_value());
  CHECK_FALSE(sum_of_two_squares(q(7, 3)).has_value());

  // Larger composite with mixed factor types.
  r = sum_of_two_squares(q(882));  // 2 * 3^2 * 7^2
  REQUIRE(r.has_value());
  CHECK(r->first * r->first + r->second * r->second == 882);
}

TEST_CASE("norm equation solving") {
  auto r = solve_norm_equation(q(6), 3);
  REQUIRE(r.has_value());
  CHECK(r->first * r->first - 3 * r->second * r->second == 6);

  CHECK_FALSE(solve_norm_equation(q(2), 3).has_value());

  r = solve_norm_equation(q(-1), 5);
  REQUIRE(r.has_value());
  CHECK(r->first * r->first - 5 * r->second * r->second == -1);

  r = solve_norm_equation(q(7), -3);
  REQUIRE(r.has_value());
  CHECK(r->first * r->first + 3 * r->second * r->second == 7);

  r = solve_norm_equation(q(13), -1);
  REQUIRE(r.has_value());
  CHECK(r->first * r->first + r->second * r->second == 13);

  CHECK_FALSE(solve_norm_equation(q(-7), -3).has_value());
}

TEST_CASE("palindromic compression") {
  CHECK(compressed_reciprocal(pp("x^2 + 1")) == pp("x"));
  CHECK(compressed_reciprocal(pp("x^2 - 3*x + 1")) == pp("x - 3"));
  CHECK(compressed_reciprocal(pp("x^4 + x^3 + x^2 + x + 1")) ==
        pp("x^2 + x - 1"));
  CHECK(compressed_reciprocal(pp("x^4 + 1")) == pp("x^2 - 2"));

  const field g3 = field::prime(3);
  CHECK(compressed_reciprocal(poly::parse(g3, "x^2 + x + 1")) ==
        poly::parse(g3, "x + 1"));

  CHECK_THROWS_AS(compressed_reciprocal(pp("x^2 - 1")), invalid_input_error);
  CHECK_THROWS_AS(compressed_reciprocal(pp("x^3 + 1")), invalid_input_error);
  CHECK_THROWS_AS(compressed_reciprocal(pp("x + 1")), invalid_input_error);
}

TEST_CASE("compression pairs roots with reciprocals") {
  // If y0 is a real root of the compression in (-2, 2), then x^2 - y0 x + 1
  // divides the original (complex conjugate pair on the unit circle); roots
  // outside [-2, 2] correspond to real reciprocal pairs.
  const poly p = pp("x^4 - x^3 + x^2 - x + 1");  // 10th cyclotomic
  const poly comp = compressed_reciprocal(p);
  const auto roots = isolate_real_roots(comp);
  REQUIRE(roots.size() == 2);
  for (const auto& iv : roots) {
    // Both roots lie strictly inside (-2, 2).
    CHECK(sign_at_root(pp("x + 2"), comp, iv) == 1);
    CHECK(sign_at_root(pp("x - 2"), comp, iv) == -1);
  }
}
