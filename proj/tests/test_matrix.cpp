// formcanon tests: exact dense matrices and Gaussian elimination.
// SPDX-License-Identifier: MIT
#include <doctest.h>

#include "formcanon/matrix.hpp"

using namespace formcanon;

namespace {

poly pp(const field& f, const char* text) { return poly::parse(f, text); }

matrix mi(const field& f, const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<scalar>> s;
  for (const auto& r : rows) {
    std::vector<scalar> sr;
    for (int v : r) sr.push_back(f.from_int(v));
    s.push_back(std::move(sr));
  }
  return matrix::from_rows(f, s);
}

}  // namespace

TEST_CASE("basic arithmetic and shape") {
  field q = field::rationals();
  matrix a = mi(q, {{1, 2}, {3, 4}});
  matrix b = mi(q, {{0, 1}, {1, 0}});
  CHECK(a * b == mi(q, {{2, 1}, {4, 3}}));
  CHECK(a + b == mi(q, {{1, 3}, {4, 4}}));
  CHECK(a - a == matrix(q, 2, 2));
  CHECK((a * q.from_int(2)) == mi(q, {{2, 4}, {6, 8}}));
  CHECK(a.transpose() == mi(q, {{1, 3}, {2, 4}}));
  CHECK(matrix::identity(q, 2).is_identity());
  CHECK(matrix(q, 2, 3).is_zero());
  CHECK(matrix::diag(q, {q.one(), q.from_int(2)}) == mi(q, {{1, 0}, {0, 2}}));

  matrix h = a.hcat(b);
  CHECK(h.cols() == 4);
  CHECK(h.submatrix(0, 2, 2, 2) == b);
  matrix v = a.vcat(b);
  CHECK(v.rows() == 4);
  CHECK(v.submatrix(2, 0, 2, 2) == b);
  matrix blk = matrix::block_diag(q, {a, b});
  CHECK(blk.rows() == 4);
  CHECK(blk.submatrix(0, 0, 2, 2) == a);
  CHECK(blk.submatrix(2, 2, 2, 2) == b);
  CHECK(blk.submatrix(0, 2, 2, 2).is_zero());
}

TEST_CASE("adjoint conjugates entries") {
  field qi = field::gaussian_rationals();
  matrix m(qi, 1, 2);
  m(0, 0) = scalar::parse(qi, "[1,2]");
  m(0, 1) = scalar::parse(qi, "[0,-1]");
  matrix s = m.adjoint();
  CHECK(s.rows() == 2);
  CHECK(s(0, 0) == scalar::parse(qi, "[1,-2]"));
  CHECK(s(1, 0) == scalar::parse(qi, "[0,1]"));

  field q = field::rationals();
  matrix a = mi(q, {{1, 2}, {3, 4}});
  CHECK(a.adjoint() == a.transpose());
}

TEST_CASE("rank, determinant, inverse") {
  field q = field::rationals();
  matrix a = mi(q, {{2, 1, 0}, {1, 1, 1}, {0, 0, 3}});
  CHECK(rank(a) == 3);
  CHECK(determinant(a) == q.from_int(3));
  matrix ai = inverse(a);
  CHECK(a * ai == matrix::identity(q, 3));
  CHECK(ai * a == matrix::identity(q, 3));

  matrix s = mi(q, {{1, 2}, {2, 4}});
  CHECK(rank(s) == 1);
  CHECK(determinant(s).is_zero());
  matrix dummy;
  CHECK(!try_inverse(s, &dummy));
  CHECK_THROWS_AS(inverse(s), invalid_input_error);

  field f7 = field::prime(7);
  matrix m = mi(f7, {{3, 1}, {5, 2}});
  CHECK(determinant(m) == f7.one());  // 6 - 5 = 1
  CHECK(m * inverse(m) == matrix::identity(f7, 2));
}

TEST_CASE("linear solving and subspaces") {
  field q = field::rationals();
  matrix a = mi(q, {{1, 2}, {3, 4}});
  matrix b = mi(q, {{5}, {11}});
  auto x = solve_linear(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  // Inconsistent system.
  matrix s = mi(q, {{1, 2}, {2, 4}});
  CHECK(!solve_linear(s, mi(q, {{1}, {0}})).has_value());
  // Consistent underdetermined system.
  auto y = solve_linear(s, mi(q, {{1}, {2}}));
  REQUIRE(y.has_value());
  CHECK(s * *y == mi(q, {{1}, {2}}));

  matrix ns = nullspace(s);
  CHECK(ns.cols() == 1);
  CHECK((s * ns).is_zero());
  CHECK(nullspace(a).cols() == 0);

  matrix cs = column_space(s);
  CHECK(cs.cols() == 1);
  CHECK(rank(cs.hcat(s)) == 1);

  // preimage of the column space of [1,0]^T under diag(1,0) includes e2.
  matrix d = mi(q, {{1, 0}, {0, 0}});
  matrix t = mi(q, {{1}, {0}});
  matrix pre = preimage(d, t);
  CHECK(pre.cols() == 2);  // everything maps into span(e1)

  CHECK(is_direct_sum(mi(q, {{1}, {0}}), mi(q, {{1}, {1}})));
  CHECK(!is_direct_sum(mi(q, {{1}, {0}}), mi(q, {{2}, {0}})));
}

TEST_CASE("structured matrices have the documented layout") {
  field q = field::rationals();
  // chi = x^3 + 2x^2 + 3x + 4.
  matrix c = companion_matrix(pp(q, "x^3 + 2*x^2 + 3*x + 4"));
  CHECK(c == mi(q, {{0, 0, -4}, {1, 0, -3}, {0, 1, -2}}));

  matrix j = jordan_block(q, 3, q.from_int(5));
  CHECK(j == mi(q, {{5, 1, 0}, {0, 5, 1}, {0, 0, 5}}));

  matrix p = reversal_permutation(q, 3);
  CHECK(p == mi(q, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));

  matrix sk = skew_sum(mi(q, {{1}}), mi(q, {{2}}));
  CHECK(sk == mi(q, {{0, 2}, {1, 0}}));

  // The reversal conjugates the nilpotent companion into the Jordan block.
  matrix cn = companion_matrix(pp(q, "x^3"));
  matrix jn = jordan_block(q, 3, q.zero());
  CHECK(p * cn * p == jn);
}

TEST_CASE("polynomial evaluation and minimal polynomials") {
  field q = field::rationals();
  poly chi = pp(q, "x^3 + 2*x^2 + 3*x + 4");
  matrix c = companion_matrix(chi);
  CHECK(poly_eval_matrix(chi, c).is_zero());  // Cayley-Hamilton
  CHECK(min_poly(c) == chi);                  // companions are nonderogatory
  CHECK(min_poly(matrix::identity(q, 4)) == pp(q, "x - 1"));
  matrix d = matrix::diag(q, {q.one(), q.one(), q.from_int(2)});
  CHECK(min_poly(d) == pp(q, "x^2 - 3*x + 2"));
  CHECK(min_poly(jordan_block(q, 3, q.zero())) == pp(q, "x^3"));

  field f3 = field::prime(3);
  matrix cf = companion_matrix(pp(f3, "x^2 + 1"));
  CHECK(min_poly(cf) == pp(f3, "x^2 + 1"));
  CHECK(poly_eval_matrix(pp(f3, "x^2 + 1"), cf).is_zero());
}

TEST_CASE("commutants") {
  field q = field::rationals();
  matrix a = companion_matrix(pp(q, "x^2 + 1"));
  auto basis = commutant_basis(a, a);
  CHECK(basis.size() == 2);  // polynomials in a
  for (const auto& g : basis) CHECK(a * g == g * a);

  // Intertwiners between companions of coprime polynomials are zero.
  matrix b = companion_matrix(pp(q, "x^2 - 2"));
  CHECK(commutant_basis(a, b).empty());

  auto inv = find_invertible_combination(basis, default_seed);
  REQUIRE(inv.has_value());
  CHECK(rank(*inv) == 2);
  CHECK(a * *inv == *inv * a);

  // A basis spanning only singular matrices yields nothing.
  matrix e11(q, 2, 2);
  e11(0, 0) = q.one();
  CHECK(!find_invertible_combination({e11}, default_seed).has_value());
}

TEST_CASE("random matrices are reproducible") {
  field f5 = field::prime(5);
  rng r1(11), r2(11);
  CHECK(random_matrix(f5, 3, 4, r1) == random_matrix(f5, 3, 4, r2));
  matrix g = random_invertible(f5, 4, r1);
  CHECK(rank(g) == 4);

  field q = field::rationals();
  rng r3(11);
  matrix h = random_invertible(q, 3, r3);
  CHECK(determinant(h) != q.zero());
}
