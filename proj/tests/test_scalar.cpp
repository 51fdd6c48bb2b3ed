// formcanon tests: fields, scalars, and integer number theory.
// SPDX-License-Identifier: MIT
#include <doctest.h>

#include "formcanon/scalar.hpp"

using namespace formcanon;

TEST_CASE("field construction and tags") {
  CHECK(field::parse("q").kind() == field_kind::rationals);
  CHECK(field::parse("qi").kind() == field_kind::gaussian_rationals);
  CHECK(field::parse("gf:7").modulus() == 7);
  CHECK(field::parse("gf:5,2").kind() == field_kind::prime_square_field);
  CHECK(field::prime(7).tag() == "gf:7");
  CHECK(field::prime_square(3).tag() == "gf:3,2");
  CHECK(field::rationals().identity_involution());
  CHECK(field::prime(7).identity_involution());
  CHECK(!field::gaussian_rationals().identity_involution());
  CHECK(!field::prime_square(3).identity_involution());
  CHECK(field::prime(7).order() == 7);
  CHECK(field::prime_square(3).order() == 9);

  CHECK_THROWS_AS(field::prime(2), invalid_input_error);       // characteristic 2
  CHECK_THROWS_AS(field::prime_square(2), invalid_input_error);
  CHECK_THROWS_AS(field::prime(9), invalid_input_error);       // not prime
  CHECK_THROWS_AS(field::parse("gf:abc"), invalid_input_error);
  CHECK_THROWS_AS(field::parse("r"), unsupported_error);
  CHECK_THROWS_AS(field::parse("gf:5,3"), invalid_input_error);
}

TEST_CASE("quadratic extension modulus uses the least nonresidue") {
  CHECK(least_nonresidue(3) == 2);
  CHECK(least_nonresidue(5) == 2);
  CHECK(least_nonresidue(7) == 3);  // 2 = 3^2 mod 7 is a square
  CHECK(field::prime_square(7).nonresidue() == 3);
}

TEST_CASE("rational arithmetic") {
  field q = field::rationals();
  scalar a = scalar::parse(q, "1/2");
  scalar b = scalar::parse(q, "1/3");
  CHECK((a + b).to_string() == "5/6");
  CHECK((a * b).to_string() == "1/6");
  CHECK((a - b).to_string() == "1/6");
  CHECK((a / b).to_string() == "3/2");
  CHECK((-a).to_string() == "-1/2");
  CHECK(a.inverse().to_string() == "2");
  CHECK(a.conj() == a);
  CHECK(scalar::parse(q, "-6/4").to_string() == "-3/2");  // canonicalized
  CHECK_THROWS_AS(scalar::parse(q, "1/0"), invalid_input_error);
  CHECK_THROWS_AS(scalar::parse(q, "abc"), invalid_input_error);
  CHECK_THROWS_AS(q.zero().inverse(), invalid_input_error);
  CHECK(scalar::compare(a, b) == 1);
  CHECK(scalar::compare(b, a) == -1);
  CHECK(scalar::compare(a, a) == 0);
  CHECK(scalar::parse(q, "12").height() == 12);
  CHECK(scalar::parse(q, "5/7").height() == 7);
}

TEST_CASE("gaussian rational arithmetic") {
  field qi = field::gaussian_rationals();
  scalar z = scalar::parse(qi, "[1,2]");   // 1 + 2i
  scalar w = scalar::parse(qi, "[3,-1]");  // 3 - i
  CHECK((z * w).to_string() == "[5,5]");   // (1+2i)(3-i) = 5 + 5i
  CHECK(z.conj().to_string() == "[1,-2]");
  scalar one_plus_i = scalar::parse(qi, "[1,1]");
  CHECK(one_plus_i.inverse().to_string() == "[1/2,-1/2]");
  CHECK(!z.is_conj_fixed());
  CHECK(scalar::parse(qi, "[4/3,0]").is_conj_fixed());
  CHECK(qi.skew_unit().has_value());
  scalar i = *qi.skew_unit();
  CHECK((i * i).to_string() == "[-1,0]");
  CHECK(i.conj() == -i);
  // Plain rational literals are accepted and mean a real value.
  CHECK(scalar::parse(qi, "5").to_string() == "[5,0]");
}

TEST_CASE("prime field arithmetic") {
  field f7 = field::prime(7);
  scalar three = f7.from_int(3);
  scalar five = f7.from_int(5);
  CHECK((three * five).to_string() == "1");
  CHECK(three.inverse() == five);
  CHECK((f7.from_int(-1)).to_string() == "6");
  CHECK(three.conj() == three);
  CHECK(f7.all_elements().size() == 7);
  CHECK(scalar::parse(f7, "100").to_string() == "2");
  CHECK(scalar::parse(f7, "-1").to_string() == "6");
}

TEST_CASE("quadratic extension arithmetic and Frobenius") {
  field f9 = field::prime_square(3);  // GF(9) = GF(3)[t], t^2 = 2
  scalar t = *f9.skew_unit();
  CHECK((t * t).to_string() == "[2,0]");  // GF(p^2) always prints the pair
  scalar u = scalar::parse(f9, "[1,1]");  // 1 + t
  CHECK((u * u).to_string() == "[0,2]");  // (1+t)^2 = 1 + 2t + 2 = 2t
  CHECK(u.conj().to_string() == "[1,2]"); // conj(1+t) = 1 - t = 1 + 2t
  // The involution is the Frobenius x -> x^3.
  CHECK(u.pow(3) == u.conj());
  scalar v = scalar::parse(f9, "[2,1]");
  CHECK(v.pow(3) == v.conj());
  CHECK((u * u.conj()).residue_b() == 0);  // norms land in GF(3)
  CHECK(u.inverse() * u == f9.one());
  CHECK(f9.all_elements().size() == 9);
}

TEST_CASE("squares") {
  field q = field::rationals();
  CHECK(scalar::parse(q, "4/9").is_square());
  CHECK(!scalar::parse(q, "2").is_square());
  CHECK(!scalar::parse(q, "-1").is_square());
  CHECK(q.zero().is_square());

  field qi = field::gaussian_rationals();
  CHECK(scalar::parse(qi, "[-1,0]").is_square());  // i^2
  CHECK(scalar::parse(qi, "[0,2]").is_square());   // (1+i)^2
  CHECK(scalar::parse(qi, "[3,4]").is_square());   // (2+i)^2
  CHECK(scalar::parse(qi, "[-4,0]").is_square());  // (2i)^2
  CHECK(!scalar::parse(qi, "[1,1]").is_square());  // norm 2 is not a square
  CHECK(!scalar::parse(qi, "[2,0]").is_square());  // sqrt(2) not in Q(i)

  field f7 = field::prime(7);
  CHECK(f7.from_int(2).is_square());   // 3^2 = 2
  CHECK(!f7.from_int(3).is_square());
  CHECK(f7.from_int(0).is_square());

  field f9 = field::prime_square(3);
  scalar t = *f9.skew_unit();
  CHECK(t.is_square());                              // t = (1+2t)^2 ... t^4 = 1
  CHECK(!scalar::parse(f9, "[1,1]").is_square());    // (1+t)^4 = 2 != 1
}

TEST_CASE("square classes over q and gf:P") {
  field q = field::rationals();
  CHECK(scalar::parse(q, "8/9").square_class_representative().to_string() == "2");
  CHECK(scalar::parse(q, "-12").square_class_representative().to_string() == "-3");
  CHECK(scalar::parse(q, "1/2").square_class_representative().to_string() == "2");
  CHECK(q.zero().square_class_representative() == q.zero());

  field f7 = field::prime(7);
  CHECK(f7.from_int(2).square_class_representative() == f7.one());
  CHECK(f7.from_int(5).square_class_representative() == f7.from_int(3));
  CHECK_THROWS_AS(field::gaussian_rationals().one().square_class_representative(),
                  unsupported_error);
}

TEST_CASE("norm classes for the nonidentity involutions") {
  field qi = field::gaussian_rationals();
  auto rep = [&](const char* s) {
    return scalar::parse(qi, s).norm_class_representative().to_string();
  };
  CHECK(rep("[-2,0]") == "[-1,0]");  // 2 = N(1+i)
  CHECK(rep("[5,0]") == "[1,0]");    // 5 = N(2+i)
  CHECK(rep("[21,0]") == "[21,0]");  // 3 and 7 are both = 3 (mod 4)
  CHECK(rep("[-45,0]") == "[-1,0]"); // squarefree part -5; 5 = N(2+i) drops out
  CHECK(rep("[3,0]") == "[3,0]");
  CHECK_THROWS_AS(scalar::parse(qi, "[1,1]").norm_class_representative(), invalid_input_error);

  field f9 = field::prime_square(3);
  CHECK(f9.from_int(2).norm_class_representative() == f9.one());
}

TEST_CASE("integer factorization") {
  auto fs = factor_integer(mpz_class(360));
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].first == 2);
  CHECK(fs[0].second == 3);
  CHECK(fs[1].first == 3);
  CHECK(fs[1].second == 2);
  CHECK(fs[2].first == 5);
  CHECK(fs[2].second == 1);
  CHECK(squarefree_part(mpz_class(360)) == 10);
  CHECK(squarefree_part(mpz_class(-360)) == -10);
  CHECK(squarefree_part(mpz_class(49)) == 1);
  CHECK(is_probable_prime(mpz_class("1000000007")));
  CHECK(!is_probable_prime(mpz_class("1000000008")));
  // A semiprime large enough to need rho.
  mpz_class semi = mpz_class("1000003") * mpz_class("1000033");
  auto sf = factor_integer(semi);
  REQUIRE(sf.size() == 2);
  CHECK(sf[0].first == 1000003);
  CHECK(sf[1].first == 1000033);
}

TEST_CASE("deterministic randomness") {
  field f5 = field::prime(5);
  rng r1(42), r2(42);
  for (int i = 0; i < 20; ++i) CHECK(f5.random_element(r1) == f5.random_element(r2));
}
