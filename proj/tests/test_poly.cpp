#include <doctest.h>

#include <random>
#include <vector>

#include "ramseycert/poly.hpp"

using namespace ramsey;

TEST_CASE("coefficient lists parse low-to-high") {
  const auto p = IntPolynomial::parse("2,3,1");  // z^2 + 3z + 2
  CHECK(p.degree() == 2);
  CHECK(p.coefficient(0) == 2);
  CHECK(p.coefficient(1) == 3);
  CHECK(p.coefficient(2) == 1);
  CHECK(p.leading_coefficient() == 1);
  CHECK(p.coefficient_string() == "2,3,1");
  CHECK(p.pretty() == "z^2+3*z+2");
}

TEST_CASE("expression syntax parses to the same polynomial") {
  CHECK(IntPolynomial::parse("z^2+3*z+2") == IntPolynomial::parse("2,3,1"));
  CHECK(IntPolynomial::from_expression("z^2+3*z+2") == IntPolynomial::parse("2,3,1"));
  CHECK(IntPolynomial::parse("2*z^2") == IntPolynomial::parse("0,0,2"));
  CHECK(IntPolynomial::parse("-1,0,0,0,1") == IntPolynomial::parse("z^4-1"));
  CHECK(IntPolynomial::monomial(5, 3) == IntPolynomial::parse("0,0,0,5"));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(IntPolynomial::parse(""), ParseError);
  CHECK_THROWS_AS(IntPolynomial::parse("2,,1"), ParseError);
  CHECK_THROWS_AS(IntPolynomial::parse("2,x,1"), ParseError);
  CHECK_THROWS_AS(IntPolynomial::parse("z^"), ParseError);
  CHECK_THROWS_AS(IntPolynomial::parse("z^2 + $"), ParseError);
  CHECK_THROWS_AS(IntPolynomial(std::vector<Int>{}), ParseError);
}

TEST_CASE("evaluation on frozen inputs") {
  CHECK(IntPolynomial::parse("2,3,1")(Int(3)) == 20);
  CHECK(IntPolynomial::parse("0,0,1")(Int(0)) == 0);
  CHECK(IntPolynomial::parse("0,1,1")(Int(36)) == 1332);
}

TEST_CASE("evaluation matches the naive power sum") {
  std::mt19937_64 rng(20240915);
  std::uniform_int_distribution<long> cdist(-1000000, 1000000);
  std::uniform_int_distribution<long> xdist(-1000, 1000);
  std::uniform_int_distribution<int> ddist(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const int deg = ddist(rng);
    std::vector<Int> coeffs;
    for (int i = 0; i <= deg; ++i) coeffs.emplace_back(cdist(rng));
    const IntPolynomial p = IntPolynomial(coeffs);
    const Int x = xdist(rng);
    Int expected = 0, xpow = 1;
    for (int i = 0; i <= deg; ++i) {
      expected += coeffs[static_cast<std::size_t>(i)] * xpow;
      xpow *= x;
    }
    CHECK(p(x) == expected);
    CHECK(p.eval_mod(x, 97) == mod_floor(expected, 97));
  }
}

TEST_CASE("eval_mod reduces exactly and validates the modulus") {
  const auto p = IntPolynomial::parse("2,3,1");
  CHECK(p.eval_mod(Int(3), Int(7)) == 6);  // 20 mod 7
  CHECK(p.eval_mod(Int(-1), Int(5)) == 0);
  CHECK_THROWS_AS(p.eval_mod(Int(1), Int(0)), PreconditionError);
}

TEST_CASE("EquationSpec validates its coefficients") {
  CHECK_NOTHROW(EquationSpec(1, 1, IntPolynomial::parse("0,0,1")));
  CHECK_THROWS_AS(EquationSpec(0, 1, IntPolynomial::parse("0,0,1")), PreconditionError);
  CHECK_THROWS_AS(EquationSpec(1, -2, IntPolynomial::parse("0,0,1")), PreconditionError);
}

TEST_CASE("difference_quotient on frozen inputs") {
  const EquationSpec eq1(2, 3, IntPolynomial::parse("0,1,1"));
  CHECK(difference_quotient(eq1, 6, 0) == 21);
  CHECK(difference_quotient(eq1, 6, 6) == 57);

  const EquationSpec eq2(1, 1, IntPolynomial::parse("0,0,1"));
  CHECK(difference_quotient(eq2, 2, 0) == 4);

  // p(0+1)-p(0) = 1 is not divisible by a = 2.
  const EquationSpec bad(2, 1, IntPolynomial::parse("0,0,1"));
  CHECK_THROWS_AS(difference_quotient(bad, 1, 0), PreconditionError);
  CHECK_THROWS_AS(difference_quotient(eq1, 0, 0), PreconditionError);
}

TEST_CASE("scale_reduce on frozen inputs") {
  const auto r1 = scale_reduce(1, 1, 2, IntPolynomial::parse("0,0,2"));
  CHECK(r1.a == 1);
  CHECK(r1.b == 1);
  CHECK(r1.p == IntPolynomial::parse("0,0,2"));

  // c = 1 keeps the polynomial untouched.
  const auto r2 = scale_reduce(2, 3, 1, IntPolynomial::parse("5,1,4"));
  CHECK(r2.p == IntPolynomial::parse("5,1,4"));

  const auto r3 = scale_reduce(1, 2, 3, IntPolynomial::parse("0,0,0,9"));
  CHECK(r3.a == 1);
  CHECK(r3.b == 2);
  CHECK(r3.p == IntPolynomial::parse("0,0,0,27"));

  CHECK_THROWS_WITH_AS(scale_reduce(1, 1, 2, IntPolynomial::parse("0,1,2")),
                       "scale_reduce: c = 2 does not divide the linear coefficient 1",
                       PreconditionError);
  CHECK_THROWS_WITH_AS(scale_reduce(1, 1, 2, IntPolynomial::parse("2,2,4")),
                       "scale_reduce: c^2 = 4 does not divide the constant term 2",
                       PreconditionError);
}

TEST_CASE("scale_reduce maps solutions of the reduced equation to the original") {
  // If (x,y,z) solves the reduced equation then c*(x,y,z) solves a'x+b'y = p(z)
  // where a' = c*a, b' = c*b, i.e. the lift below.
  std::mt19937_64 rng(20240916);
  std::uniform_int_distribution<long> small(1, 6);
  int exercised = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Int a = small(rng), b = small(rng), c = small(rng);
    const Int c2 = c * 2, c0 = c * c * small(rng);
    const IntPolynomial p = IntPolynomial(std::vector<Int>{c0, c * small(rng), c2});
    const EquationSpec reduced = scale_reduce(a, b, c, p);
    // Brute force a small solution of the reduced equation, if any.
    bool found = false;
    for (long z = 1; z <= 12 && !found; ++z) {
      for (long x = 1; x <= 40 && !found; ++x) {
        const Int rest = reduced.p(Int(z)) - reduced.a * x;
        if (rest < reduced.b) continue;
        if (!divisible(rest, reduced.b)) continue;
        const Int y = rest / reduced.b;
        const Triple lifted = lift_scaled_solution(c, {Int(x), y, Int(z)});
        REQUIRE(c * a * lifted.x + c * b * lifted.y == p(lifted.z));
        found = true;
      }
    }
    if (found) ++exercised;
  }
  CHECK(exercised >= 50);
}

TEST_CASE("lift_scaled_solution on frozen inputs") {
  const Triple t1 = lift_scaled_solution(2, {1, 1, 1});
  CHECK(t1.x == 2);
  CHECK(t1.y == 2);
  CHECK(t1.z == 2);

  // (25,1,1) solves x + 2y = 27z^3, the reduction of 3x + 6y = 9z^3 by c = 3.
  const Triple t2 = lift_scaled_solution(3, {25, 1, 1});
  CHECK(t2.x == 75);
  CHECK(t2.y == 3);
  CHECK(t2.z == 3);
  CHECK(3 * t2.x + 6 * t2.y == 9 * t2.z * t2.z * t2.z);

  CHECK_THROWS_AS(lift_scaled_solution(0, {1, 1, 1}), PreconditionError);
}

TEST_CASE("polynomial pretty printing") {
  CHECK(IntPolynomial::parse("0,0,2").pretty() == "2*z^2");
  CHECK(IntPolynomial::parse("-1,0,0,0,1").pretty() == "z^4-1");
  CHECK(IntPolynomial::parse("0,1").pretty() == "z");
  CHECK(IntPolynomial(std::vector<Int>{Int(0)}).pretty() == "0");
}
