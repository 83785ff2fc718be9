#include <doctest.h>

#include <random>
#include <set>

#include "ramseycert/certificate.hpp"
#include "ramseycert/construct.hpp"

using namespace ramsey;

namespace {

void check_cert(const ConstructionResult& r, long d, long u, long t, long v) {
  CHECK(r.certificate.d == d);
  CHECK(r.certificate.u == u);
  CHECK(r.certificate.t == t);
  CHECK(r.certificate.v == v);
  CHECK(verify_certificate(r.equation, r.certificate).overall);
}

}  // namespace

TEST_CASE("general recipe on frozen inputs") {
  const auto r1 = construct_general(2, 3, IntPolynomial::parse("0,1,1"));
  CHECK(r1.equation.a == 2);
  CHECK(r1.equation.b == 3);
  CHECK_FALSE(r1.swapped);
  CHECK(r1.method == "general");
  check_cert(r1, 6, 3, 0, 0);

  // a odd, b even: the recipe runs on the swapped equation 2x + y = z^2 + z.
  const auto r2 = construct_general(1, 2, IntPolynomial::parse("0,1,1"));
  CHECK(r2.swapped);
  CHECK(r2.equation.a == 2);
  CHECK(r2.equation.b == 1);
  check_cert(r2, 2, 1, 0, 0);

  // Both odd: no swap, and the prime 2 still contributes on the a side.
  const auto r3 = construct_general(1, 1, IntPolynomial::parse("0,1,1"));
  CHECK_FALSE(r3.swapped);
  check_cert(r3, 2, 2, 0, 0);
}

TEST_CASE("general recipe constant-term divisibility") {
  // d = 6 and u = 3 both divide the constant term 6.
  const auto r = construct_general(2, 3, IntPolynomial::parse("6,1,1"));
  check_cert(r, 6, 3, 0, 0);

  CHECK_THROWS_WITH_AS(construct_general(2, 3, IntPolynomial::parse("1,1,1")),
                       "construct_general: d = 6 does not divide the constant term 1",
                       PreconditionError);
}

TEST_CASE("general recipe rejects bad shapes") {
  const auto square = IntPolynomial::parse("0,0,1");
  CHECK_THROWS_WITH_AS(construct_general(2, 3, square),
                       "construct_general: the linear coefficient a_1 must be nonzero",
                       PreconditionError);
  CHECK_THROWS_AS(construct_general(2, 4, IntPolynomial::parse("0,1,1")),
                  PreconditionError);
  CHECK_THROWS_AS(construct_general(2, 3, IntPolynomial::parse("0,1")),
                  PreconditionError);
  CHECK_THROWS_AS(construct_general(2, 3, IntPolynomial::parse("0,1,-1")),
                  PreconditionError);
  CHECK_THROWS_AS(construct_general(0, 3, IntPolynomial::parse("0,1,1")),
                  PreconditionError);
}

TEST_CASE("general recipe threads its factorization budget") {
  // 1000003 is prime; with the parity swap it lands on the factoring side.
  CHECK_THROWS_AS(
      construct_general(1000003, 2, IntPolynomial::parse("0,1,1"), 10), BudgetError);
  const auto r = construct_general(1000003, 2, IntPolynomial::parse("0,1,1"));
  CHECK(r.swapped);
  CHECK(verify_certificate(r.equation, r.certificate).overall);
}

TEST_CASE("power recipe on frozen inputs") {
  const auto r1 = construct_power(2, 2);
  CHECK(r1.equation.a == 2);
  CHECK(r1.equation.b == 1);
  CHECK(r1.equation.p == IntPolynomial::parse("0,0,1"));
  CHECK(r1.method == "power");
  check_cert(r1, 2, 2, 0, 0);

  check_cert(construct_power(1, 3), 1, 1, 0, 0);
  check_cert(construct_power(6, 2), 6, 2, 4, 0);
}

TEST_CASE("power recipe accepts a larger alpha'") {
  check_cert(construct_power(2, 2, Int(2)), 4, 8, 0, 0);

  CHECK_THROWS_WITH_AS(construct_power(1, 3, Int(1)),
                       "construct_power: alpha' override must be 0 when a is odd",
                       PreconditionError);
  CHECK_THROWS_WITH_AS(construct_power(2, 2, Int(0)),
                       "construct_power: alpha' override below the minimum 1",
                       PreconditionError);
}

TEST_CASE("power recipe rejects bad parameters") {
  CHECK_THROWS_AS(construct_power(0, 2), PreconditionError);
  CHECK_THROWS_AS(construct_power(2, 1), PreconditionError);
}

TEST_CASE("square recipe on frozen inputs") {
  const auto r1 = construct_cz2(1, 4, 1);
  CHECK(r1.method == "cz2");
  CHECK_FALSE(r1.swapped);
  check_cert(r1, 2, 4, 0, 0);

  // a even: recipe runs on the swapped equation x + 2y = z^2.
  const auto r2 = construct_cz2(2, 1, 1);
  CHECK(r2.swapped);
  CHECK(r2.equation.a == 1);
  CHECK(r2.equation.b == 2);
  check_cert(r2, 2, 4, 0, 0);

  // A case where the t-scan has to walk to the end of its range.
  const auto r3 = construct_cz2(3, 5, 7);
  CHECK_FALSE(r3.swapped);
  check_cert(r3, 15, 5, 14, 4);
}

TEST_CASE("square recipe never needs a hypothesis check") {
  // The congruence for t is linear when q = 2, so for every admissible
  // (a, b, c) the scan must succeed.
  std::mt19937_64 rng(20240918);
  std::uniform_int_distribution<long> dist(1, 10);
  int built = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Int a = dist(rng), b = dist(rng), c = (dist(rng) % 6) + 1;
    if (gcd(a, b) != 1) continue;
    if (!is_power_of_two(gcd(a, c)) || !is_power_of_two(gcd(b, c))) continue;
    const auto r = construct_cz2(a, b, c);
    CHECK(verify_certificate(r.equation, r.certificate).overall);
    ++built;
  }
  CHECK(built > 100);
}

TEST_CASE("square recipe rejects bad parameters and respects the scan budget") {
  CHECK_THROWS_AS(construct_cz2(2, 4, 1), PreconditionError);   // not coprime
  CHECK_THROWS_WITH_AS(construct_cz2(3, 5, 3),
                       "construct_cz2: gcd(a, c) = 3 must be a power of two",
                       PreconditionError);
  CHECK_THROWS_AS(construct_cz2(5, 3, 3), PreconditionError);   // gcd(b,c) = 3
  // t = 14 is the 15th candidate probed, so a budget of 14 is one too few.
  CHECK_THROWS_AS(construct_cz2(3, 5, 7, 14), BudgetError);
  CHECK_NOTHROW(construct_cz2(3, 5, 7, 15));
}

TEST_CASE("prime-power recipe on frozen inputs") {
  const auto r1 = construct_czp(1, 4, 1, 2);
  CHECK(r1.method == "czp");
  check_cert(r1, 2, 4, 0, 0);

  check_cert(construct_czp(1, 1, 1, 2), 1, 1, 0, 0);
  check_cert(construct_czp(3, 2, 5, 2), 6, 4, 4, 0);
  check_cert(construct_czp(1, 4, 2, 2), 2, 8, 0, 0);
}

TEST_CASE("prime-power recipe with odd exponents") {
  const auto r1 = construct_czp(1, 3, 1, 3);
  CHECK(r1.equation.p == IntPolynomial::parse("0,0,0,1"));
  check_cert(r1, 3, 27, 0, 0);

  check_cert(construct_czp(2, 27, 1, 3), 6, 27, 3, 0);
  check_cert(construct_czp(5, 9, 1, 3), 15, 27, 3, 0);
  check_cert(construct_czp(1, 10, 1, 3), 10, 10, 1, 1);
}

TEST_CASE("prime-power recipe reports an unsatisfiable hypothesis") {
  // t^2 = 3 (mod 5) has no solution, so x + 5y = 2z^3 admits no t.
  CHECK_THROWS_AS(construct_czp(1, 5, 2, 3), HypothesisError);
  // t^2 = 3 (mod 4) has no solution either.
  CHECK_THROWS_AS(construct_czp(4, 3, 5, 3), HypothesisError);
}

TEST_CASE("prime-power recipe rejects bad parameters") {
  CHECK_THROWS_WITH_AS(construct_czp(1, 1, 1, 4), "construct_czp: q must be prime",
                       PreconditionError);
  CHECK_THROWS_AS(construct_czp(1, 1, 1, 1), PreconditionError);
  CHECK_THROWS_AS(construct_czp(2, 4, 1, 2), PreconditionError);
}

TEST_CASE("scaled square recipe on frozen inputs") {
  const auto s1 = construct_scaled_cz2(2, 2, 2);
  REQUIRE(s1.chain.size() == 1);
  CHECK(s1.chain[0].factor == 2);
  CHECK(s1.chain[0].original.a == 2);
  CHECK(s1.chain[0].original.b == 2);
  CHECK(s1.chain[0].reduced.a == 1);
  CHECK(s1.chain[0].reduced.b == 1);
  CHECK(s1.chain[0].reduced.p == IntPolynomial::parse("0,0,2"));
  CHECK(s1.result.method == "scaled-cz2");
  CHECK_FALSE(s1.result.swapped);
  check_cert(s1.result, 1, 2, 0, 0);

  // gcd 1 still produces a (trivial) one-step chain, factor 1.
  const auto s2 = construct_scaled_cz2(1, 1, 1);
  REQUIRE(s2.chain.size() == 1);
  CHECK(s2.chain[0].factor == 1);
  check_cert(s2.result, 1, 1, 0, 0);

  // 4x + 6y = z^2 reduces to 2x + 3y = z^2, which swaps to 3x + 2y = z^2.
  const auto s3 = construct_scaled_cz2(4, 6, 1);
  REQUIRE(s3.chain.size() == 1);
  CHECK(s3.chain[0].factor == 2);
  CHECK(s3.chain[0].reduced.a == 2);
  CHECK(s3.chain[0].reduced.b == 3);
  CHECK(s3.result.swapped);
  CHECK(s3.result.equation.a == 3);
  CHECK(s3.result.equation.b == 2);
  check_cert(s3.result, 6, 4, 2, 0);
}

TEST_CASE("scaled square recipe rejects non-power-of-two tangles with c") {
  CHECK_THROWS_WITH_AS(construct_scaled_cz2(6, 10, 3),
                       "construct_scaled_cz2: gcd(a/g, c) = 3 must be a power of two",
                       PreconditionError);
  CHECK_NOTHROW(construct_scaled_cz2(3, 6, 3));  // g = 3 absorbs the shared 3
  CHECK_THROWS_AS(construct_scaled_cz2(0, 2, 1), PreconditionError);
}

TEST_CASE("lift_through_chain multiplies a solution back up") {
  // (11, 1, 5) solves 2x + 3y = z^2; through a factor-2 step it becomes a
  // solution of 4x + 6y = z^2's scaled form.
  const auto scaled = construct_scaled_cz2(4, 6, 1);
  const Triple lifted = lift_through_chain(scaled.chain, {11, 1, 5});
  CHECK(lifted.x == 22);
  CHECK(lifted.y == 2);
  CHECK(lifted.z == 10);
  CHECK(4 * lifted.x + 6 * lifted.y == lifted.z * lifted.z);

  const Triple same = lift_through_chain({}, {3, 4, 5});
  CHECK(same.x == 3);
  CHECK(same.y == 4);
  CHECK(same.z == 5);
}

TEST_CASE("construct_solution_in_class on frozen inputs") {
  const EquationSpec sq(1, 1, IntPolynomial::parse("0,0,1"));
  const Triple t1 = construct_solution_in_class(sq, 2, 0, 10);
  CHECK(t1.x == 50);
  CHECK(t1.y == 50);
  CHECK(t1.z == 10);

  const EquationSpec eq2(2, 3, IntPolynomial::parse("0,1,1"));
  const Triple t2 = construct_solution_in_class(eq2, 6, 0, 1);
  CHECK(t2.x == 324);
  CHECK(t2.y == 228);
  CHECK(t2.z == 36);

  const Triple t3 = construct_solution_in_class(sq, 1, 0, 1);
  CHECK(t3.x == 8);
  CHECK(t3.y == 8);
  CHECK(t3.z == 4);
}

TEST_CASE("construct_solution_in_class validates the class") {
  const EquationSpec sq(1, 1, IntPolynomial::parse("0,0,1"));
  CHECK_THROWS_WITH_AS(construct_solution_in_class(sq, 2, 1, 1),
                       "construct_solution_in_class: (a+b)t = p(t) (mod d) must hold",
                       PreconditionError);
  CHECK_THROWS_AS(construct_solution_in_class(sq, 2, 0, 0), PreconditionError);
  CHECK_THROWS_AS(construct_solution_in_class(sq, 0, 0, 1), PreconditionError);
  CHECK_THROWS_AS(
      construct_solution_in_class(EquationSpec(2, 4, IntPolynomial::parse("0,0,1")), 1,
                                  0, 1),
      PreconditionError);
}

TEST_CASE("construct_solution_in_class satisfies equation, class and bound") {
  std::mt19937_64 rng(20240919);
  std::uniform_int_distribution<long> cdist(1, 10);
  std::uniform_int_distribution<long> ddist(1, 8);
  std::uniform_int_distribution<long> kdist(1, 10000);
  std::uniform_int_distribution<long> coeff(0, 5);
  int built = 0;
  for (int trial = 0; trial < 2000 && built < 200; ++trial) {
    const Int a = cdist(rng), b = cdist(rng);
    if (gcd(a, b) != 1) continue;
    const IntPolynomial p = IntPolynomial(std::vector<Int>
        {Int(coeff(rng)), Int(coeff(rng)), Int(1 + coeff(rng))});
    const Int d = ddist(rng);
    // Find an admissible t for this d, if any.
    std::optional<Int> t;
    for (long cand = 0; cand < d; ++cand) {
      if (mod_floor(p(Int(cand)) - (a + b) * cand, d) == 0) {
        t = cand;
        break;
      }
    }
    if (!t) continue;
    const Int K = kdist(rng);
    const EquationSpec eq(a, b, p);
    const Triple sol = construct_solution_in_class(eq, d, *t, K);
    REQUIRE(a * sol.x + b * sol.y == p(sol.z));
    REQUIRE(sol.x >= K);
    REQUIRE(sol.y >= K);
    REQUIRE(sol.z >= K);
    REQUIRE(mod_floor(sol.x, d) == *t);
    REQUIRE(mod_floor(sol.y, d) == *t);
    REQUIRE(mod_floor(sol.z, d) == *t);
    ++built;
  }
  CHECK(built == 200);
}

TEST_CASE("find_value_in_gap on frozen inputs") {
  const auto square = IntPolynomial::parse("0,0,1");
  CHECK(find_value_in_gap(square, 1, 0, 3, 10, 100) == 10);
  CHECK(find_value_in_gap(square, 2, 1, 1, 1, 50) == 9);
  CHECK(find_value_in_gap(IntPolynomial::parse("0,1"), 1, 0, 1, 100, 1) == 1);
}

TEST_CASE("find_value_in_gap signals when x is below the threshold") {
  // The first square in the class is 16 > (1 + 1/100) * 10.
  CHECK_THROWS_AS(find_value_in_gap(IntPolynomial::parse("0,0,1"), 1, 0, 1, 100, 10),
                  ThresholdError);
  CHECK_THROWS_AS(find_value_in_gap(IntPolynomial::parse("0,0,1"), 1, 0, 0, 1, 100),
                  PreconditionError);
  CHECK_THROWS_AS(find_value_in_gap(IntPolynomial::parse("0,0,1"), 1, 0, 1, 1, 0),
                  PreconditionError);
}

TEST_CASE("find_value_in_gap output is minimal in its class") {
  std::mt19937_64 rng(20240920);
  std::uniform_int_distribution<long> ddist(1, 6);
  std::uniform_int_distribution<long> xdist(1, 5000);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPolynomial p = IntPolynomial(std::vector<Int>{0, 0, Int(ddist(rng))});
    const Int d = ddist(rng), t = ddist(rng) % d;
    const Int x = xdist(rng);
    Int z;
    try {
      z = find_value_in_gap(p, d, t, 1, 1, x);  // delta = 1 is forgiving
    } catch (const ThresholdError&) {
      continue;
    }
    REQUIRE(z > 0);
    REQUIRE(mod_floor(z, d) == mod_floor(t, d));
    REQUIRE(p(z) >= x);
    if (z > d) REQUIRE(p(z - d) < x);
  }
}

TEST_CASE("resclass_partner on frozen inputs") {
  CHECK(resclass_partner(1, 3, 1, 1, 2, 0, 0) == 2);
  CHECK(resclass_partner(1, 3, 1, 1, 2, 0, 1) == 1);
  // u = 2 variant: 0 is its own partner.
  CHECK(resclass_partner(2, 3, 1, 1, 0, 0, 0) == 0);
}

TEST_CASE("resclass_partner enforces its preconditions") {
  // gcd(a2, m') = 3: the defining congruence would not pin gamma2.
  CHECK_THROWS_WITH_AS(resclass_partner(2, 3, 1, 3, 0, 0, 0),
                       "resclass_partner: a1 and a2 must be coprime to m'",
                       PreconditionError);
  CHECK_THROWS_AS(resclass_partner(2, 4, 1, 1, 0, 0, 0), PreconditionError);
  CHECK_THROWS_AS(resclass_partner(2, 3, 1, 1, 1, 0, 0), PreconditionError);
  CHECK_THROWS_AS(resclass_partner(2, 3, 1, 1, 0, 0, 1), PreconditionError);
  CHECK_THROWS_AS(resclass_partner(2, 3, 1, 1, 0, 0, 6), PreconditionError);
}

TEST_CASE("resclass_partner is a bijection on the class and reverses roles") {
  std::mt19937_64 rng(20240921);
  std::uniform_int_distribution<long> dist(1, 8);
  int checked = 0;
  for (int trial = 0; trial < 4000 && checked < 60; ++trial) {
    const Int u = dist(rng), mp = dist(rng);
    if (gcd(u, mp) != 1) continue;
    if (u * mp > 100) continue;
    const Int a1 = dist(rng), a2 = dist(rng);
    if (gcd(a1, mp) != 1 || gcd(a2, mp) != 1) continue;
    const Int v = dist(rng) % u;
    const Int C = (a1 + a2) * v + u * (dist(rng) % 5);
    const Int m = u * mp;

    std::set<Int> images;
    for (Int g1 = mod_floor(v, u); g1 < m; g1 += u) {
      const Int g2 = resclass_partner(u, mp, a1, a2, C, v, g1);
      // Post-condition: the partner is in range, in class, and solves it.
      REQUIRE(g2 >= 0);
      REQUIRE(g2 < m);
      REQUIRE(mod_floor(g2, u) == mod_floor(v, u));
      REQUIRE(mod_floor(a1 * g1 + a2 * g2 - C, m) == 0);
      // Role reversal inverts the map.
      REQUIRE(resclass_partner(u, mp, a2, a1, C, v, g2) == g1);
      images.insert(g2);
    }
    REQUIRE(images.size() == static_cast<std::size_t>(to_ulong(mp)));
    ++checked;
  }
  CHECK(checked == 60);
}
