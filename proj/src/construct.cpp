#include "ramseycert/construct.hpp"

#include <algorithm>
#include <utility>

namespace ramsey {

ConstructionResult construct_general(const Int& a_in, const Int& b_in,
                                     const IntPolynomial& p,
                                     std::uint64_t factor_budget) {
  if (a_in < 1 || b_in < 1)
    throw PreconditionError("construct_general: a and b must be positive");
  if (gcd(a_in, b_in) != 1)
    throw PreconditionError("construct_general: a and b must be coprime");
  if (p.degree() < 2)
    throw PreconditionError("construct_general: deg p must be >= 2");
  if (p.leading_coefficient() <= 0)
    throw PreconditionError("construct_general: leading coefficient of p must be positive");
  const Int a1 = p.coefficient(1);
  if (a1 == 0)
    throw PreconditionError("construct_general: the linear coefficient a_1 must be nonzero");

  // Orient the equation so that 2 can only sit on the a side: when a is odd
  // and b is even, the certificate is built for the swapped equation.
  Int a = a_in, b = b_in;
  bool swapped = false;
  if (mpz_odd_p(a.get_mpz_t()) && mpz_even_p(b.get_mpz_t())) {
    std::swap(a, b);
    swapped = true;
  }

  // d and u are products over the primes of a (with 2 always included on
  // the a side, even at exponent 0) and the primes of b.  Writing alpha for
  // the prime's exponent in a (resp. beta in b) and n1 for its exponent in
  // a_1:
  //   a-side:  d gets max(alpha, n1+1),  u gets max(n1, 2*n1+1-alpha)
  //   b-side:  d gets max(beta,  n1+1),  u gets max(beta+n1, 2*n1+1)
  // The d exponents exceed n1, which pins the valuation of p(k+d)-p(k) to
  // that of a_1*d and makes the exact-valuation condition (3) come out to
  // the u exponents above.
  Int d = 1, u = 1;
  auto aside = factorize(a, factor_budget).factors;
  if (aside.empty() || aside.front().first != 2) aside.insert(aside.begin(), {Int(2), 0});
  for (const auto& [q, alpha] : aside) {
    const unsigned long n1 = p_adic_valuation(q, a1);
    d *= pow_ui(q, std::max(alpha, n1 + 1));
    const long long uexp = std::max<long long>(
        static_cast<long long>(n1),
        2 * static_cast<long long>(n1) + 1 - static_cast<long long>(alpha));
    u *= pow_ui(q, static_cast<unsigned long>(uexp));
  }
  for (const auto& [q, beta] : factorize(b, factor_budget).factors) {
    const unsigned long n1 = p_adic_valuation(q, a1);
    d *= pow_ui(q, std::max(beta, n1 + 1));
    u *= pow_ui(q, std::max(beta + n1, 2 * n1 + 1));
  }

  // With t = v = 0 the single-point conditions reduce to d | p(0) and
  // u | p(0), free when the constant term vanishes and a divisibility
  // requirement on a_0 otherwise.
  const Int a0 = p.coefficient(0);
  if (a0 != 0) {
    if (!divisible(a0, d))
      throw PreconditionError("construct_general: d = " + to_string(d) +
                              " does not divide the constant term " + to_string(a0));
    if (!divisible(a0, u))
      throw PreconditionError("construct_general: u = " + to_string(u) +
                              " does not divide the constant term " + to_string(a0));
  }

  return {EquationSpec(a, b, p), Certificate(d, u, 0, 0), swapped, "general"};
}

ConstructionResult construct_power(const Int& a, const Int& n,
                                   std::optional<Int> alpha_prime_override,
                                   std::uint64_t factor_budget) {
  if (a < 1) throw PreconditionError("construct_power: a must be positive");
  if (n < 2) throw PreconditionError("construct_power: n must be >= 2");

  const unsigned long alpha = p_adic_valuation(2, a);
  Int alpha_prime = div_ceil(Int(alpha), n);
  if (alpha_prime_override) {
    if (alpha == 0 && *alpha_prime_override != 0)
      throw PreconditionError(
          "construct_power: alpha' override must be 0 when a is odd");
    if (*alpha_prime_override < alpha_prime)
      throw PreconditionError("construct_power: alpha' override below the minimum " +
                              to_string(alpha_prime));
    alpha_prime = *alpha_prime_override;
  }
  const Int alpha0 = alpha_prime * n - alpha;  // >= 0 by the choice of alpha'

  // d = 2^{alpha'} * (odd part of a); t = 0 (mod 2^{alpha'}), 1 (mod odd
  // part).  Then k = t (mod d) makes (k+d)^n - k^n carry exactly
  // alpha + alpha0 factors of 2, and the odd primes shared by a and n
  // contribute their full exponent in n, which is what u collects.
  const Int a_odd = a / pow_ui(2, alpha);
  const Int two_ap = pow_int(2, alpha_prime);
  const Int d = two_ap * a_odd;
  Int u = pow_int(2, alpha0);
  for (const auto& [q, gamma] : factorize(n, factor_budget).factors) {
    if (q == 2) continue;
    if (divisible(a, q)) u *= pow_ui(q, gamma);
  }
  const Int t = crt({{0, two_ap}, {1, a_odd}}).x;
  // v solves (a+1)v = t^n (mod u), the single-point condition at v.
  const Int v = mod_floor(mod_inverse(mod_floor(a + 1, u), u) * pow_mod(t, n, u), u);

  return {EquationSpec(a, 1, IntPolynomial::monomial(1, to_ulong(n))),
          Certificate(d, u, t, v), false, "power"};
}

ConstructionResult construct_czp(const Int& a, const Int& b, const Int& c,
                                 const Int& q, std::uint64_t scan_budget) {
  if (a < 1 || b < 1 || c < 1)
    throw PreconditionError("construct_czp: a, b, c must be positive");
  if (q < 2 || !is_prime(q))
    throw PreconditionError("construct_czp: q must be prime");
  if (gcd(a, b) != 1)
    throw PreconditionError("construct_czp: a and b must be coprime");
  if (divisible(a, q))
    throw PreconditionError("construct_czp: q must not divide a");
  if (gcd(a, c) != 1)
    throw PreconditionError("construct_czp: a and c must be coprime");

  const unsigned long nu = p_adic_valuation(q, b);
  const Int B = b / pow_ui(q, nu);
  if (gcd(B, c) != 1)
    throw PreconditionError("construct_czp: c must be coprime to the q-free part " +
                            to_string(B) + " of b");
  // nu = q*n - eps with 0 <= eps < q.
  const Int n = div_ceil(Int(nu), q);
  const Int qn = pow_int(q, n);
  const Int d = a * B * qn;

  // t must satisfy t = 0 (mod q^n), t^{q-1} = a*c^{-1} (mod B) and
  // t^{q-1} = b*c^{-1} (mod a).  Scanning the multiples of q^n below d
  // finds the smallest such t or, by exhausting all of them, decides that
  // the recipe's existential hypothesis fails for this (a, b, c, q).
  const Int rhs_b = B == 1 ? Int(0) : mod_floor(a * mod_inverse(c, B), B);
  const Int rhs_a = a == 1 ? Int(0) : mod_floor(b * mod_inverse(c, a), a);
  std::optional<Int> t;
  std::uint64_t probes = 0;
  for (Int cand = 0; cand < d; cand += qn) {
    if (++probes > scan_budget)
      throw BudgetError("construct_czp: t-scan budget exceeded after " +
                        std::to_string(scan_budget) + " candidates");
    if (pow_mod(cand, q - 1, B) == rhs_b && pow_mod(cand, q - 1, a) == rhs_a) {
      t = cand;
      break;
    }
  }
  if (!t)
    throw HypothesisError(
        "construct_czp: hypothesis unsatisfied: no admissible t in [0, a*B*q^n)");

  const unsigned long nu2c = p_adic_valuation(2, c);
  const unsigned long nuqc = p_adic_valuation(q, c);
  const Int qpart = pow_ui(q, nuqc) * pow_int(q, q * n);  // q^{nu_q(c) + q*n}
  const Int two_part = pow_ui(2, nu2c);
  // For q = 2 the q part already carries every needed factor of 2.
  const Int u = q == 2 ? Int(qpart * B) : Int(two_part * qpart * B);
  const Int v = q == 2 ? crt({{0, qpart}, {*t, B}}).x
                       : crt({{0, qpart}, {0, two_part}, {*t, B}}).x;

  return {EquationSpec(a, b, IntPolynomial::monomial(c, to_ulong(q))),
          Certificate(d, u, *t, v), false, "czp"};
}

ConstructionResult construct_cz2(const Int& a_in, const Int& b_in, const Int& c,
                                 std::uint64_t scan_budget) {
  if (a_in < 1 || b_in < 1 || c < 1)
    throw PreconditionError("construct_cz2: a, b, c must be positive");
  if (gcd(a_in, b_in) != 1)
    throw PreconditionError("construct_cz2: a and b must be coprime");
  if (!is_power_of_two(gcd(a_in, c)))
    throw PreconditionError("construct_cz2: gcd(a, c) = " + to_string(gcd(a_in, c)) +
                            " must be a power of two");
  if (!is_power_of_two(gcd(b_in, c)))
    throw PreconditionError("construct_cz2: gcd(b, c) = " + to_string(gcd(b_in, c)) +
                            " must be a power of two");

  // Orient so a is odd (a and b cannot both be even); then q = 2 is not a
  // divisor of a, gcd(a, c) is an odd power of two hence 1, and the q-free
  // part of b is odd and coprime to c, so every construct_czp precondition
  // holds.  The congruence system for t is solvable because its moduli
  // 2^n, B and a are pairwise coprime, so HypothesisError cannot occur.
  Int a = a_in, b = b_in;
  bool swapped = false;
  if (mpz_even_p(a.get_mpz_t())) {
    std::swap(a, b);
    swapped = true;
  }
  ConstructionResult inner = construct_czp(a, b, c, 2, scan_budget);
  return {std::move(inner.equation), std::move(inner.certificate), swapped, "cz2"};
}

ScaledConstruction construct_scaled_cz2(const Int& a, const Int& b, const Int& c,
                                        std::uint64_t scan_budget) {
  if (a < 1 || b < 1 || c < 1)
    throw PreconditionError("construct_scaled_cz2: a, b, c must be positive");
  const Int g = gcd(a, b);
  const Int ar = a / g;
  const Int br = b / g;
  if (!is_power_of_two(gcd(ar, c)))
    throw PreconditionError("construct_scaled_cz2: gcd(a/g, c) = " +
                            to_string(gcd(ar, c)) + " must be a power of two");
  if (!is_power_of_two(gcd(br, c)))
    throw PreconditionError("construct_scaled_cz2: gcd(b/g, c) = " +
                            to_string(gcd(br, c)) + " must be a power of two");

  const IntPolynomial p = IntPolynomial::monomial(c, 2);
  EquationSpec original(a, b, p);
  EquationSpec reduced = scale_reduce(ar, br, g, p);  // c z^2 again: c*g^2/g^2
  ConstructionResult result = construct_cz2(ar, br, c, scan_budget);
  result.method = "scaled-cz2";
  return {{ScalingStep{g, std::move(original), std::move(reduced)}}, std::move(result)};
}

Triple lift_through_chain(const std::vector<ScalingStep>& chain, const Triple& sol) {
  Triple out = sol;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    out = lift_scaled_solution(it->factor, out);
  return out;
}

Triple construct_solution_in_class(const EquationSpec& eq, const Int& d,
                                   const Int& t_in, const Int& K) {
  const Int& a = eq.a;
  const Int& b = eq.b;
  const IntPolynomial& p = eq.p;
  if (d < 1) throw PreconditionError("construct_solution_in_class: d must be positive");
  if (K < 1) throw PreconditionError("construct_solution_in_class: K must be >= 1");
  if (gcd(a, b) != 1)
    throw PreconditionError("construct_solution_in_class: a and b must be coprime");
  if (p.degree() < 2 || p.leading_coefficient() <= 0)
    throw PreconditionError(
        "construct_solution_in_class: need deg p >= 2 with positive leading coefficient");
  const Int t = mod_floor(t_in, d);
  if (mod_floor(p.eval_mod(t, d) - (a + b) * t, d) != 0)
    throw PreconditionError(
        "construct_solution_in_class: (a+b)t = p(t) (mod d) must hold");

  // Take the first class member z1 >= K where p has outgrown the linear
  // frame (a+b)z + 4a^2b^2d; then ell = (p(z1) - (a+b)z1)/d is a
  // nonnegative integer >= 4a^2b^2, and splitting ell = 2ab*ell1 + ell2
  // with a bounded Bezout pair r*a + s*b = 1 yields offsets that keep both
  // coordinates >= z1:
  //   x = z1 + (ell1*b + ell2*r)d,  y = z1 + (ell1*a + ell2*s)d.
  // Then ax + by - (a+b)z1 = d*ell, i.e. ax + by = p(z1), and x = y = z1 = t
  // (mod d) because the offsets are multiples of d.
  const Int frame = 4 * a * a * b * b * d;
  Int z1 = K + mod_floor(t - K, d);
  while (p(z1) < (a + b) * z1 + frame) z1 += d;

  const Int ell = (p(z1) - (a + b) * z1) / d;
  const Int twoab = 2 * a * b;
  const Int ell1 = ell / twoab;
  const Int ell2 = ell - ell1 * twoab;
  const BezoutPair bez = bezout_bounded(a, b);
  const Int x = z1 + (ell1 * b + ell2 * bez.r) * d;
  const Int y = z1 + (ell1 * a + ell2 * bez.s) * d;
  return {x, y, z1};
}

Int find_value_in_gap(const IntPolynomial& p, const Int& d, const Int& t,
                      const Int& delta_num, const Int& delta_den, const Int& x) {
  if (d < 1) throw PreconditionError("find_value_in_gap: d must be positive");
  if (delta_num < 1 || delta_den < 1)
    throw PreconditionError("find_value_in_gap: delta must be a positive rational");
  if (x < 1) throw PreconditionError("find_value_in_gap: x must be positive");
  if (p.degree() < 1 || p.leading_coefficient() <= 0)
    throw PreconditionError(
        "find_value_in_gap: need deg p >= 1 with positive leading coefficient");

  const Int tr = mod_floor(t, d);
  Int z = tr == 0 ? d : tr;
  while (p(z) < x) z += d;
  // Exact rational comparison p(z) <= (1 + delta)*x without rounding.
  if (p(z) * delta_den > x * (delta_den + delta_num))
    throw ThresholdError("find_value_in_gap: x below the admissible threshold: p(" +
                         to_string(z) + ") = " + to_string(p(z)) +
                         " overshoots (1+delta)*x");
  return z;
}

Int resclass_partner(const Int& u, const Int& m_prime, const Int& a1,
                     const Int& a2, const Int& C, const Int& v,
                     const Int& gamma1) {
  if (u < 1 || m_prime < 1 || a1 < 1 || a2 < 1)
    throw PreconditionError("resclass_partner: u, m', a1, a2 must be positive");
  if (gcd(u, m_prime) != 1)
    throw PreconditionError("resclass_partner: u and m' must be coprime");
  if (gcd(a1, m_prime) != 1 || gcd(a2, m_prime) != 1)
    throw PreconditionError("resclass_partner: a1 and a2 must be coprime to m'");
  if (mod_floor((a1 + a2) * v - C, u) != 0)
    throw PreconditionError("resclass_partner: (a1+a2)v = C (mod u) must hold");
  const Int m = u * m_prime;
  if (gamma1 < 0 || gamma1 >= m)
    throw PreconditionError("resclass_partner: gamma1 must lie in [0, u*m')");
  if (mod_floor(gamma1 - v, u) != 0)
    throw PreconditionError("resclass_partner: gamma1 = v (mod u) must hold");

  // a1*gamma1 + a2*gamma2 = C (mod m') pins gamma2 mod m'; gamma2 = v
  // (mod u) pins it mod u; u and m' are coprime so both combine uniquely
  // mod m.  The mod-u half of the sum congruence is free because
  // (a1+a2)v = C (mod u).
  const Int r2 = mod_floor(mod_inverse(a2, m_prime) * (C - a1 * gamma1), m_prime);
  return crt({{mod_floor(v, u), u}, {r2, m_prime}}).x;
}

}  // namespace ramsey
