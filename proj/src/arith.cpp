#include "ramseycert/arith.hpp"

#include <algorithm>

namespace ramsey {

std::string to_string(const Int& n) { return n.get_str(); }

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int mod_floor(const Int& a, const Int& m) {
  if (m < 1) throw PreconditionError("mod_floor: modulus must be positive");
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int div_floor(const Int& a, const Int& b) {
  if (b < 1) throw PreconditionError("div_floor: divisor must be positive");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int div_ceil(const Int& a, const Int& b) {
  if (b < 1) throw PreconditionError("div_ceil: divisor must be positive");
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divisible(const Int& a, const Int& m) {
  return mpz_divisible_p(a.get_mpz_t(), m.get_mpz_t()) != 0;
}

bool is_power_of_two(const Int& n) {
  return n > 0 && mpz_popcount(n.get_mpz_t()) == 1;
}

Int pow_ui(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int pow_int(const Int& base, const Int& e) {
  if (e < 0) throw PreconditionError("pow_int: exponent must be nonnegative");
  return pow_ui(base, to_ulong(e));
}

Int pow_mod(const Int& base, const Int& e, const Int& m) {
  if (m < 1) throw PreconditionError("pow_mod: modulus must be positive");
  if (e < 0) throw PreconditionError("pow_mod: exponent must be nonnegative");
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

unsigned long to_ulong(const Int& n) {
  if (n < 0 || !n.fits_ulong_p())
    throw PreconditionError("to_ulong: value out of range: " + to_string(n));
  return n.get_ui();
}

long to_long(const Int& n) {
  if (!n.fits_slong_p())
    throw PreconditionError("to_long: value out of range: " + to_string(n));
  return n.get_si();
}

ExtGcdResult ext_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0)
    throw PreconditionError("ext_gcd: gcd(0,0) is undefined");
  ExtGcdResult out;
  mpz_gcdext(out.g.get_mpz_t(), out.r.get_mpz_t(), out.s.get_mpz_t(),
             a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BezoutPair bezout_bounded(const Int& a, const Int& b) {
  if (a < 1 || b < 1)
    throw PreconditionError("bezout_bounded: a and b must be positive");
  if (gcd(a, b) != 1)
    throw PreconditionError("bezout_bounded: a and b must be coprime, gcd(" +
                            to_string(a) + "," + to_string(b) + ") != 1");
  if (b == 1) {
    if (a == 1) return {1, 0};
    return {0, 1};
  }
  // r = a^{-1} (mod b) shifted into (-b/2, b/2]; then |s| = |1-ra|/b <= a.
  Int r = mod_inverse(mod_floor(a, b), b);
  if (2 * r > b) r -= b;
  Int s = (1 - r * a) / b;
  return {r, s};
}

Int mod_inverse(const Int& a, const Int& m) {
  if (m < 1) throw PreconditionError("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw PreconditionError("mod_inverse: " + to_string(a) +
                            " is not invertible mod " + to_string(m));
  return r;
}

CrtResult crt(const std::vector<Congruence>& system) {
  if (system.empty())
    throw PreconditionError("crt: congruence system must be nonempty");
  for (const auto& c : system)
    if (c.modulus < 1)
      throw PreconditionError("crt: moduli must be positive");
  // Pairwise consistency implies global solvability (prime by prime, the
  // congruence with the largest valuation of the modulus dominates and
  // agrees with every other one), so checking all pairs up front both
  // produces the best error message and guarantees the merge succeeds.
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (std::size_t j = i + 1; j < system.size(); ++j) {
      Int g = gcd(system[i].modulus, system[j].modulus);
      if (mod_floor(system[i].residue - system[j].residue, g) != 0)
        throw InconsistentSystemError(
            "crt: congruences " + std::to_string(i) + " and " +
            std::to_string(j) + " conflict: x = " + to_string(system[i].residue) +
            " (mod " + to_string(system[i].modulus) + ") vs x = " +
            to_string(system[j].residue) + " (mod " + to_string(system[j].modulus) +
            ")");
    }
  }
  Int x = mod_floor(system[0].residue, system[0].modulus);
  Int m = system[0].modulus;
  for (std::size_t i = 1; i < system.size(); ++i) {
    const Int& m2 = system[i].modulus;
    Int r2 = mod_floor(system[i].residue, m2);
    Int g = gcd(m, m2);
    if (!divisible(r2 - x, g))
      throw InconsistentSystemError("crt: merged system became inconsistent");
    Int m2g = m2 / g;
    // x' = x + m*k solves both; k = (r2-x)/g * (m/g)^{-1} (mod m2/g).
    Int k = mod_floor(((r2 - x) / g) * mod_inverse(mod_floor(m / g, m2g), m2g), m2g);
    Int merged = (m / g) * m2;
    x = mod_floor(x + m * k, merged);
    m = merged;
  }
  return {x, m};
}

Factorization factorize(const Int& n, std::uint64_t budget) {
  if (n < 1) throw PreconditionError("factorize: n must be >= 1");
  Factorization out;
  out.value = n;
  Int rest = n;
  std::uint64_t probes = 0;
  auto strip = [&](const Int& p) {
    if (divisible(rest, p)) {
      auto e = static_cast<unsigned long>(
          mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t()));
      out.factors.emplace_back(p, e);
    }
  };
  for (int small : {2, 3, 5}) {
    if (rest == 1) break;
    ++probes;
    strip(Int(small));
  }
  Int p = 7;
  int step = 4;
  while (rest != 1 && p * p <= rest) {
    if (++probes > budget)
      throw BudgetError("factorize: budget exceeded at divisor " + to_string(p));
    strip(p);
    p += step;
    step = 6 - step;
  }
  if (rest != 1) out.factors.emplace_back(rest, 1);
  return out;
}

bool is_prime(const Int& n, std::uint64_t budget) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (divisible(n, 2) || divisible(n, 3) || divisible(n, 5)) return n == 5;
  std::uint64_t probes = 0;
  Int p = 7;
  int step = 4;
  while (p * p <= n) {
    if (++probes > budget)
      throw BudgetError("is_prime: budget exceeded at divisor " + to_string(p));
    if (divisible(n, p)) return false;
    p += step;
    step = 6 - step;
  }
  return true;
}

Int radical(const Int& n, std::uint64_t budget) {
  Factorization f = factorize(n, budget);
  Int r = 1;
  for (const auto& [p, e] : f.factors) r *= p;
  return r;
}

unsigned long p_adic_valuation(const Int& q, const Int& n) {
  if (q < 2) throw PreconditionError("p_adic_valuation: q must be a prime >= 2");
  if (n == 0)
    throw PreconditionError("p_adic_valuation: n = 0 has infinite valuation");
  Int stripped;
  return static_cast<unsigned long>(
      mpz_remove(stripped.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t()));
}

}  // namespace ramsey
