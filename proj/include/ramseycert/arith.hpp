#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramseycert/errors.hpp"

namespace ramsey {

// Arbitrary-precision integer used throughout the library.
using Int = mpz_class;

// Number of candidate divisors trial division probes before giving up.
inline constexpr std::uint64_t kDefaultFactorBudget = 1'000'000;

std::string to_string(const Int& n);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

// Floor modulus: the representative of a mod m in [0, m).  Requires m >= 1.
Int mod_floor(const Int& a, const Int& m);

// Floor / ceiling division for a positive divisor.
Int div_floor(const Int& a, const Int& b);
Int div_ceil(const Int& a, const Int& b);

bool divisible(const Int& a, const Int& m);
bool is_power_of_two(const Int& n);

Int pow_ui(const Int& base, unsigned long e);
Int pow_int(const Int& base, const Int& e);
Int pow_mod(const Int& base, const Int& e, const Int& m);

// Narrowing helper for exponents and loop bounds that must fit a machine word.
unsigned long to_ulong(const Int& n);
long to_long(const Int& n);

// g = gcd(a,b) >= 0 together with cofactors satisfying r*a + s*b = g.
// The cofactors are the canonical minimal pair: |r| <= |b|/(2g) and
// |s| <= |a|/(2g) except in the degenerate small cases.
struct ExtGcdResult {
  Int g, r, s;
};
ExtGcdResult ext_gcd(const Int& a, const Int& b);

// For coprime a,b >= 1: r*a + s*b = 1 with |r| <= b and |s| <= a.
// r is the representative of a^{-1} (mod b) in (-b/2, b/2]; for b = 1 the
// pair is (1,0) when a = 1 and (0,1) otherwise.
struct BezoutPair {
  Int r, s;
};
BezoutPair bezout_bounded(const Int& a, const Int& b);

// Inverse of a modulo m in [0, m); m >= 1.  m = 1 yields 0.
Int mod_inverse(const Int& a, const Int& m);

struct Congruence {
  Int residue;
  Int modulus;  // >= 1
};
struct CrtResult {
  Int x;        // in [0, modulus)
  Int modulus;  // lcm of the input moduli
};
// Simultaneous solution of a congruence system.  Moduli need not be
// pairwise coprime; the system is checked for pairwise consistency first
// and an InconsistentSystemError names the first conflicting pair.
CrtResult crt(const std::vector<Congruence>& system);

// Exponent of the prime q in n; n != 0.  Primality of q is the caller's
// contract (every internal call site feeds primes from factorize).
unsigned long p_adic_valuation(const Int& q, const Int& n);

struct Factorization {
  Int value;                                         // the factored integer
  std::vector<std::pair<Int, unsigned long>> factors;  // (prime, exponent), primes ascending
};
// Trial-division factorization of n >= 1.  factorize(1) has no factors.
Factorization factorize(const Int& n, std::uint64_t budget = kDefaultFactorBudget);

// Deterministic trial-division primality test.
bool is_prime(const Int& n, std::uint64_t budget = kDefaultFactorBudget);

// Product of the distinct primes dividing n; radical(1) = 1.
Int radical(const Int& n, std::uint64_t budget = kDefaultFactorBudget);

}  // namespace ramsey
