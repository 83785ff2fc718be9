#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramseycert/certificate.hpp"

namespace ramsey {

// Upper bound on candidates examined by the t-scan in construct_czp.
inline constexpr std::uint64_t kDefaultScanBudget = 1'000'000;

struct ConstructionResult {
  // The equation the certificate is asserted against.  When swapped is
  // true this is the input equation with a and b exchanged.
  EquationSpec equation;
  Certificate certificate;
  bool swapped = false;
  std::string method;  // "general", "power", "czp", "cz2" or "scaled-cz2"
};

// Certificate recipe for a*x + b*y = p(z) with gcd(a,b) = 1, deg p >= 2,
// positive leading coefficient and a_1 != 0.  Requires d | a_0 and u | a_0
// when the constant term is nonzero.  Swaps a and b first when a is odd
// and b is even, so that 2 always sits on the a side.  Produces t = v = 0.
ConstructionResult construct_general(const Int& a, const Int& b,
                                     const IntPolynomial& p,
                                     std::uint64_t factor_budget = kDefaultFactorBudget);

// Certificate recipe for a*x + y = z^n, n >= 2 (b = 1 implied).  With
// alpha = nu_2(a), the 2-exponent of d defaults to the minimal
// alpha' = ceil(alpha/n); the override exists for experimentation and must
// satisfy alpha' >= ceil(alpha/n) (it is rejected when alpha = 0, where the
// recipe pins alpha' = 0).
ConstructionResult construct_power(const Int& a, const Int& n,
                                   std::optional<Int> alpha_prime_override = std::nullopt,
                                   std::uint64_t factor_budget = kDefaultFactorBudget);

// Certificate recipe for a*x + b*y = c*z^q with q prime, q not dividing a,
// gcd(a,b) = gcd(a,c) = 1 and gcd(B,c) = 1 where B is the q-free part of b.
// Scans t = 0, q^n, 2q^n, ... < a*B*q^n for the smallest t satisfying the
// recipe's congruences; throws HypothesisError when the full scan proves no
// such t exists.
ConstructionResult construct_czp(const Int& a, const Int& b, const Int& c,
                                 const Int& q,
                                 std::uint64_t scan_budget = kDefaultScanBudget);

// Certificate recipe for a*x + b*y = c*z^2 with gcd(a,b) = 1 and both
// gcd(a,c) and gcd(b,c) powers of two.  Swaps a and b so a is odd, then
// delegates to construct_czp with q = 2; the hypothesis there is always
// satisfiable, so HypothesisError cannot escape.
ConstructionResult construct_cz2(const Int& a, const Int& b, const Int& c,
                                 std::uint64_t scan_budget = kDefaultScanBudget);

// One application of the scaling reduction: original = (a, b, p),
// reduced = (a/factor, b/factor, p(factor*z)/factor^2).
struct ScalingStep {
  Int factor;
  EquationSpec original;
  EquationSpec reduced;
};

struct ScaledConstruction {
  // Reductions applied outermost first; solutions of result.equation lift
  // through the chain in reverse order.  Always exactly one step here
  // (factor gcd(a,b), possibly the identity factor 1).
  std::vector<ScalingStep> chain;
  ConstructionResult result;
};

// Certificate recipe for a*x + b*y = c*z^2 with arbitrary gcd(a,b) = g:
// divides the equation through by g and certifies the reduced equation,
// which requires gcd(c, a/g) and gcd(c, b/g) to be powers of two.
ScaledConstruction construct_scaled_cz2(const Int& a, const Int& b, const Int& c,
                                        std::uint64_t scan_budget = kDefaultScanBudget);

// Applies lift_scaled_solution for each chain step, innermost reduction
// first, turning a solution of the reduced equation into one of the
// original equation.
Triple lift_through_chain(const std::vector<ScalingStep>& chain, const Triple& sol);

// Explicit monochromatic-by-congruence solution of a*x + b*y = p(z) with
// all entries >= K and x = y = z = t (mod d).  Requires gcd(a,b) = 1,
// deg p >= 2, positive leading coefficient, K >= 1 and the compatibility
// congruence (a+b)t = p(t) (mod d).
Triple construct_solution_in_class(const EquationSpec& eq, const Int& d,
                                   const Int& t, const Int& K);

// Smallest z > 0 with z = t (mod d) and p(z) >= x, for deg p >= 1 with
// positive leading coefficient and delta = delta_num/delta_den > 0.
// Throws ThresholdError when p(z) > (1+delta)*x, i.e. x is still below the
// range where the polynomial's gaps along the class are within factor
// (1+delta).
Int find_value_in_gap(const IntPolynomial& p, const Int& d, const Int& t,
                      const Int& delta_num, const Int& delta_den, const Int& x);

// Given gamma_1 in [0, u*m') with gamma_1 = v (mod u), returns the unique
// gamma_2 in [0, u*m') with gamma_2 = v (mod u) and
// a_1*gamma_1 + a_2*gamma_2 = C (mod u*m').  Requires u, m', a_1, a_2 >= 1,
// m' coprime to each of u, a_1, a_2, and (a_1+a_2)v = C (mod u); the last
// congruence is what extends the defining relation from mod m' to mod u*m'.
Int resclass_partner(const Int& u, const Int& m_prime, const Int& a1,
                     const Int& a2, const Int& C, const Int& v,
                     const Int& gamma1);

}  // namespace ramsey
