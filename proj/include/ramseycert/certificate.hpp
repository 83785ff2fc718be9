#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ramseycert/poly.hpp"

namespace ramsey {

// Witness data (d, u, t, v) for the six colouring-obstruction conditions.
// d and u are positive periods; t and v are stored normalized, t in [0, d)
// and v in [0, u).  Together they assert, for the equation a*x + b*y = p(z):
//
//   (1) (a+b)t = p(t)                   (mod d)
//   (2) a | p(k+d) - p(k)               for all k = t (mod d), k >= 0
//   (3) m := (p(k+d)-p(k))/a factors as m = u*m' with m' odd and coprime
//       to a, b and u                   for all k = t (mod d), k >= 0
//   (4) p(v) = (a+b)v                   (mod u)
//   (5) p(k) = (a+b)v (mod u)           for all k = t (mod d), k >= 0
//   (6) b | p(k) - a*j                  for all k = t (mod d), j = v (mod u)
struct Certificate {
  Int d, u, t, v;
  Certificate(const Int& d_, const Int& u_, const Int& t_, const Int& v_);
};

enum class ConditionStatus { pass, fail };

// One failing point of a condition.  Which fields are present depends on
// the condition: (1), (2) and (5) carry k; (3) carries (k, q) with q the
// prime whose valuation is off; (4) carries j; (6) carries (k, j).
struct Witness {
  std::optional<Int> k;
  std::optional<Int> q;
  std::optional<Int> j;
};

struct ConditionEntry {
  int index = 0;  // 1..6
  ConditionStatus status = ConditionStatus::pass;
  std::vector<Witness> witnesses;  // nonempty iff fail; sorted ascending
};

struct ConditionReport {
  std::array<ConditionEntry, 6> conditions;
  bool overall = false;  // all six pass
  const ConditionEntry& condition(int index) const {
    return conditions.at(static_cast<std::size_t>(index - 1));
  }
};

// Decides all six conditions exactly by finite periodic reductions (each
// universally quantified condition is checked over one full period of the
// relevant modulus; the justification for each window accompanies the code).
// Requires gcd(a,b) = 1, deg p >= 2 and a positive leading coefficient.
ConditionReport verify_certificate(const EquationSpec& eq, const Certificate& cert);

// The parity criterion deciding the a = b = 1 equation x + y = p(z):
// it has the Ramsey property iff p(1)*p(2) is even.  Requires deg p >= 1
// and a positive leading coefficient.
bool unit_coeff_criterion(const IntPolynomial& p);

}  // namespace ramsey
