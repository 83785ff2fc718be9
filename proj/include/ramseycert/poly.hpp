#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ramseycert/arith.hpp"

namespace ramsey {

// Integer polynomial stored as coefficients in low-to-high order, so
// {2, 3, 1} is z^2 + 3z + 2.  The representation is normalized: no trailing
// zero coefficients except for the zero polynomial, which is {0}.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{Int(0)} {}
  explicit IntPolynomial(std::vector<Int> coeffs);

  // c * z^e
  static IntPolynomial monomial(const Int& c, unsigned long e);

  // Auto-detects the format: a 'z' anywhere means expression syntax
  // ("z^2+3*z+2"), otherwise comma-separated coefficients ("2,3,1").
  static IntPolynomial parse(const std::string& text);
  static IntPolynomial from_coefficients(const std::string& csv);
  static IntPolynomial from_expression(const std::string& expr);

  const std::vector<Int>& coefficients() const { return coeffs_; }
  // Coefficient of z^i; zero beyond the degree.
  Int coefficient(std::size_t i) const;
  std::size_t degree() const { return coeffs_.size() - 1; }
  const Int& leading_coefficient() const { return coeffs_.back(); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  // Exact evaluation (Horner).
  Int operator()(const Int& x) const;
  // Evaluation mod m >= 1, reducing at every Horner step so the cost is
  // independent of how large p(x) itself would be.  Result in [0, m).
  Int eval_mod(const Int& x, const Int& m) const;

  // Canonical comma-separated low-to-high coefficient string, e.g. "0,1,1".
  std::string coefficient_string() const;
  // Human form, e.g. "z^2+3*z+2".
  std::string pretty() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Int> coeffs_;
};

// The equation a*x + b*y = p(z) with a, b >= 1.
struct EquationSpec {
  Int a;
  Int b;
  IntPolynomial p;
  EquationSpec(Int a_, Int b_, IntPolynomial p_);
};

struct Triple {
  Int x, y, z;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// (p(k+d) - p(k)) / a, exact.  Throws PreconditionError when a does not
// divide the difference (i.e. certificate condition (2) fails at k).
Int difference_quotient(const EquationSpec& eq, const Int& d, const Int& k);

// For c | a_1 and c^2 | a_0 the polynomial q(z) = p(cz) / c^2 is integral,
// and (x,y,z) -> (cx, cy, cz) maps solutions of a*x + b*y = q(z) onto
// solutions of (ca)*x + (cb)*y = p(z).  Returns the reduced equation
// (a, b, q).
EquationSpec scale_reduce(const Int& a, const Int& b, const Int& c,
                          const IntPolynomial& p);

// Inverse direction of scale_reduce on solutions: (x,y,z) -> (cx, cy, cz).
Triple lift_scaled_solution(const Int& c, const Triple& sol);

}  // namespace ramsey
