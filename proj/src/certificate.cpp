#include "ramseycert/certificate.hpp"

#include <algorithm>
#include <tuple>

namespace ramsey {

Certificate::Certificate(const Int& d_, const Int& u_, const Int& t_, const Int& v_)
    : d(d_), u(u_) {
  if (d < 1 || u < 1)
    throw PreconditionError("Certificate: periods d and u must be positive");
  t = mod_floor(t_, d);
  v = mod_floor(v_, u);
}

// Every universally quantified condition below is decided by checking one
// full period.  The underlying fact used throughout: for an integer
// polynomial f and modulus M >= 1, f(k) mod M depends only on k mod M, and
// along the arithmetic progression k = t + i*d the residue k mod M cycles
// with period lcm(M, d)/d in i.  Checking i in [0, lcm(M,d)/d) therefore
// decides "for all k = t (mod d), k >= 0" exactly.
ConditionReport verify_certificate(const EquationSpec& eq, const Certificate& cert) {
  const Int& a = eq.a;
  const Int& b = eq.b;
  const IntPolynomial& p = eq.p;
  if (gcd(a, b) != 1)
    throw PreconditionError("verify_certificate: a and b must be coprime, gcd(" +
                            to_string(a) + "," + to_string(b) + ") = " +
                            to_string(gcd(a, b)));
  if (p.degree() < 2)
    throw PreconditionError("verify_certificate: deg p must be >= 2");
  if (p.leading_coefficient() <= 0)
    throw PreconditionError("verify_certificate: leading coefficient of p must be positive");

  const Int& d = cert.d;
  const Int& u = cert.u;
  const Int& t = cert.t;
  const Int& v = cert.v;
  const Int ab = a + b;

  ConditionReport rep;
  for (int i = 0; i < 6; ++i) rep.conditions[i].index = i + 1;
  auto fail = [&rep](int index, Witness w) {
    auto& entry = rep.conditions[static_cast<std::size_t>(index - 1)];
    entry.status = ConditionStatus::fail;
    entry.witnesses.push_back(std::move(w));
  };

  // (1) (a+b)t = p(t) (mod d): a single congruence.
  if (mod_floor(p.eval_mod(t, d) - ab * t, d) != 0) fail(1, Witness{.k = t});

  // (2) a | p(k+d) - p(k) for all k in the class: the difference mod a is a
  // function of k mod a, so one period of length lcm(a,d)/d decides it.
  {
    const Int window = lcm(a, d) / d;
    for (Int i = 0; i < window; ++i) {
      const Int k = t + i * d;
      if (mod_floor(p.eval_mod(k + d, a) - p.eval_mod(k, a), a) != 0)
        fail(2, Witness{.k = k});
    }
  }

  // (3) m := (p(k+d)-p(k))/a must equal u * m' with m' odd and coprime to
  // a, b and u.  Equivalently: for every prime q | 2abu, the q-adic
  // valuation of diff := p(k+d)-p(k) equals e_q := nu_q(a) + nu_q(u)
  // exactly.  (For q | u this transfers u's full power to m and no more;
  // for the remaining primes of 2ab it forces nu_q(m') = 0, which is
  // exactly m' odd and coprime to a, b; primes outside 2abu never matter.
  // If a does not even divide diff, some prime of a has a deficient
  // valuation and the same test catches it.)  "nu_q(diff) = e_q" is the
  // residue pair diff = 0 (mod q^{e_q}), diff != 0 (mod q^{e_q+1}), and
  // diff mod q^{e_q+1} is a function of k mod q^{e_q+1}, so the window
  // lcm(q^{e_q+1}, d)/d decides it; a class member with diff = 0 fails the
  // second test, as it must (m = 0 admits no valid m').  Working with
  // residues keeps the cost independent of how fast p grows.
  {
    std::vector<Witness> found;
    for (const auto& factor : factorize(2 * a * b * u).factors) {
      const Int& q = factor.first;
      const unsigned long e = p_adic_valuation(q, a) + p_adic_valuation(q, u);
      const Int qe = pow_ui(q, e);
      const Int qe1 = qe * q;
      const Int window = lcm(qe1, d) / d;
      for (Int i = 0; i < window; ++i) {
        const Int k = t + i * d;
        const Int diff = mod_floor(p.eval_mod(k + d, qe1) - p.eval_mod(k, qe1), qe1);
        if (diff == 0 || !divisible(diff, qe)) found.push_back(Witness{.k = k, .q = q});
      }
    }
    std::sort(found.begin(), found.end(), [](const Witness& lhs, const Witness& rhs) {
      return std::tie(*lhs.k, *lhs.q) < std::tie(*rhs.k, *rhs.q);
    });
    for (auto& w : found) fail(3, std::move(w));
  }

  // (4) p(v) = (a+b)v (mod u): a single congruence.
  if (mod_floor(p.eval_mod(v, u) - ab * v, u) != 0) fail(4, Witness{.j = v});

  // (5) p(k) = (a+b)v (mod u) for all k in the class: p(k) mod u is a
  // function of k mod u, so the window lcm(u,d)/d decides it.
  {
    const Int window = lcm(u, d) / d;
    const Int rhs = mod_floor(ab * v, u);
    for (Int i = 0; i < window; ++i) {
      const Int k = t + i * d;
      if (p.eval_mod(k, u) != rhs) fail(5, Witness{.k = k});
    }
  }

  // (6) b | p(k) - a*j for all k = t (mod d) and j = v (mod u): the value
  // mod b is a function of (k mod b, j mod b), so windows lcm(b,d)/d in k
  // and lcm(b,u)/u in j cover every attained pair.
  {
    const Int kwindow = lcm(b, d) / d;
    const Int jwindow = lcm(b, u) / u;
    for (Int i = 0; i < kwindow; ++i) {
      const Int k = t + i * d;
      const Int pk = p.eval_mod(k, b);
      for (Int l = 0; l < jwindow; ++l) {
        const Int j = v + l * u;
        if (mod_floor(pk - a * j, b) != 0) fail(6, Witness{.k = k, .j = j});
      }
    }
  }

  rep.overall = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                            [](const ConditionEntry& e) {
                              return e.status == ConditionStatus::pass;
                            });
  return rep;
}

bool unit_coeff_criterion(const IntPolynomial& p) {
  if (p.degree() < 1 || p.leading_coefficient() <= 0)
    throw PreconditionError(
        "unit_coeff_criterion: need deg p >= 1 with positive leading coefficient");
  return divisible(p(Int(1)) * p(Int(2)), Int(2));
}

}  // namespace ramsey
