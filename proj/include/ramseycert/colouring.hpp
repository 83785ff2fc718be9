#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramseycert/poly.hpp"

namespace ramsey {

// Sign function Z+ -> {+1, -1}; the two colours of a 2-colouring.
using SignFunction = std::function<int(const Int&)>;

// Colouring of the positive integers by residue: n gets signs[n mod m].
struct PeriodicColouring {
  long modulus = 1;
  std::vector<int> signs;  // size modulus, entries +1 / -1

  PeriodicColouring(long m, std::vector<int> signs_);
  int sign_of(const Int& n) const;
  // "+-" string, index 0 first.
  std::string sign_string() const;
  static PeriodicColouring from_string(long m, const std::string& signs);
  SignFunction fn() const;

  friend bool operator==(const PeriodicColouring&, const PeriodicColouring&) = default;
};

// Finite colouring table for [1, N]; querying outside the table throws.
struct TableColouring {
  std::vector<int> signs;  // signs[i] colours the integer i+1
  int sign_of(const Int& n) const;
  SignFunction fn() const;
};

// Named colourings:
//   "parity"        +1 evens, -1 odds (modulus 2)
//   "example2:q,n"  +1 iff q^n | t, modulus q^n (q prime, n >= 1)
//   "example3"      modulus 4, +1 iff t = 0,1 (mod 4)
//   "const"         modulus 1, everything +1
PeriodicColouring builtin_parity();
PeriodicColouring builtin_example2(const Int& q, unsigned long n);
PeriodicColouring builtin_example3();
PeriodicColouring builtin_const();
PeriodicColouring builtin_colouring(const std::string& name_and_params);

// File format shared by periodic colourings and tables: the modulus (or
// table length) as the first whitespace-separated token, then exactly that
// many '+'/'-' characters (whitespace between them allowed).
PeriodicColouring load_periodic_colouring(const std::string& path);
TableColouring load_table_colouring(const std::string& path);

struct MonoSolution {
  Int x, y, z;
  int colour;
  friend bool operator==(const MonoSolution&, const MonoSolution&) = default;
};

// All monochromatic solutions of a*x + b*y = p(z) with x, y, z in [1, N],
// ordered by (z, x).  Works for arbitrary gcd(a,b).
std::vector<MonoSolution> enumerate_mono_solutions(const EquationSpec& eq,
                                                   const SignFunction& colour,
                                                   const Int& N);

// Residue triple (x,y,z) mod m with a*x + b*y = p(z) (mod m).
struct ResidueTriple {
  Int x, y, z;
  friend bool operator==(const ResidueTriple&, const ResidueTriple&) = default;
};

inline constexpr std::uint64_t kDefaultLiftBudget = 1'000;

// Smallest-z concrete solution with entries >= K in the residue classes of
// the triple: scans z in the class of z_bar (smallest positive first, at
// most `budget` candidates) and solves a*alpha + b*beta = (p(z)-a*x-b*y)/m
// in nonnegative alpha, beta via the extended gcd.  Returns nothing if the
// budget runs out (the triple still witnesses failure mod m).
std::optional<Triple> lift_residue_triple(const EquationSpec& eq, const Int& m,
                                          const ResidueTriple& triple,
                                          const Int& K,
                                          std::uint64_t budget = kDefaultLiftBudget);

struct Violation {
  ResidueTriple triple;
  int colour;                 // the common sign of the three residues
  std::optional<Triple> lift; // concrete solution, if found within budget
};

struct AvoidanceVerdict {
  bool avoids;  // no monochromatic residue solutions mod the period
  std::vector<Violation> violations;  // ordered by (x, y, z)
};

// Decides whether the periodic colouring admits a monochromatic residue
// solution of a*x + b*y = p(z) (mod modulus).  Because the colouring is
// constant on residue classes and every class contains arbitrarily large
// members, a residue violation lifts to infinitely many concrete
// monochromatic solutions, and no residue violation means none exist.
AvoidanceVerdict check_periodic_avoidance(const EquationSpec& eq,
                                          const PeriodicColouring& colouring,
                                          std::uint64_t lift_budget = kDefaultLiftBudget);

inline constexpr long kDefaultSearchCeiling = 24;

// Finds a periodic colouring of modulus exactly m avoiding monochromatic
// solutions, or proves none exists at that modulus.  The residue triples
// satisfying the congruence become not-all-equal constraints solved by
// backtracking with unit propagation; the lowest constrained residue is
// pinned to +1 (global flip symmetry) and unconstrained residues default
// to +1, so the output is canonical.
std::optional<PeriodicColouring> search_avoiding_colouring(const EquationSpec& eq,
                                                           long m,
                                                           long ceiling = kDefaultSearchCeiling);

}  // namespace ramsey
