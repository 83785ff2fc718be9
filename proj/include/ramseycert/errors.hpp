#pragma once

#include <stdexcept>

namespace ramsey {

// Base class for every error the library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented precondition does not hold for the given arguments.
struct PreconditionError : Error {
  using Error::Error;
};

// A configurable work budget ran out before the computation finished.
// Distinct from a mathematical negative: the answer is "unknown", not "no".
struct BudgetError : Error {
  using Error::Error;
};

// An existential hypothesis of a construction recipe is genuinely
// unsatisfiable (decided exactly, e.g. by exhausting the full scan range).
struct HypothesisError : Error {
  using Error::Error;
};

// A congruence system has no simultaneous solution; the message names the
// first conflicting pair of congruences.
struct InconsistentSystemError : PreconditionError {
  using PreconditionError::PreconditionError;
};

// Malformed textual input (polynomial strings, colouring files).
struct ParseError : Error {
  using Error::Error;
};

// The gap finder's argument sits below the asymptotic range in which the
// bounded-gap guarantee applies, so the found value overshoots the window.
struct ThresholdError : Error {
  using Error::Error;
};

}  // namespace ramsey
