"""2-Ramsey certificates for a*x + b*y = p(z).

Exact-arithmetic construction and verification of colouring-obstruction
certificates, plus periodic 2-colouring checks and searches.  All integer
arguments and results are native Python ints of arbitrary size.
"""

from ._core import (
    AvoidanceVerdict,
    BudgetError,
    Certificate,
    ConditionEntry,
    ConditionReport,
    ConstructionResult,
    EquationSpec,
    Error,
    HypothesisError,
    InconsistentSystemError,
    IntPolynomial,
    MonoSolution,
    ParseError,
    PeriodicColouring,
    PreconditionError,
    ResidueTriple,
    ScaledConstruction,
    ScalingStep,
    TableColouring,
    ThresholdError,
    Triple,
    Violation,
    Witness,
    __version__,
    bezout_bounded,
    builtin_colouring,
    builtin_const,
    builtin_example2,
    builtin_example3,
    builtin_parity,
    check_periodic_avoidance,
    construct_cz2,
    construct_czp,
    construct_general,
    construct_power,
    construct_scaled_cz2,
    construct_solution_in_class,
    crt,
    difference_quotient,
    enumerate_mono_solutions,
    ext_gcd,
    factorize,
    find_value_in_gap,
    is_prime,
    lift_residue_triple,
    lift_scaled_solution,
    lift_through_chain,
    load_periodic_colouring,
    load_table_colouring,
    mod_inverse,
    p_adic_valuation,
    radical,
    resclass_partner,
    scale_reduce,
    search_avoiding_colouring,
    unit_coeff_criterion,
    verify_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
