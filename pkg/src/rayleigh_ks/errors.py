"""Exception hierarchy.

Every error carries a short machine-readable ``code`` so the CLI can map it
to an exit status without string matching.
"""

from __future__ import annotations


class RayleighError(Exception):
    code = "error"
    # 1 = computation failed / bound violated, 2 = invalid input
    exit_code = 1


class InvalidInput(RayleighError):
    code = "invalid-input"
    exit_code = 2


class InvalidDistribution(InvalidInput):
    code = "invalid-distribution"


class PreconditionViolation(InvalidInput):
    code = "precondition-violation"


class UnsupportedDegree(RayleighError):
    code = "unsupported-degree"


class UndefinedInput(InvalidInput):
    code = "undefined-input"


class DegreeMismatch(InvalidInput):
    code = "degree-mismatch"


class EmptyCondition(RayleighError):
    code = "empty-condition"


class BudgetExceeded(RayleighError):
    code = "budget-exceeded"


class NoBasis(InvalidInput):
    code = "no-basis"


class RankDeficient(RayleighError):
    code = "rank-deficient"


class BoundaryOrInfeasible(RayleighError):
    code = "boundary-or-infeasible"


class InternalConsistency(RayleighError):
    code = "internal-consistency"


class NumericalFailure(RayleighError):
    code = "numerical-failure"


class AtRoot(RayleighError):
    code = "at-root"


class HypothesisNotMet(RayleighError):
    code = "hypothesis-not-met"


class DegenerateDirection(RayleighError):
    code = "degenerate-direction"


class InfiniteResistance(RayleighError):
    code = "infinite-resistance"
