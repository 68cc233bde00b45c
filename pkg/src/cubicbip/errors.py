"""Exception hierarchy.

Every error belongs to one of three families, which the CLI maps onto exit
codes: bad input (1), instance outside the supported class (2) and internal
invariant failures (3).
"""


class CubicBipError(Exception):
    exit_code = 3


class InputError(CubicBipError):
    exit_code = 1


class OutOfScope(CubicBipError):
    exit_code = 2


class InternalError(CubicBipError):
    exit_code = 3


# input
class MalformedGraph6(InputError):
    pass


class NotCubic(InputError):
    pass


class NotSimple(InputError):
    pass


class UnknownName(InputError):
    pass


class NotIndependent(InputError):
    pass


class NotMember(InputError):
    pass


class NotBipartite(InputError):
    pass


class KTooLarge(InputError):
    pass


class BadStart(InputError):
    pass


class NotAlternating(InputError):
    pass


# scope
class Disconnected(OutOfScope):
    pass


class NotTripartite(OutOfScope):
    pass


class ThresholdNotMet(OutOfScope):
    pass


class KOutOfRange(OutOfScope):
    pass


# search limits
class GenerationExhausted(InternalError):
    pass


class BudgetExceeded(InternalError):
    pass


class CapExceeded(InternalError):
    pass


# invariant failures
class NoFreeVertex(InternalError):
    pass


class ResultNotIndependent(InternalError):
    pass


class IterationCapExceeded(InternalError):
    pass


class CertificateFailed(InternalError):
    """A cycle-breaking step did not shrink the odd-cycle set."""


class BalanceInfeasible(InternalError):
    pass


class BalanceFailed(InternalError):
    pass


class StepFailed(InternalError):
    pass
