"""Exception types raised by qdist."""


class QdistError(Exception):
    """Base class for all qdist errors."""


class NotHermitian(QdistError, ValueError):
    pass


class NotPSD(QdistError, ValueError):
    pass


class NoConvergence(QdistError, ArithmeticError):
    pass


class DimensionMismatch(QdistError, ValueError):
    pass


class InvalidState(QdistError, ValueError):
    """A matrix or vector violates a state invariant (trace, norm, positivity)."""


class BlochNormExceeded(InvalidState):
    pass


class SupportViolation(QdistError, ValueError):
    """supp(rho) is not contained in supp(sigma); relative entropy is infinite."""


class DomainError(QdistError, ValueError):
    pass


class NegativeProbability(QdistError, ValueError):
    pass


class NotSamePurified(QdistError, ValueError):
    pass


class ValidationFailure(QdistError, RuntimeError):
    pass


class PurityViolation(QdistError, ValueError):
    pass


class ConsistencyFailure(QdistError, RuntimeError):
    pass


class DegenerateInput(QdistError, ValueError):
    """Procrustes minimizer is not unique."""


class DegenerateInputWarning(UserWarning):
    pass
