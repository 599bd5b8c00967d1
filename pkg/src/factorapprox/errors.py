"""Exception hierarchy shared by the resummation pipeline."""


class FactorApproxError(Exception):
    """Base class for all errors raised by this package."""


class ZeroLeadingCoefficient(FactorApproxError, ValueError):
    pass


class SolverError(FactorApproxError):
    """The factor parameters could not be determined at this order."""


class SingularMomentSystem(SolverError):
    pass


class ResidualTooLarge(SolverError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class GaugeConflict(SolverError):
    pass


class ConjugateClosureError(SolverError):
    pass


class NoProgress(SolverError):
    """Newton polishing stalled above tolerance.

    The best approximant reached is kept on ``approximant`` for inspection.
    """

    def __init__(self, message, approximant=None, residual=None):
        super().__init__(message)
        self.approximant = approximant
        self.residual = residual


class EvaluationError(FactorApproxError):
    pass


class DomainError(EvaluationError, ValueError):
    pass


class NonRealResult(EvaluationError):
    pass


class ExponentialAsymptote(EvaluationError):
    pass


class ShiftObstruction(EvaluationError):
    pass


class ZeroReference(FactorApproxError, ZeroDivisionError):
    pass


class OracleError(FactorApproxError):
    pass


class OrderTooLarge(OracleError, ValueError):
    pass


class QuadratureNonConvergence(OracleError):
    pass


class BasisNonConvergence(OracleError):
    pass


class BlowupDetected(OracleError):
    """Integration left the configured bound; ``t_low``/``t_high`` bracket the blow-up."""

    def __init__(self, message, t_low, t_high, table=None):
        super().__init__(message)
        self.t_low = t_low
        self.t_high = t_high
        self.table = table
