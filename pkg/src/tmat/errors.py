"""Exception hierarchy shared by all tmat modules."""


class TmatError(Exception):
    """Base class for all package-specific failures."""


class NonFinite(TmatError):
    """An input or derived quantity is NaN or infinite."""


class PoleOfGamma(TmatError):
    """Gamma function evaluated at a non-positive integer."""


class ConvergenceFailure(TmatError):
    """A series or iteration did not reach the requested tolerance."""


class DomainError(TmatError):
    """Arguments outside the supported analytic region."""


class ForwardSingularity(TmatError):
    """Coulomb potential evaluated at zero momentum transfer."""


class ZeroDivisor(TmatError):
    """A coefficient in a ratio chain vanished (zero of the hypergeometric factor)."""

    def __init__(self, msg, n=None):
        super().__init__(msg)
        self.n = n


class BranchMismatch(TmatError):
    """Caller forced the complex-energy branch at a negative real reduced energy."""


class DegenerateEnergy(TmatError):
    """Reduced energy y too close to 1, where the recurrence coefficient is singular."""


class DegenerateG(TmatError):
    """A g_n value hit {0, 1}, breaking the diagonal splitting."""

    def __init__(self, msg, n=None):
        super().__init__(msg)
        self.n = n


class SingularShift(TmatError):
    """Shifted operator numerically singular (energy at or near a bound-state pole)."""

    def __init__(self, msg, cond=None):
        super().__init__(msg)
        self.cond = cond


class QuadratureFailure(TmatError):
    """Quadrature error estimate exceeded the target tolerance."""

    def __init__(self, msg, estimate=None):
        super().__init__(msg)
        self.estimate = estimate


class IllConditioned(TmatError):
    """Linear system condition estimate too large for trustworthy solves."""

    def __init__(self, msg, cond=None):
        super().__init__(msg)
        self.cond = cond


class SlowConvergence(TmatError):
    """Remainder estimate exceeds tolerance at the configured truncation."""

    def __init__(self, msg, remainder=None, report=None):
        super().__init__(msg)
        self.remainder = remainder
        self.report = report


class MissedPole(TmatError):
    """Pole bracketing or refinement failed on the configured scan grid."""


class AtPole(TmatError):
    """Evaluation requested exactly at a bound-state pole."""
