"""Physical inputs and their reduction to the dimensionless variables (y, rho, x).

All downstream modules work exclusively in the reduced variables; physical
units enter once here and leave through the inverse map.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import BranchMismatch, DomainError, NonFinite

_NEG_REAL_IMAG_TOL = 0.0  # negative-real detection is exact: Im y == 0


@dataclass(frozen=True)
class PhysicalSystem:
    """Coupling, masses and the basis scale of a two-body Coulomb system.

    sigma = +1 is repulsion, -1 attraction; sigma = 0 is reserved for the
    free-potential (Born-limit) test mode and never occurs in production use.
    gamma must be real positive so the basis stays orthogonal.
    """

    alpha: float
    mu: float
    hbar: float = 1.0
    sigma: int = 1
    gamma: float = 1.0

    def __post_init__(self):
        for name in ("alpha", "mu", "hbar", "gamma"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be a positive finite real, got {v!r}")
        if self.sigma not in (-1, 0, 1):
            raise DomainError(f"sigma must be +1 or -1 (0 only in Born-limit tests), got {self.sigma!r}")

    def energy_scale(self):
        """gamma^2 hbar^2 / (2 mu): the energy at which |y| = 1."""
        return self.gamma**2 * self.hbar**2 / (2.0 * self.mu)


@dataclass(frozen=True)
class DimensionlessState:
    """Reduced energy y, reduced coupling rho, Moebius image x and the sqrt branch.

    branch is "negative-real-y" exactly when y = -t with t > 0; in that case
    t is set and all closed forms can be evaluated in real arithmetic.
    x is NaN at y = -1 (pole of the Moebius map); branch_ambiguous marks
    states that were auto-routed onto the t-branch.
    """

    y: complex
    rho: float
    x: complex
    sqrt_y: complex
    branch: str = "complex-y"
    t: float | None = None
    branch_ambiguous: bool = False


def to_dimensionless(sys: PhysicalSystem, z, branch: str = "auto") -> DimensionlessState:
    """Map a physical energy z to the reduced state (y, rho, x, sqrt(y)).

    branch: "auto" routes negative real y onto the t-branch and flags the
    ambiguity, "t" selects it explicitly, "complex" forbids it.
    The principal sqrt(y) with Im >= 0 matches the z = E + i0 limit.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFinite(f"z must be finite, got {z!r}")
    scale = sys.energy_scale()
    y = z / scale
    rho = sys.alpha * sys.mu / (sys.gamma * sys.hbar**2)
    if not (math.isfinite(y.real) and math.isfinite(y.imag) and math.isfinite(rho)):
        raise NonFinite("reduced variables overflowed")

    neg_real = y.imag == _NEG_REAL_IMAG_TOL and y.real < 0.0
    if branch == "complex" and neg_real:
        raise BranchMismatch(f"y = {y} is negative real; complex branch not valid there")
    if branch == "t" and not neg_real:
        raise BranchMismatch(f"y = {y} is not negative real; t-branch not applicable")

    if neg_real:
        t = -y.real
        sqrt_y = complex(0.0, math.sqrt(t))
        at_pole = abs(y.real + 1.0) <= 1e-15
        x = complex("nan") if at_pole else complex((y.real - 1.0) / (y.real + 1.0))
        return DimensionlessState(
            y=y, rho=rho, x=x, sqrt_y=sqrt_y,
            branch="negative-real-y", t=t,
            branch_ambiguous=(branch == "auto"),
        )
    sqrt_y = cmath.sqrt(y)
    if sqrt_y.imag < 0.0:
        sqrt_y = -sqrt_y
    x = (y - 1.0) / (y + 1.0)
    return DimensionlessState(y=y, rho=rho, x=x, sqrt_y=sqrt_y, branch="complex-y")


def from_dimensionless(sys: PhysicalSystem, y) -> complex:
    """Inverse of to_dimensionless: z = y gamma^2 hbar^2 / (2 mu)."""
    return complex(y) * sys.energy_scale()


def reduced_state(y, rho, branch: str = "auto") -> DimensionlessState:
    """Build a DimensionlessState directly from (y, rho), bypassing units."""
    if not (isinstance(rho, (int, float)) and math.isfinite(rho) and rho > 0):
        raise DomainError(f"rho must be positive finite, got {rho!r}")
    sys = PhysicalSystem(alpha=rho, mu=1.0, hbar=1.0, gamma=1.0)
    return to_dimensionless(sys, complex(y), branch=branch)


def hydrogen_level(n: int, l: int, E_b) -> float:
    """Bound-state energy E_b / (n + l + 1)^2 of the attractive spectrum."""
    if n < 0 or l < 0:
        raise DomainError(f"n, l must be non-negative, got {(n, l)}")
    if not E_b > 0:
        raise DomainError(f"E_b must be positive, got {E_b!r}")
    return E_b / (n + l + 1) ** 2


def ground_state_energy(sys: PhysicalSystem) -> float:
    """E_b = mu alpha^2 / (2 hbar^2), the |sigma| = 1 ground-state scale.

    Exposed as a convenience; the defining identity is the standard
    Coulomb bound-state result, used to anchor the pole-scan expectations.
    """
    return sys.mu * sys.alpha**2 / (2.0 * sys.hbar**2)


def special_gamma(sys: PhysicalSystem, E) -> float:
    """The gamma making y = -1 at z = -E: gamma^2 = 2 mu E / hbar^2."""
    if not E > 0:
        raise DomainError(f"E must be positive for the special scale, got {E!r}")
    return math.sqrt(2.0 * sys.mu * E) / sys.hbar
