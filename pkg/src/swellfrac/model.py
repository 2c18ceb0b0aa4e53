"""Model parameters and closed-form constants for the damped swelling system.

The system couples a fluid displacement z and a solid displacement u on
(0, L) through a symmetric tension matrix [[a1, a2], [a2, a3]], with a
single fractional-in-time damping of order alpha (exponential weight
kappa) acting on the fluid equation.  Everything downstream (quadrature,
modal simulation, root finding, frequency probes) pulls its constants
from here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PhysicalParams:
    """The nine model constants.

    Attributes
    ----------
    rho_z, rho_u : float
        Densities of the fluid and solid constituents (both > 0).
    a1, a3 : float
        Self-tension coefficients (both > 0).
    a2 : float
        Coupling tension; real and nonzero, with a1*a3 > a2**2 so the
        tension matrix is positive definite.
    gamma : float
        Damping gain (>= 0; the conservative limit gamma = 0 is allowed
        as the calibration case).
    alpha : float
        Fractional order, strictly inside (0, 1).
    kappa : float
        Exponential weight of the damping kernel (>= 0).  Spectral and
        decay statements require kappa > 0; kappa = 0 only simulates.
    length : float
        Domain length L > 0.
    """

    rho_z: float
    rho_u: float
    a1: float
    a2: float
    a3: float
    gamma: float
    alpha: float
    kappa: float
    length: float


#: Running example used throughout the test-suite and as CLI default.
DEFAULT_PARAMS = PhysicalParams(
    rho_z=1.0, rho_u=1.0, a1=2.0, a2=1.0, a3=2.0,
    gamma=1.0, alpha=0.5, kappa=1.0, length=math.pi,
)


@dataclass(frozen=True)
class ParamCheck:
    name: str
    passed: bool
    message: str


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[ParamCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[str]:
        return [c.message for c in self.checks if not c.passed]


def validate_params(p: PhysicalParams) -> ValidationReport:
    """Check every parameter invariant; report-style, never raises."""
    checks = [
        ("rho_z_positive", p.rho_z > 0, "rho_z > 0 required"),
        ("rho_u_positive", p.rho_u > 0, "rho_u > 0 required"),
        ("a1_positive", p.a1 > 0, "a1 > 0 required"),
        ("a3_positive", p.a3 > 0, "a3 > 0 required"),
        ("a2_nonzero", p.a2 != 0, "a2 != 0 required"),
        (
            "tension_positive_definite",
            p.a1 * p.a3 > p.a2**2,
            "a1*a3 > a2^2 required (positive definite tension matrix)",
        ),
        ("alpha_in_unit_interval", 0 < p.alpha < 1, "alpha must lie in (0,1)"),
        ("kappa_nonnegative", p.kappa >= 0, "kappa >= 0 required"),
        ("gamma_nonnegative", p.gamma >= 0, "gamma >= 0 required"),
        ("length_positive", p.length > 0, "length > 0 required"),
    ]
    return ValidationReport(tuple(ParamCheck(n, bool(ok), msg) for n, ok, msg in checks))


def require_valid(p: PhysicalParams) -> None:
    """Raise ValueError with every violated inequality listed."""
    report = validate_params(p)
    if not report.ok:
        raise ValueError("invalid parameters: " + "; ".join(report.failures))


def diffusive_gain(gamma: float, alpha: float) -> float:
    """Normalization gamma*sin(alpha*pi)/pi of the diffusive realization."""
    return gamma * math.sin(alpha * math.pi) / math.pi


def diffusive_weight(y, alpha: float):
    """Power weight |y|**((2*alpha-1)/2) of the diffusive representation.

    Even in y.  For alpha <= 1/2 the weight is singular at y = 0
    (integrably so); evaluation there is a domain error because no
    quadrature node may sit at the origin.
    """
    y = np.asarray(y, dtype=float)
    exponent = (2.0 * alpha - 1.0) / 2.0
    if exponent <= 0 and np.any(y == 0.0):
        raise ValueError(
            "diffusive weight is singular at y = 0 for alpha <= 1/2; "
            "keep quadrature nodes away from the origin"
        )
    out = np.abs(y) ** exponent
    return out if out.ndim else float(out)


def mode_frequency(n, length: float):
    """Frequency n*pi/L of the n-th Dirichlet sine mode (n >= 1)."""
    n_arr = np.asarray(n)
    if np.any(n_arr < 1):
        raise ValueError("mode index must be >= 1")
    out = n_arr * (math.pi / length)
    return out if out.ndim else float(out)


def limit_speeds(p: PhysicalParams) -> tuple[float, float]:
    """Positive roots (slow, fast) of the undamped limit quartic.

    The squared speeds are the two roots of x**2 - m*x + p = 0 with
    m = a1/rho_z + a3/rho_u and p = (a1*a3 - a2**2)/(rho_z*rho_u); the
    discriminant equals (a1/rho_z - a3/rho_u)**2 + 4*a2**2/(rho_z*rho_u)
    and is strictly positive whenever a2 != 0, so the speeds are real
    and distinct.
    """
    m = p.a1 / p.rho_z + p.a3 / p.rho_u
    prod = (p.a1 * p.a3 - p.a2**2) / (p.rho_z * p.rho_u)
    disc = math.sqrt(m * m - 4.0 * prod)
    sq_fast = 0.5 * (m + disc)
    sq_slow = 0.5 * (m - disc)
    return math.sqrt(sq_slow), math.sqrt(sq_fast)


@dataclass(frozen=True)
class DerivedConstants:
    """Constants derived from the physical parameters.

    gain          -- gamma*sin(alpha*pi)/pi, the diffusive normalization
    speed_sq_sum  -- a1/rho_z + a3/rho_u (= slow**2 + fast**2)
    speed_sq_prod -- (a1*a3 - a2**2)/(rho_z*rho_u) (= slow**2 * fast**2)
    slow_speed, fast_speed -- the two limit wave speeds
    """

    gain: float
    speed_sq_sum: float
    speed_sq_prod: float
    slow_speed: float
    fast_speed: float
    length: float

    @classmethod
    def from_params(cls, p: PhysicalParams) -> "DerivedConstants":
        slow, fast = limit_speeds(p)
        return cls(
            gain=diffusive_gain(p.gamma, p.alpha),
            speed_sq_sum=p.a1 / p.rho_z + p.a3 / p.rho_u,
            speed_sq_prod=(p.a1 * p.a3 - p.a2**2) / (p.rho_z * p.rho_u),
            slow_speed=slow,
            fast_speed=fast,
            length=p.length,
        )

    def mode_freq(self, n):
        return mode_frequency(n, self.length)
