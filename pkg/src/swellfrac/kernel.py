"""Fractional damping kernel: direct operators and their diffusive realization.

The weighted Caputo derivative of order alpha (kernel (t-s)**(-alpha) *
exp(-kappa*(t-s))) admits an exact realization as an integral over an
auxiliary field phi(y, t) obeying a one-parameter family of damped ODEs
driven by the input signal.  This module provides

* the log-substitution quadrature grid for the y-integrals,
* the closed-form frequency identity used to calibrate that grid,
* direct product-integration evaluation of the weighted Caputo
  derivative and weighted Riemann-Liouville integral (the brute-force
  oracles), and
* the time-domain diffusive realization with exact exponential stepping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np
from scipy.special import gamma as gamma_fn

from .model import diffusive_weight

#: (u_min, u_max, step) of the wide grid used for calibration checks.
#: The substituted integrand decays like exp(-2*alpha*|u|) on the left
#: and exp(-2*(1-alpha)*|u|) on the right, so +-80 keeps the truncation
#: tail below 1e-7 relative even at alpha = 0.1 or 0.9.
CALIBRATION_GRID = (-80.0, 80.0, 0.05)

#: Smaller grid for time stepping: nodes with y**2 + kappa >> 1/dt are
#: slaved to their quasi-static values and contribute below tolerance.
DYNAMICS_GRID = (-8.0, 8.0, 0.1)


@dataclass(frozen=True, eq=False)
class DiffusiveGrid:
    """Quadrature nodes/weights for integrals over y in (0, inf).

    Built from the substitution y = exp(u) with a trapezoid rule in u,
    so node j carries weight step*exp(u_j) (halved at the ends).  Only
    the positive half-line is stored; integrands of interest are even,
    and full-line values are twice the half-line sum.
    """

    nodes: np.ndarray
    weights: np.ndarray
    u_min: float
    u_max: float
    step: float

    def __post_init__(self):
        if self.nodes.size:
            if np.any(self.nodes <= 0):
                raise ValueError("grid nodes must be strictly positive")
            if np.any(np.diff(self.nodes) <= 0):
                raise ValueError("grid nodes must be strictly increasing")
            if np.any(self.weights <= 0):
                raise ValueError("grid weights must be strictly positive")

    @property
    def size(self) -> int:
        return int(self.nodes.size)

    def integrate_half(self, values: np.ndarray):
        """Quadrature of f over (0, inf) given f at the nodes."""
        return values @ self.weights

    def integrate_even(self, values: np.ndarray):
        """Quadrature of an even f over the whole line."""
        return 2.0 * self.integrate_half(values)


def build_grid(alpha: float, kappa: float,
               u_min: float = CALIBRATION_GRID[0],
               u_max: float = CALIBRATION_GRID[1],
               step: float = CALIBRATION_GRID[2]) -> DiffusiveGrid:
    """Trapezoid-in-u grid with nodes y = exp(u) on [u_min, u_max].

    alpha and kappa are validated here (the weight needs 0 < alpha < 1,
    kappa >= 0) but do not enter the node layout, so one grid serves any
    frequency argument.  An empty grid is returned when u_min >= u_max.
    """
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0,1)")
    if kappa < 0:
        raise ValueError("kappa >= 0 required")
    if step <= 0:
        raise ValueError("step must be positive")
    if u_min >= u_max:
        empty = np.empty(0)
        return DiffusiveGrid(empty, empty.copy(), u_min, u_max, step)
    n_cells = max(1, int(round((u_max - u_min) / step)))
    u = np.linspace(u_min, u_max, n_cells + 1)
    eff_step = (u_max - u_min) / n_cells
    nodes = np.exp(u)
    weights = eff_step * nodes
    weights[0] *= 0.5
    weights[-1] *= 0.5
    return DiffusiveGrid(nodes, weights, u_min, u_max, eff_step)


def shifted_power(base, exponent: float):
    """Principal-branch power of kappa + lambda, cut along (-inf, 0]."""
    w = complex(base)
    if w.imag == 0.0 and w.real <= 0.0:
        raise ValueError(
            f"argument {w} lies on the branch cut (-inf, 0]; "
            "the principal power is undefined there"
        )
    return w ** exponent


def exact_weight_integral(alpha: float, kappa: float, lam: complex) -> complex:
    """Closed form of the full-line integral of mu(y)**2/(y**2+kappa+lam).

    Equals pi/sin(alpha*pi) * (kappa+lam)**(alpha-1) on the principal
    branch, for kappa+lam off the cut (-inf, 0].
    """
    return math.pi / math.sin(alpha * math.pi) * shifted_power(kappa + lam, alpha - 1.0)


class WeightCheck(NamedTuple):
    numeric: complex
    exact: complex
    rel_err: float


def check_weight_integral(grid: DiffusiveGrid, alpha: float, kappa: float,
                          lam: complex) -> WeightCheck:
    """Compare the grid quadrature against the closed-form weight integral.

    This is the calibration invariant of the package: a healthy default
    grid reproduces the closed form to better than 1e-6 relative for all
    alpha in (0.1, 0.9), moderate kappa, and lam off the cut.
    """
    exact = exact_weight_integral(alpha, kappa, lam)
    mu = diffusive_weight(grid.nodes, alpha)
    numeric = grid.integrate_even(mu**2 / (grid.nodes**2 + kappa + lam))
    rel_err = abs(numeric - exact) / abs(exact)
    return WeightCheck(numeric, exact, float(rel_err))


@dataclass(frozen=True, eq=False)
class SignalSamples:
    """A real signal sampled on a uniform, increasing time grid."""

    times: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if t.size < 2:
            raise ValueError("need at least 2 samples")
        if t.shape != v.shape:
            raise ValueError("times and values must have equal shapes")
        steps = np.diff(t)
        if np.any(steps <= 0):
            raise ValueError("times must be strictly increasing")
        if not np.allclose(steps, steps[0], rtol=1e-9, atol=0.0):
            raise ValueError("times must be uniformly spaced")
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "values", v)

    @property
    def dt(self) -> float:
        return float(self.times[1] - self.times[0])

    @classmethod
    def from_function(cls, fn: Callable, t_end: float, dt: float,
                      t_start: float = 0.0) -> "SignalSamples":
        n_steps = int(round((t_end - t_start) / dt))
        t = t_start + dt * np.arange(n_steps + 1)
        return cls(t, np.asarray(fn(t), dtype=float))

    def index_of(self, t: float) -> int:
        """Index of sample time t; raises if t is off the grid."""
        k = int(round((t - self.times[0]) / self.dt))
        if k < 0 or k >= self.times.size or abs(self.times[k] - t) > 1e-9 * max(self.dt, abs(t), 1.0):
            raise ValueError(f"t = {t} is not on the sample grid")
        return k


def caputo_derivative(f: SignalSamples, alpha: float, kappa: float, t: float) -> float:
    """Weighted Caputo derivative of order alpha at a grid time t.

    Product-integration oracle: the derivative of f is taken piecewise
    constant from the samples, the weakly singular factor (t-s)**(-alpha)
    is integrated exactly on each subinterval, and the exponential weight
    exp(-kappa*(t-s)) is frozen at the subinterval midpoint (first-order
    accurate, adequate for an oracle).
    """
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0,1)")
    if abs(f.times[0]) > 1e-12:
        raise ValueError("samples must start at t = 0")
    m = f.index_of(t)
    if m == 0:
        return 0.0
    dt = f.dt
    t_lo = f.times[:m]
    t_hi = f.times[1:m + 1]
    slopes = np.diff(f.values[:m + 1]) / dt
    heads = (t - t_lo) ** (1.0 - alpha)
    tails = (t - t_hi) ** (1.0 - alpha)
    mids = t - 0.5 * (t_lo + t_hi)
    total = np.sum(slopes * np.exp(-kappa * mids) * (heads - tails)) / (1.0 - alpha)
    return float(total / gamma_fn(1.0 - alpha))


def fractional_integral(f: SignalSamples, order: float, kappa: float, t: float) -> float:
    """Weighted Riemann-Liouville integral of the given order at grid time t.

    Same product-integration scheme as :func:`caputo_derivative`, with f
    itself taken piecewise linear: (t-s)**(order-1) is integrated exactly
    against the linear interpolant on each subinterval.
    """
    if not 0 < order <= 1:
        raise ValueError("order must lie in (0,1]")
    if abs(f.times[0]) > 1e-12:
        raise ValueError("samples must start at t = 0")
    m = f.index_of(t)
    if m == 0:
        return 0.0
    dt = f.dt
    t_lo = f.times[:m]
    t_hi = f.times[1:m + 1]
    f_lo = f.values[:m]
    slopes = np.diff(f.values[:m + 1]) / dt
    b = t - t_lo          # larger kernel argument
    a = t - t_hi          # smaller kernel argument (0 on the last cell)
    mids = t - 0.5 * (t_lo + t_hi)
    # integral of (f_lo + slope*(b - tau)) * tau**(order-1) over [a, b]
    moment0 = (b**order - a**order) / order
    moment1 = (b**(order + 1.0) - a**(order + 1.0)) / (order + 1.0)
    cell = (f_lo + slopes * b) * moment0 - slopes * moment1
    total = np.sum(np.exp(-kappa * mids) * cell)
    return float(total / gamma_fn(order))


def _expm_coeffs(x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """decay = exp(-x) and the two source moments of the exponential step.

    For a cell of length h with rate a (x = a*h) and a linear source
    c0 + c1*s, the exact update needs h*A(x) with A = (1-exp(-x))/x and
    h**2*B(x) with B = (x-1+exp(-x))/x**2.  Series below x = 1e-3 avoid
    the subtractive cancellation in B.
    """
    decay = np.exp(-x)
    small = x < 1e-3
    xs = np.where(small, 1.0, x)  # placeholder to keep divisions finite
    coeff_a = np.where(small, 1.0 - x / 2.0 + x**2 / 6.0 - x**3 / 24.0,
                       -np.expm1(-xs) / xs)
    coeff_b = np.where(small, 0.5 - x / 6.0 + x**2 / 24.0 - x**3 / 120.0,
                       (xs - 1.0 + decay) / xs**2)
    return decay, coeff_a, coeff_b


def diffusive_realize(u_signal: SignalSamples, grid: DiffusiveGrid,
                      alpha: float, kappa: float) -> SignalSamples:
    """Run the diffusive ODE field driven by the input and read out its integral.

    Each node obeys phi' = -(y**2+kappa)*phi + U(t)*mu(y) from phi(0) = 0;
    the output is sin(alpha*pi)/pi times the full-line y-integral of
    mu*phi.  Stepping uses the exact exponential propagator with the
    input taken piecewise linear between samples; this is mandatory
    because the rates y**2+kappa span many orders of magnitude.

    Feeding the derivative of a signal f reproduces the weighted Caputo
    derivative of f (see :func:`caputo_derivative`), and a unit step
    input relaxes to kappa**(alpha-1) for kappa > 0.
    """
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0,1)")
    if kappa < 0:
        raise ValueError("kappa >= 0 required")
    dt = u_signal.dt
    mu = diffusive_weight(grid.nodes, alpha)
    rates = grid.nodes**2 + kappa
    decay, coeff_a, coeff_b = _expm_coeffs(rates * dt)
    gain = math.sin(alpha * math.pi) / math.pi
    readout = 2.0 * gain * grid.weights * mu

    u_vals = u_signal.values
    phi = np.zeros(grid.size)
    out = np.empty_like(u_vals)
    out[0] = 0.0
    for k in range(u_vals.size - 1):
        du = u_vals[k + 1] - u_vals[k]
        phi = decay * phi + mu * dt * (u_vals[k] * coeff_a + du * coeff_b)
        out[k + 1] = readout @ phi
    return SignalSamples(u_signal.times.copy(), out)
