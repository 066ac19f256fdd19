"""Adaptive explicit Runge-Kutta 5(4) solver for small complex linear systems.

Dormand-Prince coefficients (seven stages, first-same-as-last), propagating
the fifth-order solution with the embedded fourth-order difference as the
local error estimate.  Two departures from general-purpose library solvers,
both required by how trajectories are consumed here:

* Steps are clamped so that every requested output point is hit exactly; no
  dense-output interpolation is performed.
* The error norm is the per-component maximum of |err| / (atol + rtol |y|),
  with the real and imaginary parts of complex states treated as separate
  components.

The step controller is the elementary one: factor = 0.9 * ratio^(-1/5),
clipped to [0.2, 5].  Integration is deterministic: identical inputs produce
bit-identical trajectories.

References
----------
Dormand, J. R. & Prince, P. J. (1980). "A family of embedded Runge-Kutta
formulae". J. Comput. Appl. Math. 6(1), 19-26.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "IvpConfig",
    "Trajectory",
    "IntegrationError",
    "StepUnderflowError",
    "NonFiniteStateError",
    "dopri5_step",
    "integrate",
]

MIN_STEP = 1e-15

# Butcher tableau ---------------------------------------------------------

_C2, _C3, _C4, _C5 = 1 / 5, 3 / 10, 4 / 5, 8 / 9

_A21 = 1 / 5
_A31, _A32 = 3 / 40, 9 / 40
_A41, _A42, _A43 = 44 / 45, -56 / 15, 32 / 9
_A51, _A52, _A53, _A54 = 19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729
_A61, _A62, _A63, _A64, _A65 = 9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656

# fifth-order weights (b2 = 0); stage 7 is evaluated at the new solution
_B1, _B3, _B4, _B5, _B6 = 35 / 384, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84

# fifth-minus-fourth-order weights for the error estimate
_E1, _E3, _E4, _E5, _E6, _E7 = (
    71 / 57600,
    -71 / 16695,
    71 / 1920,
    -17253 / 339200,
    22 / 525,
    -1 / 40,
)


class IntegrationError(RuntimeError):
    """Base class for failures inside the initial-value solver."""


class StepUnderflowError(IntegrationError):
    """The error control demanded a step below the representable minimum."""


class NonFiniteStateError(IntegrationError):
    """A state component became NaN or infinite."""


@dataclass(frozen=True)
class IvpConfig:
    """Solver tolerances and step limits (times in the same units as the grid)."""

    atol: float = 1e-12
    rtol: float = 1e-12
    max_step: float = 0.01
    initial_step: float = 1e-6

    def __post_init__(self):
        for name in ("atol", "rtol", "max_step", "initial_step"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be strictly positive")
        if self.atol > 1e-3 or self.rtol > 1e-3:
            raise ValueError("atol and rtol must be <= 1e-3")


@dataclass(frozen=True)
class Trajectory:
    """States at the requested grid points plus step-count diagnostics."""

    grid: np.ndarray
    states: np.ndarray
    steps_taken: int
    rejected_steps: int


def dopri5_step(rhs: Callable, t: float, y: np.ndarray, h: float, k1: np.ndarray | None = None):
    """One Dormand-Prince step of size h from (t, y).

    Returns (y_new, error_estimate, k_last); k_last = rhs(t + h, y_new) can
    be fed back as k1 of the following step (first-same-as-last).  Exposed
    separately so fixed-step convergence studies can drive it directly.
    """
    if k1 is None:
        k1 = rhs(t, y)
    k2 = rhs(t + _C2 * h, y + h * (_A21 * k1))
    k3 = rhs(t + _C3 * h, y + h * (_A31 * k1 + _A32 * k2))
    k4 = rhs(t + _C4 * h, y + h * (_A41 * k1 + _A42 * k2 + _A43 * k3))
    k5 = rhs(t + _C5 * h, y + h * (_A51 * k1 + _A52 * k2 + _A53 * k3 + _A54 * k4))
    k6 = rhs(t + h, y + h * (_A61 * k1 + _A62 * k2 + _A63 * k3 + _A64 * k4 + _A65 * k5))
    y_new = y + h * (_B1 * k1 + _B3 * k3 + _B4 * k4 + _B5 * k5 + _B6 * k6)
    k7 = rhs(t + h, y_new)
    err = h * (_E1 * k1 + _E3 * k3 + _E4 * k4 + _E5 * k5 + _E6 * k6 + _E7 * k7)
    return y_new, err, k7


def _components(y: np.ndarray) -> np.ndarray:
    if np.iscomplexobj(y):
        return np.concatenate((np.abs(y.real), np.abs(y.imag)))
    return np.abs(y)


def _error_ratio(err, y_old, y_new, atol, rtol):
    scale = atol + rtol * np.maximum(_components(y_old), _components(y_new))
    return float(np.max(_components(err) / scale))


def integrate(rhs: Callable, y0: Sequence, grid: Sequence[float],
              cfg: IvpConfig | None = None) -> Trajectory:
    """Integrate y' = rhs(t, y) from grid[0] = 0, recording y at every grid point.

    The grid must be strictly increasing within [0, 1] and start at 0.  Steps
    are clamped so each grid point is landed on exactly.
    """
    if cfg is None:
        cfg = IvpConfig()
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 1:
        raise ValueError("grid must be a one-dimensional sequence of times")
    if grid[0] != 0.0:
        raise ValueError(f"grid must start at 0, got {grid[0]!r}")
    if grid.size > 1 and not np.all(np.diff(grid) > 0.0):
        raise ValueError("grid must be strictly increasing")
    if grid[-1] > 1.0:
        raise ValueError(f"grid must lie within [0, 1], got endpoint {grid[-1]!r}")

    y = np.asarray(y0, dtype=complex).copy()
    if y.ndim != 1 or y.size < 1:
        raise ValueError("initial state must be a one-dimensional vector")

    states = np.empty((grid.size, y.size), dtype=complex)
    states[0] = y

    t = 0.0
    h_natural = min(cfg.initial_step, cfg.max_step)
    k1 = np.asarray(rhs(t, y), dtype=complex)
    steps_taken = 0
    rejected = 0

    for index in range(1, grid.size):
        target = float(grid[index])
        while t < target:
            h = min(h_natural, cfg.max_step, target - t)
            if h < MIN_STEP:
                raise StepUnderflowError(f"step size underflow at t={t!r} (required {h!r})")
            clamped = h < h_natural
            y_new, err, k_last = dopri5_step(rhs, t, y, h, k1)
            if not np.all(np.isfinite(y_new.view(float))):
                raise NonFiniteStateError(f"non-finite state component at t={t + h!r}")
            ratio = _error_ratio(err, y, y_new, cfg.atol, cfg.rtol)
            if np.isnan(ratio):
                raise NonFiniteStateError(f"non-finite error estimate at t={t + h!r}")
            if ratio == 0.0:
                factor = 5.0
            else:
                factor = min(5.0, max(0.2, 0.9 * ratio ** -0.2))
            if ratio <= 1.0:
                t = target if h >= target - t else t + h
                y = y_new
                k1 = k_last
                steps_taken += 1
                # A grid clamp says nothing about the accuracy-limited step,
                # so never let it shrink the remembered step size.
                h_natural = max(h_natural, h * factor) if clamped else h * factor
            else:
                rejected += 1
                h_natural = h * factor
            h_natural = min(h_natural, cfg.max_step)
        states[index] = y

    return Trajectory(grid=grid, states=states, steps_taken=steps_taken, rejected_steps=rejected)
