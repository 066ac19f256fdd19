"""Exact truncated-evolution observables from the reduced two-state system.

For the search Hamiltonian the full 2^n Schroedinger dynamics closes on two
complex quantities: the marked amplitude psi_m = <m|psi> and the amplitude
sum psi_bar = sum_j psi_j (so <phi|psi> = psi_bar / sqrt(N)).  Writing
chi = (psi_m, psi_bar), the exact evolution in dimensionless time tau is

    chi'(tau) = -i T M(tau) chi,   M = [[1 - s, -(1 - s)/N],
                                        [  -s,        s   ]],

with initial condition chi(0) = (1/sqrt(N), sqrt(N)) from the uniform state.
At each tau the observables are the marked probability p = |psi_m|^2 and the
error eps = sqrt(1 - |a|^2), where a is the overlap with the instantaneous
ground state,

    a = [alpha - beta / sqrt(N-1)] psi_m + beta / sqrt(N-1) psi_bar.

Within the invariant subspace, sqrt(1 - |a|^2) equals the magnitude of the
overlap with the instantaneous excited state once the state is normalized,
and that is how eps is evaluated: near the troughs where eps approaches
zero, the square-root form would amplify the integrator's ~1e-10 norm drift
into ~1e-5 of spurious error, while the excited-state overlap degrades only
linearly with state error.  The reported norm residual is the uncorrected
drift.

`full_simulate` integrates the untruncated 2^n-dimensional system instead
and computes the same observables, as an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .integrator import IvpConfig, integrate
from .schedules import ScheduleKind, duration, s_of_tau, schedule_fn
from .spectral import SearchInstance, spectral_point

__all__ = [
    "TrajectoryPoint",
    "reduced_rhs",
    "evolve_reduced",
    "simulate",
    "simulate_on_grid",
    "marked_probability",
    "full_simulate",
]

DEFAULT_GRID_POINTS = 2001

# Memory/time guard for the full 2^n-dimensional cross-check.
FULL_MAX_QUBITS = 12


@dataclass(frozen=True)
class TrajectoryPoint:
    """Observables sampled at one dimensionless time along an evolution."""

    tau: float
    s: float
    p: float
    eps_exact: float
    norm_residual: float


def reduced_rhs(tau: float, chi, kind: ScheduleKind, N: float, T: float) -> np.ndarray:
    """Right-hand side -i T M(tau) chi of the reduced system."""
    s = s_of_tau(kind, tau, N)
    marked, total = complex(chi[0]), complex(chi[1])
    off = 1.0 - s
    return np.array(
        [
            -1j * T * (off * marked - off / N * total),
            -1j * T * (-s * marked + s * total),
        ]
    )


def _reduced_rhs_fn(kind: ScheduleKind, N: float, T: float):
    s_at = schedule_fn(kind, N)
    scale = -1j * T

    def rhs(tau, chi):
        s = s_at(tau)
        off = 1.0 - s
        marked = chi[0]
        total = chi[1]
        return np.array(
            [scale * (off * marked - off / N * total), scale * (s * total - s * marked)]
        )

    return rhs


def evolve_reduced(kind: ScheduleKind, N: float, T: float, grid,
                   cfg: IvpConfig | None = None) -> np.ndarray:
    """Integrate the reduced system over `grid`; returns states of shape (len(grid), 2)."""
    if not N >= 2.0:
        raise ValueError(f"domain size must be >= 2, got {N!r}")
    if not T > 0.0:
        raise ValueError(f"duration must be positive, got {T!r}")
    chi0 = np.array([1.0 / math.sqrt(N), math.sqrt(N)], dtype=complex)
    return integrate(_reduced_rhs_fn(kind, N, T), chi0, grid, cfg).states


def _observables(kind: ScheduleKind, N: float, tau: float,
                 marked: complex, total: complex,
                 norm_sq: float | None = None) -> TrajectoryPoint:
    s = s_of_tau(kind, tau, N)
    point = spectral_point(s, N)
    unmarked = (total - marked) / math.sqrt(N - 1.0)
    excited_overlap = -point.amp_unmarked * marked + point.amp_marked * unmarked
    if norm_sq is None:
        norm_sq = abs(marked) ** 2 + abs(unmarked) ** 2
    eps_exact = min(1.0, abs(excited_overlap) / math.sqrt(norm_sq))
    return TrajectoryPoint(
        tau=tau,
        s=s,
        p=float(abs(marked) ** 2),
        eps_exact=float(eps_exact),
        norm_residual=float(norm_sq - 1.0),
    )


def simulate_on_grid(kind: ScheduleKind, N: float, T: float, grid,
                     cfg: IvpConfig | None = None) -> list[TrajectoryPoint]:
    """Reduced evolution plus observables at every point of an arbitrary grid."""
    states = evolve_reduced(kind, N, T, grid, cfg)
    return [
        _observables(kind, N, float(tau), state[0], state[1])
        for tau, state in zip(grid, states)
    ]


def simulate(kind: ScheduleKind, instance: SearchInstance,
             grid_points: int = DEFAULT_GRID_POINTS,
             cfg: IvpConfig | None = None) -> list[TrajectoryPoint]:
    """Exact observables on a uniform tau grid over [0, 1] for one schedule."""
    if grid_points < 2:
        raise ValueError(f"grid must have at least 2 points, got {grid_points!r}")
    N = instance.N
    T = duration(kind, N, instance.eps)
    return simulate_on_grid(kind, N, T, np.linspace(0.0, 1.0, grid_points), cfg)


def marked_probability(kind: ScheduleKind, N: float, T: float, tau: float,
                       cfg: IvpConfig | None = None) -> float:
    """Exact marked probability |psi_m(tau)|^2 after evolving from tau = 0."""
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau!r}")
    if tau == 0.0:
        return 1.0 / N
    states = evolve_reduced(kind, N, T, [0.0, tau], cfg)
    return float(abs(states[-1, 0]) ** 2)


def full_simulate(n: int, m: int = 0, kind: ScheduleKind = ScheduleKind.PROPOSED,
                  eps: float = 0.02, grid_points: int = DEFAULT_GRID_POINTS,
                  cfg: IvpConfig | None = None) -> list[TrajectoryPoint]:
    """Integrate the full 2^n-dimensional system and compute the same observables.

    The norm residual reported here is the total squared norm minus one,
    which the exact (unitary) flow conserves.
    """
    if not 1 <= n <= FULL_MAX_QUBITS:
        raise ValueError(f"full simulation limited to 1 <= n <= {FULL_MAX_QUBITS}, got {n!r}")
    size = 2 ** n
    if not 0 <= m < size:
        raise ValueError(f"marked index must lie in [0, {size}), got {m!r}")
    if grid_points < 2:
        raise ValueError(f"grid must have at least 2 points, got {grid_points!r}")

    N = float(size)
    T = duration(kind, N, eps)
    s_at = schedule_fn(kind, N)
    scale = -1j * T

    def rhs(tau, psi):
        s = s_at(tau)
        # H psi = psi - (1-s)/N * psi_bar - s psi_m e_m, using H = I - (1-s)|phi><phi| - s|m><m|
        h_psi = psi - ((1.0 - s) / N) * psi.sum()
        h_psi[m] -= s * psi[m]
        return scale * h_psi

    psi0 = np.full(size, 1.0 / math.sqrt(N), dtype=complex)
    grid = np.linspace(0.0, 1.0, grid_points)
    trajectory = integrate(rhs, psi0, grid, cfg)

    points = []
    for tau, psi in zip(grid, trajectory.states):
        norm_sq = float(psi.real @ psi.real + psi.imag @ psi.imag)
        points.append(
            _observables(kind, N, float(tau), complex(psi[m]), complex(psi.sum()), norm_sq)
        )
    return points
