"""Interpolation schedules for adiabatic unstructured search.

Three schedules s(tau) mapping dimensionless time tau = t/T in [0, 1] to the
interpolation parameter s in [0, 1], each paired with the total duration T
that saturates (or satisfies) the adiabatic condition at diabaticity eps:

    proposed   T = 2 sqrt(N-1) / eps
               s(tau) = (1/2) [1 + (2 tau - 1) / sqrt(1 + 4(N-1) tau (1-tau))]
    original   T = (2/eps) N arctan(sqrt(N-1)) / sqrt(N-1)
               s(tau) = (1/2) [1 + tan((2 tau - 1) arctan sqrt(N-1)) / sqrt(N-1)]
    linear     T = 2 N / eps
               s(tau) = tau

The proposed schedule drives fastest at the endpoints and, in the errorless
limit, yields a marked probability growing in direct proportion to time; the
original schedule reproduces the Grover probability curve exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .spectral import SearchInstance, ideal_marked_probability, invert_ideal_probability

__all__ = [
    "ScheduleKind",
    "ScheduleSpec",
    "duration",
    "s_of_tau",
    "tau_of_s",
    "ideal_q_of_tau",
    "ideal_tau_of_q",
    "schedule_fn",
]


class ScheduleKind(str, Enum):
    PROPOSED = "proposed"
    ORIGINAL = "original"
    LINEAR = "linear"


def _check_unit(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {value!r}")


def _check_params(N: float, eps: float) -> None:
    if not N >= 2.0:
        raise ValueError(f"domain size must be >= 2, got {N!r}")
    if not 0.0 < eps < 1.0:
        raise ValueError(f"diabaticity must lie strictly in (0, 1), got {eps!r}")


def duration(kind: ScheduleKind, N: float, eps: float) -> float:
    """Total evolution time T for the given schedule, domain size, and diabaticity."""
    _check_params(N, eps)
    if kind is ScheduleKind.PROPOSED:
        return 2.0 * math.sqrt(N - 1.0) / eps
    if kind is ScheduleKind.ORIGINAL:
        root = math.sqrt(N - 1.0)
        return 2.0 / eps * N * math.atan(root) / root
    return 2.0 * N / eps


def s_of_tau(kind: ScheduleKind, tau: float, N: float) -> float:
    """Scheduled time s at dimensionless time tau; strictly increasing, s(0)=0, s(1)=1."""
    _check_unit("tau", tau)
    if not N >= 2.0:
        raise ValueError(f"domain size must be >= 2, got {N!r}")
    return schedule_fn(kind, N)(tau)


def tau_of_s(kind: ScheduleKind, s: float, N: float) -> float:
    """Exact functional inverse of `s_of_tau` for the same kind and N."""
    _check_unit("s", s)
    if not N >= 2.0:
        raise ValueError(f"domain size must be >= 2, got {N!r}")
    if kind is ScheduleKind.PROPOSED:
        # (2s-1)/g(s) with the cancellation-free radicand of spectral.gap
        radicand = (1.0 - 2.0 * s) ** 2 + 4.0 * s * (1.0 - s) / N
        tau = 0.5 * (1.0 + (2.0 * s - 1.0) / math.sqrt(radicand))
    elif kind is ScheduleKind.ORIGINAL:
        root = math.sqrt(N - 1.0)
        tau = 0.5 * (1.0 + math.atan((2.0 * s - 1.0) * root) / math.atan(root))
    else:
        tau = s
    return min(1.0, max(0.0, tau))


def ideal_q_of_tau(kind: ScheduleKind, tau: float, N: float) -> float:
    """Errorless marked probability at tau, i.e. that of the instantaneous ground state."""
    _check_unit("tau", tau)
    if not N >= 2.0:
        raise ValueError(f"domain size must be >= 2, got {N!r}")
    if kind is ScheduleKind.PROPOSED:
        q = (1.0 + 2.0 * (N - 1.0) * tau
             + math.sqrt(1.0 + 4.0 * (N - 1.0) * tau * (1.0 - tau))) / (2.0 * N)
        return min(1.0, q)
    if kind is ScheduleKind.ORIGINAL:
        return math.cos((1.0 - tau) * math.acos(1.0 / math.sqrt(N))) ** 2
    return ideal_marked_probability(tau, N)


def ideal_tau_of_q(kind: ScheduleKind, q: float, N: float) -> float:
    """Dimensionless time at which the errorless marked probability reaches q."""
    if not N >= 2.0:
        raise ValueError(f"domain size must be >= 2, got {N!r}")
    # tolerate round-off from q values computed by the forward map
    if 1.0 / N - 1e-12 <= q < 1.0 / N:
        q = 1.0 / N
    elif 1.0 < q <= 1.0 + 1e-12:
        q = 1.0
    if not 1.0 / N <= q <= 1.0:
        raise ValueError(f"probability must lie in [1/N, 1], got {q!r}")
    if kind is ScheduleKind.PROPOSED:
        tau = q - math.sqrt(q * (1.0 - q) / (N - 1.0))
    elif kind is ScheduleKind.ORIGINAL:
        tau = 1.0 - math.acos(math.sqrt(q)) / math.acos(1.0 / math.sqrt(N))
    else:
        tau = invert_ideal_probability(q, N)
    return min(1.0, max(0.0, tau))


def schedule_fn(kind: ScheduleKind, N: float) -> Callable[[float], float]:
    """A fast s(tau) callable with the N-dependent constants precomputed.

    Intended for integrator right-hand sides, where the schedule is evaluated
    millions of times; arguments are clamped to [0, 1] rather than validated.
    """
    if kind is ScheduleKind.PROPOSED:
        coeff = 4.0 * (N - 1.0)

        def evaluate(tau: float) -> float:
            tau = min(1.0, max(0.0, tau))
            s = 0.5 * (1.0 + (2.0 * tau - 1.0) / math.sqrt(1.0 + coeff * tau * (1.0 - tau)))
            return min(1.0, max(0.0, s))

    elif kind is ScheduleKind.ORIGINAL:
        root = math.sqrt(N - 1.0)
        theta = math.atan(root)
        # |(2 tau - 1) theta| <= theta < pi/2 for any finite N; the clamp is a
        # safety net against rounding right at the endpoints.
        arg_cap = math.pi / 2.0 - 1e-12

        def evaluate(tau: float) -> float:
            tau = min(1.0, max(0.0, tau))
            if tau == 0.0 or tau == 1.0:
                # tan(atan(x)) != x in the last bit; keep the endpoints exact
                return tau
            arg = (2.0 * tau - 1.0) * theta
            arg = min(arg_cap, max(-arg_cap, arg))
            s = 0.5 * (1.0 + math.tan(arg) / root)
            return min(1.0, max(0.0, s))

    else:

        def evaluate(tau: float) -> float:
            return min(1.0, max(0.0, tau))

    return evaluate


@dataclass(frozen=True)
class ScheduleSpec:
    """A schedule kind bound to a search instance, with its duration T."""

    kind: ScheduleKind
    instance: SearchInstance
    duration: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "duration", duration(self.kind, self.instance.N, self.instance.eps)
        )
