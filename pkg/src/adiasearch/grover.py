"""Closed-form Grover's-algorithm probability model used as the comparison baseline."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "GroverParams",
    "grover_q_of_steps",
    "grover_duration",
    "grover_q_of_tau",
    "grover_tau_of_q",
    "matched_diabaticity",
    "bounded_depth_probability",
]


@dataclass(frozen=True)
class GroverParams:
    """Domain size and the number of Grover iterations performed per unit time."""

    N: float
    k: float = 1.0

    def __post_init__(self):
        if not self.N >= 2.0:
            raise ValueError(f"domain size must be >= 2, got {self.N!r}")
        if not self.k > 0.0:
            raise ValueError(f"iteration rate must be positive, got {self.k!r}")


def _check_N(N: float) -> None:
    if not N >= 2.0:
        raise ValueError(f"domain size must be >= 2, got {N!r}")


def _arccsc(x: float) -> float:
    return math.asin(1.0 / x)


def grover_q_of_steps(t: float, N: float) -> float:
    """Marked probability after t Grover iterations: sin^2((2t+1) arcsin(1/sqrt(N)))."""
    _check_N(N)
    if t < 0.0:
        raise ValueError(f"iteration count must be >= 0, got {t!r}")
    return math.sin((2.0 * t + 1.0) * math.asin(1.0 / math.sqrt(N))) ** 2


def grover_duration(N: float) -> float:
    """Iterations after which the marked state is first obtained with certainty."""
    _check_N(N)
    return math.pi / (4.0 * math.asin(1.0 / math.sqrt(N))) - 0.5


def grover_q_of_tau(tau: float, N: float) -> float:
    """Marked probability at fractional completion tau of a full Grover run."""
    _check_N(N)
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau!r}")
    return math.cos((1.0 - tau) * math.acos(1.0 / math.sqrt(N))) ** 2


def grover_tau_of_q(q: float, N: float) -> float:
    """Fractional completion at which Grover's marked probability reaches q."""
    _check_N(N)
    # tolerate round-off from q values computed by the forward map
    if 1.0 / N - 1e-12 <= q < 1.0 / N:
        q = 1.0 / N
    elif 1.0 < q <= 1.0 + 1e-12:
        q = 1.0
    if not 1.0 / N <= q <= 1.0:
        raise ValueError(f"probability must lie in [1/N, 1], got {q!r}")
    return 1.0 - math.acos(math.sqrt(q)) / math.acos(1.0 / math.sqrt(N))


def matched_diabaticity(N: float, k: float = 1.0, N_grover: float | None = None) -> float:
    """Diabaticity that equalizes the adiabatic duration with a full Grover run.

    With the proposed schedule's duration 2 sqrt(N-1)/eps set equal to the
    wall time of grover_duration(N_grover) iterations at k iterations per
    unit time, eps = 8 k sqrt(N-1) / (pi / arccsc(sqrt(N_grover)) - 2),
    approaching 8k/pi for large equal domains.  Note the matched value
    exceeds 1 for k = 1: equal wall time forces a fast, diabatic sweep.
    """
    _check_N(N)
    if not k > 0.0:
        raise ValueError(f"iteration rate must be positive, got {k!r}")
    if N_grover is None:
        N_grover = N
    else:
        _check_N(N_grover)
    return 8.0 * k * math.sqrt(N - 1.0) / (math.pi / _arccsc(math.sqrt(N_grover)) - 2.0)


def bounded_depth_probability(t_c: float, k: float, N: float) -> float:
    """Marked probability after running Grover for at most k * t_c iterations.

    The depth fraction k*t_c / grover_duration(N) is capped at 1: iterating
    past the full duration is never required.
    """
    _check_N(N)
    if t_c < 0.0:
        raise ValueError(f"coherence time must be >= 0, got {t_c!r}")
    if not k > 0.0:
        raise ValueError(f"iteration rate must be positive, got {k!r}")
    fraction = 2.0 * k * t_c / (math.pi / (2.0 * _arccsc(math.sqrt(N))) - 1.0)
    fraction = min(1.0, fraction)
    return math.cos((1.0 - fraction) * math.acos(1.0 / math.sqrt(N))) ** 2
