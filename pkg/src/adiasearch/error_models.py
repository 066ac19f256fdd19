"""Conjectured error envelopes and the probability bounds they imply.

An error function eps(tau) bounds the deviation of the evolving state from
the instantaneous ground state; the measured marked probability p then obeys
worst-case bounds relative to the errorless probability q.  Four candidate
envelopes, from weakest to strongest, with eps the diabaticity parameter:

    constant      eps(tau) = eps
    sqrt          eps(tau) = sqrt(tau)            for tau <= eps^2, else eps
    sine-sqrt     eps(tau) = eps sin(sqrt(tau)/eps) for tau <= (pi^2/4) eps^2, else eps
    scaled-sqrt   eps(tau) = eps sqrt(tau)

The tau-dependent bounds compose these envelopes with the errorless
probability of the proposed schedule.  Closed time bounds for reaching a
target probability exist for the constant and scaled-sqrt envelopes only.
"""

from __future__ import annotations

import math
from enum import Enum

from .schedules import ScheduleKind, ideal_q_of_tau

__all__ = [
    "ErrorModelKind",
    "epsilon_of_tau",
    "p_lower_bound_from_q",
    "q_upper_bound_from_p",
    "p_lower_bound_of_tau",
    "linear_loose_bound",
    "time_to_probability",
]


class ErrorModelKind(str, Enum):
    CONSTANT = "constant"
    SQRT = "sqrt"
    SINE_SQRT = "sine-sqrt"
    SCALED_SQRT = "scaled-sqrt"


def _check_ranges(tau: float, eps: float) -> None:
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau!r}")
    if not 0.0 < eps < 1.0:
        raise ValueError(f"diabaticity must lie strictly in (0, 1), got {eps!r}")


def epsilon_of_tau(kind: ErrorModelKind, tau: float, eps: float) -> float:
    """Value of the chosen error envelope at tau."""
    _check_ranges(tau, eps)
    if kind is ErrorModelKind.CONSTANT:
        return eps
    if kind is ErrorModelKind.SQRT:
        return math.sqrt(tau) if tau <= eps * eps else eps
    if kind is ErrorModelKind.SINE_SQRT:
        cap = (math.pi ** 2 / 4.0) * eps * eps
        return eps * math.sin(math.sqrt(tau) / eps) if tau <= cap else eps
    return eps * math.sqrt(tau)


def p_lower_bound_from_q(q: float, eps_val: float) -> float:
    """Worst-case measured probability given errorless probability q and error eps_val."""
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"q must lie in [0, 1], got {q!r}")
    if not 0.0 <= eps_val < 1.0:
        raise ValueError(f"error value must lie in [0, 1), got {eps_val!r}")
    e2 = eps_val * eps_val
    if q <= e2:
        return 0.0
    bound = q + e2 * (1.0 - 2.0 * q) - 2.0 * math.sqrt(e2 * (1.0 - e2) * q * (1.0 - q))
    return min(1.0, max(0.0, bound))


def q_upper_bound_from_p(p: float, eps_val: float) -> float:
    """Largest errorless probability consistent with measured probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    if not 0.0 <= eps_val < 1.0:
        raise ValueError(f"error value must lie in [0, 1), got {eps_val!r}")
    e2 = eps_val * eps_val
    if p >= 1.0 - e2:
        return 1.0
    bound = p + e2 * (1.0 - 2.0 * p) + 2.0 * math.sqrt(e2 * (1.0 - e2) * p * (1.0 - p))
    return min(1.0, bound)


def p_lower_bound_of_tau(kind: ErrorModelKind, tau: float, eps: float, N: float) -> float:
    """Probability lower bound at tau for the proposed schedule under the chosen envelope.

    Composes the errorless probability q(tau) of the proposed schedule with
    the envelope value eps(tau).  For the constant envelope with N >= 1/eps^2
    this vanishes on the initial region tau <= eps^2 - sqrt(eps^2(1-eps^2)/(N-1))
    (where q <= eps^2); the other envelopes satisfy q > eps(tau)^2 throughout.
    """
    _check_ranges(tau, eps)
    q = ideal_q_of_tau(ScheduleKind.PROPOSED, tau, N)
    return p_lower_bound_from_q(q, epsilon_of_tau(kind, tau, eps))


def linear_loose_bound(tau: float, eps: float) -> float:
    """N-independent linear relaxation of the constant-envelope bound: max(0, tau - eps)."""
    _check_ranges(tau, eps)
    return max(0.0, tau - eps)


def time_to_probability(p: float, N: float, eps: float, kind: ErrorModelKind) -> float:
    """Physical time sufficient to reach marked probability p under the envelope.

    Only the constant and scaled-sqrt envelopes admit a closed time bound;
    the other kinds are rejected.
    """
    if not N >= 2.0:
        raise ValueError(f"domain size must be >= 2, got {N!r}")
    if not 0.0 < eps < 1.0:
        raise ValueError(f"diabaticity must lie strictly in (0, 1), got {eps!r}")
    if kind is ErrorModelKind.CONSTANT:
        if not 0.0 <= p <= 1.0 - eps:
            raise ValueError(f"target probability must lie in [0, 1 - eps], got {p!r}")
        if p <= 1.0 / N:
            return 0.0
        return 2.0 * math.sqrt(N - 1.0) * (1.0 + p / eps)
    if kind is ErrorModelKind.SCALED_SQRT:
        if not 0.0 <= p <= (1.0 - eps) ** 2:
            raise ValueError(f"target probability must lie in [0, (1 - eps)^2], got {p!r}")
        return 2.0 * math.sqrt(N - 1.0) * p / (eps * (1.0 - eps) ** 2)
    raise ValueError(f"no closed time bound exists for error model {kind.value!r}")
