#!/usr/bin/env python3
"""Error envelopes and the worst-case probability bounds they induce.

Shows the four candidate error envelopes eps(tau) at eps = 0.5, then the
probability lower bounds along the proposed schedule for an early stop at
time tau.  The scaled-sqrt envelope keeps p >= (1-eps)^2 tau (linear in
time); the weaker envelopes cannot.
"""

import numpy as np

from adiasearch import ErrorModelKind, epsilon_of_tau, linear_loose_bound, p_lower_bound_of_tau, time_to_probability

EPS = 0.5
KINDS = list(ErrorModelKind)

print(f"Error envelopes at eps = {EPS}:")
print(f"{'tau':>6}" + "".join(f" {kind.value:>12}" for kind in KINDS))
for tau in np.linspace(0.0, 0.5, 11):
    tau = float(tau)
    values = [epsilon_of_tau(kind, tau, EPS) for kind in KINDS]
    print(f"{tau:6.3f}" + "".join(f" {v:12.6f}" for v in values))

print(f"\nProbability lower bounds along the proposed schedule, N = 64:")
print(f"{'tau':>6}" + "".join(f" {kind.value:>12}" for kind in KINDS) + f" {'linear':>12}")
for tau in np.linspace(0.0, 1.0, 11):
    tau = float(tau)
    bounds = [p_lower_bound_of_tau(kind, tau, EPS, 64.0) for kind in KINDS]
    print(
        f"{tau:6.3f}"
        + "".join(f" {b:12.6f}" for b in bounds)
        + f" {linear_loose_bound(tau, EPS):12.6f}"
    )

print("\nSufficient evolution time for a target probability (eps = 0.1, N = 2^20):")
N = 2.0**20
for p in (0.1, 0.3, 0.5):
    t_const = time_to_probability(p, N, 0.1, ErrorModelKind.CONSTANT)
    t_scaled = time_to_probability(p, N, 0.1, ErrorModelKind.SCALED_SQRT)
    print(f"  p = {p}: constant envelope t <= {t_const:10.1f}, scaled-sqrt t <= {t_scaled:10.1f}")
