#!/usr/bin/env python3
"""The three interpolation schedules side by side.

For N = 16, tabulates s(tau) and the errorless marked probability along each
schedule, plus the total durations at a common diabaticity.  The proposed
schedule sprints through the ends of the interpolation and lingers at the
narrow-gap middle; its ideal probability grows essentially linearly in time.
"""

import numpy as np

from adiasearch import ScheduleKind, duration, ideal_q_of_tau, ideal_tau_of_q, s_of_tau

N = 16.0
EPS = 0.1

print(f"Durations at N = {int(N)}, eps = {EPS}:")
for kind in ScheduleKind:
    print(f"  {kind.value:9s} T = {duration(kind, N, EPS):9.3f}")

print(f"\n{'tau':>5}", end="")
for kind in ScheduleKind:
    print(f"  {kind.value + ' s':>12} {kind.value + ' q':>12}", end="")
print()
for tau in np.linspace(0.0, 1.0, 11):
    tau = float(tau)
    print(f"{tau:5.2f}", end="")
    for kind in ScheduleKind:
        print(f"  {s_of_tau(kind, tau, N):12.6f} {ideal_q_of_tau(kind, tau, N):12.6f}", end="")
    print()

print("\nTime to reach probability q (errorless limit):")
print(f"{'q':>5} {'proposed':>10} {'original':>10} {'linear':>10}")
for q in (0.25, 0.5, 0.75, 0.9, 1.0):
    times = [ideal_tau_of_q(kind, q, N) for kind in ScheduleKind]
    print(f"{q:5.2f} {times[0]:10.6f} {times[1]:10.6f} {times[2]:10.6f}")
print("\nNote the proposed column: tau never exceeds q itself.")
