#!/usr/bin/env python3
"""Truncated-run protocol and bounded-resource runtimes.

Runs the early-measurement protocol for a target success probability and
validates it with seeded Monte Carlo sampling, then compares overall wall
times against depth-limited Grover when coherence time and processor count
are constrained.
"""

import math

from adiasearch import (
    ResourceBudget,
    SearchInstance,
    grover_bounded_runtime,
    max_probability_for_coherence,
    overall_runtime,
    protocol_params,
    required_runs,
    run_protocol,
)

instance = SearchInstance(n=10, eps=0.05)
print(f"Protocol at n = {instance.n}, eps = {instance.eps}:")
for target in (0.1, 0.3, 0.5):
    params = protocol_params(instance, target)
    run = run_protocol(params, trials=100000, seed=7)
    print(
        f"  target p = {target}: cutoff t_f = {params.t_f:8.2f} of T = {params.T:8.2f}, "
        f"exact p = {run.p_exact:.4f}, observed frequency = {run.empirical_frequency:.4f}"
    )

N = instance.N
t_c = 3.0 * math.sqrt(N)
best = max_probability_for_coherence(t_c, N, instance.eps)
print(f"\nCoherence budget t_c = {t_c:.1f} (advantage threshold {best.threshold:.1f}):")
print(f"  best protocol probability per run: {best.p:.4f}")
print(f"  runs for failure probability 1/e: {required_runs(best.p, math.exp(-1.0))}")

print(f"\n{'S':>5} {'adiabatic':>12} {'grover':>12}   (wall time, alpha = 1/e, k = 1/8)")
for S in (1, 4, 16, 0):
    budget = ResourceBudget(S=S, t_c=t_c, alpha=math.exp(-1.0), c=1.0)
    adiabatic = overall_runtime(budget, instance)
    grover = grover_bounded_runtime(budget, N, 0.125)
    label = "inf" if S == 0 else str(S)
    print(f"{label:>5} {adiabatic:12.1f} {grover:12.1f}")
