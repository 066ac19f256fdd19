#!/usr/bin/env python3
"""Spectrum of the interpolating search Hamiltonian.

Walks the interpolation parameter s from 0 to 1 for a few domain sizes and
prints the two lowest energy levels, the gap, and the probability that a
measurement of the instantaneous ground state yields the marked item.  Ends
with a dense-diagonalization spot check.
"""

import numpy as np

from adiasearch import dense_spectral_point, ideal_marked_probability, spectral_point

for n in (1, 4, 8):
    N = 2.0**n
    print(f"\nn = {n} (N = {int(N)}): minimum gap 1/sqrt(N) = {1.0 / np.sqrt(N):.6f}")
    print(f"{'s':>6} {'E0':>10} {'E1':>10} {'gap':>10} {'q_ideal':>10}")
    for s in np.linspace(0.0, 1.0, 9):
        point = spectral_point(float(s), N)
        q = ideal_marked_probability(float(s), N)
        print(
            f"{s:6.3f} {point.energy_ground:10.6f} {point.energy_excited:10.6f} "
            f"{point.gap:10.6f} {q:10.6f}"
        )

print("\nDense-diagonalization cross-check at n = 6, s = 0.37:")
dense = dense_spectral_point(0.37, 6)
point = spectral_point(0.37, 64.0)
print(f"  closed form gap = {point.gap:.15f}")
print(f"  dense oracle gap = {dense.gap:.15f}")
print(f"  difference       = {abs(dense.gap - point.gap):.2e}")
