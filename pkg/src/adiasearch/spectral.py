"""Closed-form spectrum of the interpolating search Hamiltonian.

The Hamiltonian family is H(s) = (1-s) H0 + s H1 acting on an N-dimensional
search space, with

    H0 = I - |phi><phi|    (|phi> = uniform superposition over N items),
    H1 = I - |m><m|        (|m>   = the marked basis state),

and interpolation parameter s in [0, 1].  The spectrum splits into an
(N-2)-fold level at energy 1 plus two levels

    E0(s) = (1 - g(s)) / 2,   E1(s) = (1 + g(s)) / 2,

separated by the gap g(s) = sqrt(1 - 4 (N-1)/N s(1-s)), minimal at s = 1/2
where g = 1/sqrt(N).  The ground state lives in span{|m>, |m_perp>} with
amplitudes alpha(s) on |m> and beta(s) on the unmarked uniform state.

Everything here is an exact closed form in (s, N); `dense_spectral_point`
builds the full N x N matrix and diagonalizes it, as an independent
cross-check for small qubit counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SearchInstance",
    "SpectralPoint",
    "DenseSpectralPoint",
    "gap",
    "spectral_point",
    "transition_matrix_element",
    "ideal_marked_probability",
    "invert_ideal_probability",
    "dense_hamiltonian",
    "dense_spectral_point",
]

# n above 60 would make N - 1 indistinguishable from N at double precision
# in more than the last few bits of the closed forms.
MAX_QUBITS = 60

# Tolerance for the vanishing denominator in invert_ideal_probability.
_INVERT_BRANCH_TOL = 1e-9


@dataclass(frozen=True)
class SearchInstance:
    """Global parameters of one search problem: qubit count and diabaticity.

    The domain size N = 2**n is carried as a float so that n up to 60 is
    usable in all closed forms.
    """

    n: int
    eps: float

    def __post_init__(self):
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count must be an integer in [1, {MAX_QUBITS}], got {self.n!r}")
        if not 0.0 < self.eps < 1.0:
            raise ValueError(f"diabaticity must lie strictly in (0, 1), got {self.eps!r}")

    @property
    def N(self) -> float:
        return float(2.0 ** self.n)


@dataclass(frozen=True)
class SpectralPoint:
    """Spectral quantities of H(s) at one value of s.

    `bias` is alpha^2 - beta^2 = 2q - 1, the marked-state weight bias of the
    ground state; `amp_marked` / `amp_unmarked` are its amplitudes on |m>
    and on the uniform unmarked superposition.
    """

    s: float
    gap: float
    bias: float
    amp_marked: float
    amp_unmarked: float
    energy_ground: float
    energy_excited: float


def _check_domain(s: float, N: float) -> None:
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"interpolation parameter must lie in [0, 1], got {s!r}")
    if not N >= 2.0:
        raise ValueError(f"domain size must be >= 2, got {N!r}")


def gap(s: float, N: float) -> float:
    """Energy gap E1(s) - E0(s) of the search Hamiltonian.

    Evaluated as sqrt((1-2s)^2 + 4 s(1-s)/N), which equals
    sqrt(1 - 4 (N-1)/N s(1-s)) but avoids cancellation near s = 1/2 for
    large N (where the naive radicand would round to zero).
    """
    _check_domain(s, N)
    radicand = (1.0 - 2.0 * s) ** 2 + 4.0 * s * (1.0 - s) / N
    return math.sqrt(max(radicand, 0.0))


def spectral_point(s: float, N: float) -> SpectralPoint:
    """Gap, ground-state bias and amplitudes, and both energies at s."""
    _check_domain(s, N)
    g = gap(s, N)
    # 1 - 2 (N-1)/N (1-s) rearranged into (2s-1) + 2(1-s)/N: stable near the
    # minimum-gap point for large N.
    bias = ((2.0 * s - 1.0) + 2.0 * (1.0 - s) / N) / g
    bias = min(1.0, max(-1.0, bias))
    return SpectralPoint(
        s=s,
        gap=g,
        bias=bias,
        amp_marked=math.sqrt((1.0 + bias) / 2.0),
        amp_unmarked=math.sqrt((1.0 - bias) / 2.0),
        energy_ground=(1.0 - g) / 2.0,
        energy_excited=(1.0 + g) / 2.0,
    )


def transition_matrix_element(s: float, N: float) -> float:
    """|<excited| dH/ds |ground>| = sqrt(N-1) / (N g(s)); always < 1."""
    _check_domain(s, N)
    return math.sqrt(N - 1.0) / (N * gap(s, N))


def ideal_marked_probability(s: float, N: float) -> float:
    """Probability of the marked outcome when measuring the ground state of H(s).

    Equals (1 + bias)/2, ranging from 1/N at s = 0 to 1 at s = 1,
    nondecreasing in s.
    """
    point = spectral_point(s, N)
    return (1.0 + point.bias) / 2.0


def invert_ideal_probability(q: float, N: float) -> float:
    """The s at which the ground state of H(s) has marked probability q.

    Closed-form inverse of `ideal_marked_probability` on q in [1/N, 1].  The
    generic expression has a removable singularity where 4Nq(1-q) = 1 inside
    the domain; within `_INVERT_BRANCH_TOL` of it the exact special value
    s = (3 - 1/(N-1)) / 4 is returned instead.
    """
    if not N >= 2.0:
        raise ValueError(f"domain size must be >= 2, got {N!r}")
    # tolerate round-off from q values computed by the forward map
    if 1.0 / N - 1e-12 <= q < 1.0 / N:
        q = 1.0 / N
    elif 1.0 < q <= 1.0 + 1e-12:
        q = 1.0
    if not 1.0 / N <= q <= 1.0:
        raise ValueError(f"probability must lie in [1/N, 1], got {q!r}")
    denom = 4.0 * N * q * (1.0 - q) - 1.0
    if abs(denom) < _INVERT_BRANCH_TOL:
        return 0.25 * (3.0 - 1.0 / (N - 1.0))
    numer = (N / math.sqrt(N - 1.0)) * 2.0 * q * (1.0 - 2.0 * q) * math.sqrt((1.0 - q) / q) + 1.0
    s = 0.5 * (1.0 - numer / denom)
    return min(1.0, max(0.0, s))


# --- dense-matrix cross-check -------------------------------------------------

# Full diagonalization is meant for validation at small n only.
_DENSE_MAX_QUBITS = 12


@dataclass(frozen=True)
class DenseSpectralPoint:
    """Spectral quantities extracted from a full N x N diagonalization."""

    energy_ground: float
    energy_excited: float
    gap: float
    marked_probability: float
    matrix_element: float


def dense_hamiltonian(s: float, n: int, marked: int = 0) -> np.ndarray:
    """Explicit N x N matrix of H(s) for N = 2**n with marked index `marked`."""
    if not 1 <= n <= _DENSE_MAX_QUBITS:
        raise ValueError(f"dense construction limited to 1 <= n <= {_DENSE_MAX_QUBITS}, got {n!r}")
    N = 2 ** n
    if not 0 <= marked < N:
        raise ValueError(f"marked index must lie in [0, {N}), got {marked!r}")
    _check_domain(s, float(N))
    H = np.full((N, N), -(1.0 - s) / N)
    H[np.diag_indices(N)] += 1.0
    H[marked, marked] -= s
    return H

def dense_spectral_point(s: float, n: int, marked: int = 0,
                         degeneracy_tol: float = 1e-8) -> DenseSpectralPoint:
    """Diagonalize H(s) numerically and read off the same spectral quantities.

    The transition strength is computed as the norm of the projection of
    (dH/ds) |ground> onto the first-excited eigenspace, which coincides with
    |<excited| dH/ds |ground>| when that level is nondegenerate and stays
    well defined at s = 0 and s = 1 where it merges with the bulk level.
    """
    H = dense_hamiltonian(s, n, marked)
    energies, vectors = np.linalg.eigh(H)
    ground = vectors[:, 0]
    e0 = float(energies[0])
    e1 = float(energies[1])

    N = 2 ** n
    phi = np.full(N, 1.0 / math.sqrt(N))
    # dH/ds = |phi><phi| - |m><m| applied to the ground state
    dH_ground = phi * (phi @ ground)
    dH_ground[marked] -= ground[marked]

    excited = vectors[:, np.abs(energies - e1) <= degeneracy_tol]
    element = float(np.linalg.norm(excited.T @ dH_ground))

    return DenseSpectralPoint(
        energy_ground=e0,
        energy_excited=e1,
        gap=e1 - e0,
        marked_probability=float(abs(ground[marked]) ** 2),
        matrix_element=element,
    )
