"""Exact eigenvectors of the shift permutation, built orbit by orbit.

For an orbit with seed i0 and length rho, harmonic j gives the vector with
component exp(-2 pi i j n / rho) / sqrt(rho) on x**n * i0 mod N and
eigenvalue exp(+2 pi i j / rho).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BadDimensionError
from .numtheory import OrbitDecomposition

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class ShiftEigenpair:
    theta: float
    vector: np.ndarray
    orbit_seed: int
    harmonic: int
    orbit_length: int

    @property
    def turns(self) -> Fraction:
        return Fraction(self.harmonic, self.orbit_length)


@dataclass(frozen=True)
class EigenangleClass:
    theta: float
    multiplicity: int
    turns: Fraction
    seeds: tuple[int, ...]

    def __iter__(self):
        # unpacks as (theta, multiplicity)
        return iter((self.theta, self.multiplicity))


def shift_eigenbasis(decomp: OrbitDecomposition, pad_dim: int | None = None) -> list[ShiftEigenpair]:
    N = decomp.modulus
    dim = N if pad_dim is None else pad_dim
    if dim < N:
        raise BadDimensionError(f"pad_dim {dim} < modulus {N}")
    pairs = []
    for orbit in decomp.orbits:
        rho = orbit.length
        idx = np.asarray(orbit.elements, dtype=np.int64)
        n = np.arange(rho)
        for j in range(rho):
            v = np.zeros(dim, dtype=complex)
            v[idx] = np.exp(-1j * TWO_PI * ((j * n) % rho) / rho) / np.sqrt(rho)
            pairs.append(
                ShiftEigenpair(
                    theta=TWO_PI * j / rho,
                    vector=v,
                    orbit_seed=orbit.seed,
                    harmonic=j,
                    orbit_length=rho,
                )
            )
    return pairs


def distinct_eigenangles(decomp: OrbitDecomposition) -> list[EigenangleClass]:
    """Sorted distinct eigenangles of S with multiplicities and contributing seeds."""
    groups: dict[Fraction, list[int]] = {}
    for orbit in decomp.orbits:
        for j in range(orbit.length):
            groups.setdefault(Fraction(j, orbit.length), []).append(orbit.seed)
    return [
        EigenangleClass(
            theta=TWO_PI * float(t), multiplicity=len(seeds), turns=t, seeds=tuple(seeds)
        )
        for t, seeds in sorted(groups.items())
    ]
