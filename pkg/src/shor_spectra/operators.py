"""Dense and permutation constructions of the order-finding unitaries.

Index conventions: a two-register basis state |j>|k> has flat index
``j * d2 + k`` where ``d2`` is the size of the second register (``2**n2`` for
the full space, ``N`` for the restricted one).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np
from scipy.linalg import hadamard

from ._guards import check_dim
from .errors import BadDimensionError, NotCoprimeError
from .numtheory import mod_exp, orbit_decomposition

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class UnitaryMatrix:
    entries: np.ndarray
    label: str = ""
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)

    def unitarity_defect(self) -> float:
        """max |(U^dagger U - I)_{ij}|"""
        e = self.entries
        return float(np.max(np.abs(e.conj().T @ e - np.eye(self.dim))))


@dataclass(frozen=True)
class RegisterShape:
    n1: int
    n2: int
    N: int
    x: int = 2

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise BadDimensionError("register sizes must be positive")
        if self.N < 3 or self.N % 2 == 0:
            raise ValueError(f"N must be odd and >= 3, got {self.N}")
        if 2**self.n2 < self.N:
            raise BadDimensionError(f"2**n2 = {2**self.n2} cannot hold residues mod {self.N}")
        if math.gcd(self.x, self.N) != 1:
            raise NotCoprimeError(f"base {self.x} is not coprime to {self.N}")

    @classmethod
    def minimal(cls, n1: int, N: int, x: int = 2) -> "RegisterShape":
        """Smallest second register that holds all residues mod N."""
        return cls(n1=n1, n2=max(1, (N - 1).bit_length()), N=N, x=x)

    @property
    def d1(self) -> int:
        return 2**self.n1

    @property
    def d2(self) -> int:
        return 2**self.n2


@dataclass(frozen=True)
class BlockSpec:
    """Symmetry sector label: eigenangle theta of S, normalized into [0, 2pi).

    When ``turns`` (theta / 2pi as an exact fraction) is known, phases are
    reduced with integer arithmetic instead of floating multiplication.
    """

    theta: float
    n1: int
    turns: Optional[Fraction] = None

    def __post_init__(self):
        if self.n1 < 1:
            raise BadDimensionError("n1 must be positive")
        if self.turns is not None:
            t = Fraction(self.turns) % 1
            object.__setattr__(self, "turns", t)
            object.__setattr__(self, "theta", TWO_PI * float(t))
        else:
            th = float(self.theta) % TWO_PI
            if TWO_PI - th < 1e-12:
                th = 0.0
            object.__setattr__(self, "theta", th)

    @classmethod
    def from_turns(cls, turns, n1: int) -> "BlockSpec":
        return cls(theta=0.0, n1=n1, turns=Fraction(turns))

    def phases(self, multipliers: np.ndarray) -> np.ndarray:
        """exp(i * m * theta) for integer array ``m``."""
        m = np.asarray(multipliers, dtype=np.int64)
        if self.turns is not None:
            p, q = self.turns.numerator, self.turns.denominator
            return np.exp(1j * TWO_PI * ((m * p) % q) / q)
        return np.exp(1j * np.mod(m * self.theta, TWO_PI))


def _unit_phase(numer: np.ndarray, denom: int) -> np.ndarray:
    """exp(2 pi i numer / denom) with numer reduced exactly mod denom first."""
    return np.exp(1j * TWO_PI * (np.asarray(numer) % denom) / denom)


def fourier_matrix(n1: int) -> UnitaryMatrix:
    """F[j, k] = exp(+2 pi i j k / D) / sqrt(D); F^{-1} is its conjugate transpose."""
    D = 2**n1
    check_dim(D, 2**14, "fourier_matrix")
    jk = np.outer(np.arange(D, dtype=np.int64), np.arange(D, dtype=np.int64))
    return UnitaryMatrix(_unit_phase(jk, D) / math.sqrt(D), f"F(n1={n1})", {"n1": n1})


def hadamard_matrix(n1: int) -> UnitaryMatrix:
    """n1-fold tensor power of the one-qubit Hadamard gate (Sylvester ordering)."""
    D = 2**n1
    check_dim(D, 2**14, "hadamard_matrix")
    return UnitaryMatrix(
        hadamard(D).astype(complex) / math.sqrt(D), f"H(n1={n1})", {"n1": n1}
    )


def shift_permutation(x: int, N: int, dim: int) -> np.ndarray:
    """Index map of S: ``perm[k]`` is the image of basis state k."""
    if math.gcd(x, N) != 1:
        raise NotCoprimeError(f"base {x} is not coprime to {N}")
    if dim < N:
        raise BadDimensionError(f"dim {dim} < modulus {N}")
    perm = np.arange(dim, dtype=np.int64)
    perm[:N] = (np.arange(N, dtype=object) * x % N).astype(np.int64)
    return perm


def shift_matrix(x: int, N: int, dim: int) -> UnitaryMatrix:
    perm = shift_permutation(x, N, dim)
    S = np.zeros((dim, dim), dtype=complex)
    S[perm, np.arange(dim)] = 1.0
    return UnitaryMatrix(S, f"S(x={x},N={N},dim={dim})")


@dataclass(frozen=True)
class PermutationOperator:
    """A permutation unitary stored as an index map: |i> -> |perm[i]>."""

    perm: np.ndarray
    label: str = ""

    @property
    def dim(self) -> int:
        return len(self.perm)

    def apply(self, vec: np.ndarray) -> np.ndarray:
        out = np.empty_like(vec)
        out[self.perm] = vec
        return out

    def dense(self, max_dim: int = 2**13) -> UnitaryMatrix:
        check_dim(self.dim, max_dim, "dense permutation")
        M = np.zeros((self.dim, self.dim), dtype=complex)
        M[self.perm, np.arange(self.dim)] = 1.0
        return UnitaryMatrix(M, self.label)


def _power_maps(x: int, N: int, count: int) -> np.ndarray:
    """Row j holds the map k -> x**j * k mod N on {0..N-1}, for j < count."""
    k = np.arange(N, dtype=object)
    return np.array(
        [(mod_exp(x, j, N) * k % N).astype(np.int64) for j in range(count)],
        dtype=np.int64,
    ).reshape(count, N)


def modular_exponentiation_operator(shape: RegisterShape) -> PermutationOperator:
    """U_x |j>|k> = |j>|x^j k mod N> for k < N, identity for k >= N."""
    check_dim(shape.d1 * shape.d2, 2**20, "modular_exponentiation_operator")
    d1, d2, N = shape.d1, shape.d2, shape.N
    images = np.tile(np.arange(d2, dtype=np.int64), (d1, 1))
    images[:, :N] = _power_maps(shape.x, N, d1)
    perm = (np.arange(d1, dtype=np.int64)[:, None] * d2 + images).ravel()
    return PermutationOperator(perm, f"U_x(n1={shape.n1},n2={shape.n2},N={N},x={shape.x})")


def lambda_matrix(spec: BlockSpec) -> UnitaryMatrix:
    D = 2**spec.n1
    check_dim(D, 2**14, "lambda_matrix")
    return UnitaryMatrix(
        np.diag(spec.phases(np.arange(D))),
        f"Lambda(theta={spec.theta:.15g})",
        {"theta": spec.theta, "n1": spec.n1},
    )


def block_operator_composed(spec: BlockSpec) -> UnitaryMatrix:
    """F^{-1} Lambda H by explicit matrix products."""
    D = 2**spec.n1
    check_dim(D, 2**12, "block_operator_composed")
    F = fourier_matrix(spec.n1).entries
    H = hadamard_matrix(spec.n1).entries
    lam = spec.phases(np.arange(D))
    M = F.conj().T @ (lam[:, None] * H)
    return UnitaryMatrix(
        M, f"FinvLambdaH(theta={spec.theta:.15g},n1={spec.n1})",
        {"theta": spec.theta, "n1": spec.n1},
    )


def block_operator_direct(spec: BlockSpec) -> UnitaryMatrix:
    """F^{-1} Lambda H from the closed-form product over the bits of the column.

    Entry (k, l) = 2**-n1 * prod_m (1 + (-1)**b_m(l) exp(-2 pi i k 2**m / D) exp(i theta 2**m)).
    """
    n1 = spec.n1
    D = 2**n1
    check_dim(D, 2**14, "block_operator_direct")
    k = np.arange(D, dtype=np.int64)
    l = np.arange(D, dtype=np.int64)
    M = np.ones((D, D), dtype=complex)
    for m in range(n1):
        a = _unit_phase(-(k << m), D) * spec.phases(np.array([1 << m]))[0]
        sign = 1 - 2 * ((l >> m) & 1)
        M *= 1.0 + np.outer(a, sign)
    M /= D
    return UnitaryMatrix(
        M, f"FinvLambdaH[direct](theta={spec.theta:.15g},n1={n1})",
        {"theta": spec.theta, "n1": n1},
    )


def full_operator_U(shape: RegisterShape) -> UnitaryMatrix:
    """(F^{-1} x Id) U_x (H x Id) restricted to second-register states k < N.

    Built without Kronecker products: U[(a,k'),(l,k)] = sum_m Finv[a,m] H[m,l] [k' = x^m k mod N].
    """
    D, N = shape.d1, shape.N
    check_dim(D * N, 4096, "full_operator_U")
    Finv = fourier_matrix(shape.n1).entries.conj().T
    H = hadamard_matrix(shape.n1).entries
    maps = _power_maps(shape.x, N, D)
    # Y[m, k', l, k] = H[m, l] [k' = maps[m, k]]
    Y = np.zeros((D, N, D, N), dtype=complex)
    m_idx = np.repeat(np.arange(D), N)
    k_idx = np.tile(np.arange(N), D)
    Y[m_idx, maps.ravel(), :, k_idx] = H[m_idx, :]
    U = np.tensordot(Finv, Y, axes=(1, 0)).reshape(D * N, D * N)
    return UnitaryMatrix(U, f"U(n1={shape.n1},N={N},x={shape.x})", {"n1": shape.n1})


def full_operator_Utilde(shape: RegisterShape) -> UnitaryMatrix:
    """(F^{-1} x Id) U_x (F x Id) on the restricted space; for cross-checks only."""
    D, N = shape.d1, shape.N
    check_dim(D * N, 4096, "full_operator_Utilde")
    F = fourier_matrix(shape.n1).entries
    maps = _power_maps(shape.x, N, D)
    Y = np.zeros((D, N, D, N), dtype=complex)
    m_idx = np.repeat(np.arange(D), N)
    k_idx = np.tile(np.arange(N), D)
    Y[m_idx, maps.ravel(), :, k_idx] = F[m_idx, :]
    U = np.tensordot(F.conj().T, Y, axes=(1, 0)).reshape(D * N, D * N)
    return UnitaryMatrix(U, f"Utilde(n1={shape.n1},N={N},x={shape.x})")


def commutator_with_shift(U: UnitaryMatrix, shape: RegisterShape) -> float:
    """max |[U, Id x S]| on the restricted 2**n1 * N space, S applied as a permutation."""
    D, N = shape.d1, shape.N
    s = (np.arange(N, dtype=object) * shape.x % N).astype(np.int64)
    sigma = (np.arange(D)[:, None] * N + s[None, :]).ravel()
    M = U.entries
    US = M[:, sigma]  # column (j,k) of U (I x S) is column (j, s(k)) of U
    SU = np.empty_like(M)
    SU[sigma, :] = M
    return float(np.max(np.abs(US - SU)))


def _cycle_lengths_of_power(orbit_lengths: list[int], j: int) -> list[tuple[int, int]]:
    """Cycle type of S**j: each rho-cycle of S splits into gcd(j, rho) cycles of length rho/gcd."""
    out = []
    for rho in orbit_lengths:
        g = math.gcd(j, rho)
        out.append((rho // g, g))
    return out


def utilde_spectrum(shape: RegisterShape, include_trivial: bool = True) -> dict[Fraction, int]:
    """Eigenvalue multiset of U_x (hence of U-tilde) from cycle structure alone.

    Keys are eigenangles as exact fractions of a full turn in [0, 1); values
    are multiplicities. The trivial k >= N sector contributes angle 0 with
    multiplicity 2**n1 * (2**n2 - N) when ``include_trivial``.
    """
    lengths = [o.length for o in orbit_decomposition(shape.x, shape.N).orbits]
    counts: dict[Fraction, int] = {}
    # S**j depends only on j mod r
    r = math.lcm(*lengths)
    per_residue = []
    for j in range(r):
        spec = {}
        for c, ncycles in _cycle_lengths_of_power(lengths, j):
            for q in range(c):
                f = Fraction(q, c)
                spec[f] = spec.get(f, 0) + ncycles
        per_residue.append(spec)
    reps = [shape.d1 // r + (1 if j < shape.d1 % r else 0) for j in range(r)]
    for spec, rep in zip(per_residue, reps):
        if rep == 0:
            continue
        for f, c in spec.items():
            counts[f] = counts.get(f, 0) + c * rep
    if include_trivial and shape.d2 > shape.N:
        counts[Fraction(0)] = counts.get(Fraction(0), 0) + shape.d1 * (shape.d2 - shape.N)
    return dict(sorted(counts.items()))


def utilde_eigenvalues(shape: RegisterShape, include_trivial: bool = True) -> np.ndarray:
    """Sorted-by-angle complex eigenvalues of U-tilde, with multiplicity."""
    spec = utilde_spectrum(shape, include_trivial)
    angles = np.concatenate(
        [np.full(c, float(f)) for f, c in spec.items()]
    )
    return np.exp(1j * TWO_PI * angles)
