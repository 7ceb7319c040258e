"""Thue-Morse structure of the theta = 0, last column of F^{-1} Lambda H."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._guards import check_dim

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class SignSequence:
    values: np.ndarray
    rule: str


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a.astype(np.uint64)).astype(np.int64)


def thue_morse(n1: int) -> SignSequence:
    """t_m = (-1)**popcount(m), m < 2**n1."""
    D = 2**n1
    check_dim(D, 2**24, "thue_morse")
    m = np.arange(D, dtype=np.int64)
    return SignSequence(1 - 2 * (_popcount(m) & 1), "(-1)^popcount(m)")


def tm_fourier_column(n1: int) -> np.ndarray:
    """2**-n1 * prod_m (1 - exp(-2 pi i k 2**m / 2**n1)) for k < 2**n1."""
    D = 2**n1
    check_dim(D, 2**20, "tm_fourier_column")
    k = np.arange(D, dtype=np.int64)
    col = np.ones(D, dtype=complex)
    for m in range(n1):
        col *= 1.0 - np.exp(-1j * TWO_PI * ((k << m) % D) / D)
    return col / D


def tm_dft(n1: int) -> np.ndarray:
    """Same column via an FFT of the sign sequence (independent route)."""
    t = thue_morse(n1).values.astype(complex)
    return np.fft.fft(t) / len(t)


def tm_peak_scaling(n1_values) -> list[tuple[int, float]]:
    """Largest normalized intensity 2**n1 |c_k|**2 of the column, per n1."""
    out = []
    for n1 in n1_values:
        col = tm_fourier_column(n1)
        out.append((int(n1), float(np.max(len(col) * np.abs(col) ** 2))))
    return out
