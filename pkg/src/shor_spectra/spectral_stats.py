"""Eigendecomposition of block unitaries and the spacing/intensity statistics."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np
from scipy import linalg
from scipy.special import erf

from .errors import (
    ConvergenceFailure,
    DomainError,
    EmptySpectrumError,
    NotUnitaryError,
)
from .operators import UnitaryMatrix

TWO_PI = 2.0 * np.pi
ANGLE_SNAP = 1e-12


class Reference(str, enum.Enum):
    CUE = "cue"
    GOE = "goe"
    POISSON = "poisson"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class BlockSpectrum:
    theta: Optional[float]
    eigenangles: np.ndarray
    eigenvectors: np.ndarray  # columns, matched to eigenangles
    residual: float
    degeneracies: int = 0

    @property
    def dim(self) -> int:
        return len(self.eigenangles)


@dataclass(frozen=True)
class SpacingEnsemble:
    spacings: np.ndarray
    source_count: int
    raw_count: int
    raw_mean: float  # mean before the global rescale


@dataclass(frozen=True)
class IntensityRecord:
    intensities: np.ndarray
    state_label: tuple


@dataclass(frozen=True)
class Histogram:
    centers: np.ndarray
    densities: np.ndarray
    bin_width: float
    overflow: int

    def rows(self):
        return list(zip(self.centers.tolist(), self.densities.tolist()))


@dataclass(frozen=True)
class DistributionComparison:
    ks_statistic: float
    reference: Reference
    sample_size: int
    histogram: Optional[Histogram] = field(default=None)


def _to_angles(eigenvalues: np.ndarray) -> np.ndarray:
    a = np.mod(np.angle(eigenvalues), TWO_PI)
    a[TWO_PI - a < ANGLE_SNAP] = 0.0
    return a


def _fix_gauge(vectors: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Rotate each column so its first non-negligible component is real positive."""
    out = vectors.copy()
    for c in range(out.shape[1]):
        col = out[:, c]
        nz = np.flatnonzero(np.abs(col) > tol)
        if len(nz):
            ph = col[nz[0]] / abs(col[nz[0]])
            out[:, c] = col / ph
    return out


def eigendecompose_unitary(M, theta: Optional[float] = None, *, tol: float = 1e-10) -> BlockSpectrum:
    """Full orthonormal eigensystem of a unitary matrix.

    Uses the complex Schur form: for a normal matrix the triangular factor is
    diagonal, so the Schur vectors are already an orthonormal eigenbasis,
    degenerate clusters included.
    """
    if isinstance(M, UnitaryMatrix):
        if theta is None:
            theta = M.meta.get("theta")
        M = M.entries
    M = np.asarray(M, dtype=complex)
    d = M.shape[0]
    if M.shape != (d, d):
        raise ValueError("matrix must be square")
    defect = np.max(np.abs(M.conj().T @ M - np.eye(d))) if d else 0.0
    if defect > tol:
        raise NotUnitaryError(f"unitarity defect {defect:.3e} exceeds {tol:.1e}")
    try:
        T, Z = linalg.schur(M, output="complex")
    except (linalg.LinAlgError, ValueError) as exc:
        raise ConvergenceFailure(str(exc)) from exc
    lam = np.diag(T).copy()
    angles = _to_angles(lam)
    order = np.argsort(angles, kind="stable")
    angles = angles[order]
    vecs = _fix_gauge(Z[:, order])
    lam = np.exp(1j * angles)
    residual = float(np.max(np.linalg.norm(M @ vecs - vecs * lam[None, :], axis=0))) if d else 0.0
    degeneracies = int(np.sum(np.diff(angles) < 1e-10)) if d > 1 else 0
    return BlockSpectrum(theta, angles, vecs, residual, degeneracies)


def normalized_spacings(spectrum: BlockSpectrum, include_wraparound: bool = False) -> np.ndarray:
    """Nearest-neighbour eigenangle gaps scaled by dim / 2pi (unit mean density)."""
    a = np.sort(np.asarray(spectrum.eigenangles))
    d = len(a)
    if d == 0 or (d < 2 and not include_wraparound):
        raise EmptySpectrumError("need at least two levels for spacings")
    s = np.diff(a)
    if include_wraparound:
        s = np.append(s, a[0] + TWO_PI - a[-1])
    return s * d / TWO_PI


def pool_ensemble(spacing_lists: Iterable[np.ndarray]) -> SpacingEnsemble:
    """Concatenate per-block spacings and rescale globally to unit mean."""
    lists = [np.asarray(s, dtype=float) for s in spacing_lists]
    if not lists or any(len(s) == 0 for s in lists):
        raise EmptySpectrumError("every spacing list must be nonempty")
    pooled = np.concatenate(lists)
    mean = float(pooled.mean())
    return SpacingEnsemble(pooled / mean, len(lists), len(pooled), mean)


def _nonneg(s) -> np.ndarray:
    s = np.asarray(s, dtype=float)
    if np.any(s < 0):
        raise DomainError("spacing must be nonnegative")
    return s


def wigner_cue_pdf(s):
    s = _nonneg(s)
    return 32.0 * s**2 / np.pi**2 * np.exp(-4.0 * s**2 / np.pi)


def wigner_cue_cdf(s):
    s = _nonneg(s)
    return erf(2.0 * s / np.sqrt(np.pi)) - 4.0 * s / np.pi * np.exp(-4.0 * s**2 / np.pi)


def wigner_goe_pdf(s):
    s = _nonneg(s)
    return np.pi * s / 2.0 * np.exp(-np.pi * s**2 / 4.0)


def wigner_goe_cdf(s):
    s = _nonneg(s)
    return -np.expm1(-np.pi * s**2 / 4.0)


def poisson_pdf(s):
    return np.exp(-_nonneg(s))


def poisson_cdf(s):
    return -np.expm1(-_nonneg(s))


# Porter-Thomas law for complex eigenvectors has the same form as Poisson spacings.
exponential_pdf = poisson_pdf
exponential_cdf = poisson_cdf

CDFS: dict[Reference, Callable] = {
    Reference.CUE: wigner_cue_cdf,
    Reference.GOE: wigner_goe_cdf,
    Reference.POISSON: poisson_cdf,
    Reference.EXPONENTIAL: exponential_cdf,
}
PDFS: dict[Reference, Callable] = {
    Reference.CUE: wigner_cue_pdf,
    Reference.GOE: wigner_goe_pdf,
    Reference.POISSON: poisson_pdf,
    Reference.EXPONENTIAL: exponential_pdf,
}


def ks_distance(samples, cdf: Callable) -> float:
    """Two-sided Kolmogorov-Smirnov statistic sup |F_n - F|."""
    x = np.sort(np.asarray(samples, dtype=float))
    n = len(x)
    if n == 0:
        raise EmptySpectrumError("no samples")
    F = np.asarray(cdf(x), dtype=float)
    i = np.arange(1, n + 1)
    d_plus = np.max(i / n - F)
    d_minus = np.max(F - (i - 1) / n)
    return float(max(d_plus, d_minus))


def histogram(samples, bin_width: float = 0.25, max_s: float = 4.0) -> Histogram:
    """Density histogram on [0, max_s); counts / (n * bin_width). Samples >= max_s go to overflow."""
    if bin_width <= 0:
        raise ValueError("bin_width must be positive")
    x = np.asarray(samples, dtype=float)
    nbins = int(round(max_s / bin_width))
    edges = np.arange(nbins + 1) * bin_width
    inside = x < edges[-1]
    counts, _ = np.histogram(x[inside], bins=edges)
    n = len(x)
    dens = counts / (n * bin_width) if n else np.zeros(nbins)
    return Histogram(edges[:-1] + bin_width / 2, dens, bin_width, int(np.sum(~inside)))


def compare(samples, reference: Reference | str, bin_width: float = 0.25, max_s: float = 4.0) -> DistributionComparison:
    ref = Reference(reference)
    x = np.asarray(samples, dtype=float)
    return DistributionComparison(
        ks_distance(x, CDFS[ref]), ref, len(x), histogram(x, bin_width, max_s)
    )


def intensity_record(spectrum: BlockSpectrum, index: int) -> IntensityRecord:
    """x_m = dim * |<m|phi>|^2 for eigenvector ``index`` (sorted-eigenangle order)."""
    d = spectrum.dim
    if not -d <= index < d:
        raise IndexError(f"eigenstate index {index} out of range for dimension {d}")
    v = spectrum.eigenvectors[:, index]
    return IntensityRecord(d * np.abs(v) ** 2, (spectrum.theta, index % d))


def intensities_from_vector(vector) -> IntensityRecord:
    v = np.asarray(vector)
    return IntensityRecord(len(v) * np.abs(v) ** 2, (None, None))


def cumulative_distribution(record: IntensityRecord) -> tuple[np.ndarray, np.ndarray]:
    """Empirical CDF xi(x) = #{x_m <= x} / n at each distinct intensity."""
    x = np.sort(np.asarray(record.intensities, dtype=float))
    if len(x) == 0:
        raise EmptySpectrumError("empty intensity record")
    ux = np.unique(x)
    xi = np.searchsorted(x, ux, side="right") / len(x)
    return ux, xi


def max_angle_mismatch(a, b) -> float:
    """Largest gap between two eigenangle multisets matched in sorted order.

    Both sets are measured from a cut placed in the widest empty arc of their
    union, so levels straddling angle 0 do not get paired across the branch.
    """
    a = np.mod(np.asarray(a, dtype=float), TWO_PI)
    b = np.mod(np.asarray(b, dtype=float), TWO_PI)
    if len(a) != len(b):
        raise ValueError(f"multisets differ in size: {len(a)} vs {len(b)}")
    u = np.sort(np.concatenate([a, b]))
    gaps = np.diff(np.append(u, u[0] + TWO_PI))
    i = int(np.argmax(gaps))
    cut = u[i] + gaps[i] / 2
    ra = np.sort(np.mod(a - cut, TWO_PI))
    rb = np.sort(np.mod(b - cut, TWO_PI))
    return float(np.max(np.abs(ra - rb)))
