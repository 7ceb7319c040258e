"""End-to-end reproductions: spacing statistics (fig1), eigenstate intensities
(fig23) and the cross-check battery (verify).

Every run is deterministic: no random numbers are drawn, floats written to
disk are rounded to 12 significant digits and JSON keys are sorted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np

from .errors import ConfigError, InvalidThetaError, VerificationFailure
from .numtheory import orbit_decomposition
from .operators import (
    BlockSpec,
    RegisterShape,
    block_operator_composed,
    block_operator_direct,
    commutator_with_shift,
    full_operator_U,
    full_operator_Utilde,
    shift_permutation,
    utilde_spectrum,
)
from .serialization import fmt, write_csv
from .shift_spectrum import distinct_eigenangles, shift_eigenbasis
from .spectral_stats import (
    CDFS,
    PDFS,
    Reference,
    BlockSpectrum,
    eigendecompose_unitary,
    exponential_cdf,
    histogram,
    intensity_record,
    cumulative_distribution,
    ks_distance,
    max_angle_mismatch,
    normalized_spacings,
    pool_ensemble,
)

TWO_PI = 2.0 * np.pi

# -20pi/28, 0, 4pi/28, 6pi/28, 14pi/28 as fractions of a full turn
PAPER_TURNS = (Fraction(-10, 28), Fraction(0), Fraction(2, 28), Fraction(3, 28), Fraction(7, 28))

ThetaSelector = Union[str, Sequence[Union[Fraction, float]]]


@dataclass
class ExperimentConfig:
    n1: int = 10
    N: int = 29
    x: int = 2
    thetas: ThetaSelector = "paper"
    bin_width: float = 0.25
    max_s: float = 4.0
    include_wraparound: bool = False
    output_dir: Path = Path("out")
    # (position in the theta list, eigenstate index); index None picks the first generic state
    eigenstate_index: tuple[int, Optional[int]] = (0, None)


@dataclass
class ExperimentReport:
    kind: str
    data: dict
    files: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"experiment": self.kind, **self.data, "files": sorted(self.files)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _r(v: float) -> float:
    return float(fmt(v))


def _turn_str(t: Fraction) -> str:
    return f"{t.numerator}/{t.denominator}"


def resolve_thetas(config: ExperimentConfig) -> list[Fraction]:
    """Turn the theta selector into validated S eigenangles (fractions of 2pi in [0, 1)).

    Selectors: ``"paper"`` (the five published angles), ``"all"`` (every distinct
    eigenangle of S), ``"seeds"`` (the fundamental angle 1/rho of each distinct
    orbit length rho, 0 for fixed points), or an explicit list of fractions of a
    turn / floats in radians.
    """
    decomp = orbit_decomposition(config.x, config.N)
    valid = [c.turns for c in distinct_eigenangles(decomp)]
    sel = config.thetas
    if isinstance(sel, str):
        if sel == "paper":
            requested = list(PAPER_TURNS)
        elif sel == "all":
            return valid
        elif sel == "seeds":
            lengths = sorted({o.length for o in decomp.orbits})
            return [Fraction(1, rho) % 1 for rho in lengths]
        else:
            raise ConfigError(f"unknown theta selector {sel!r}")
    else:
        requested = list(sel)
    if not requested:
        raise ConfigError("no theta values requested")
    out = []
    for t in requested:
        if isinstance(t, Fraction):
            t = t % 1
            if t in valid:
                out.append(t)
                continue
            angle = TWO_PI * float(t)
        else:
            angle = float(t) % TWO_PI
            match = [v for v in valid if _circ_dist(TWO_PI * float(v), angle) < 1e-12]
            if match:
                out.append(match[0])
                continue
        nearest = min(valid, key=lambda v: _circ_dist(TWO_PI * float(v), angle))
        raise InvalidThetaError(
            f"theta = {angle:.12g} is not an eigenangle of S for x={config.x}, N={config.N}; "
            f"nearest valid angle is 2pi*{_turn_str(nearest)} = {TWO_PI * float(nearest):.12g}"
        )
    return out


def _circ_dist(a: float, b: float) -> float:
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


def diagonalize_blocks(n1: int, turns: Sequence[Fraction]) -> list[BlockSpectrum]:
    return [
        eigendecompose_unitary(block_operator_direct(BlockSpec.from_turns(t, n1)))
        for t in turns
    ]


def _theta_params(config: ExperimentConfig, turns) -> dict:
    return {
        "n1": config.n1,
        "N": config.N,
        "x": config.x,
        "thetas": [{"turns": _turn_str(t), "theta": _r(TWO_PI * float(t))} for t in turns],
    }


def run_fig1(config: ExperimentConfig) -> ExperimentReport:
    """Pooled nearest-neighbour spacings of the selected blocks vs CUE/GOE/Poisson."""
    turns = resolve_thetas(config)
    spectra = diagonalize_blocks(config.n1, turns)
    per_block = [normalized_spacings(s, config.include_wraparound) for s in spectra]
    ens = pool_ensemble(per_block)
    # alternative normalization: each block rescaled to unit mean before pooling
    per_block_unit = np.concatenate([s / s.mean() for s in per_block])

    ks = {ref.value: _r(ks_distance(ens.spacings, CDFS[ref]))
          for ref in (Reference.CUE, Reference.GOE, Reference.POISSON)}
    ks_alt = {ref.value: _r(ks_distance(per_block_unit, CDFS[ref]))
              for ref in (Reference.CUE, Reference.GOE, Reference.POISSON)}
    hist = histogram(ens.spacings, config.bin_width, config.max_s)

    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = []
    files.append(write_csv(out / "spacings.csv", ["s"], ([float(v)] for v in ens.spacings)))
    files.append(write_csv(out / "histogram.csv", ["bin_center", "density"], hist.rows()))
    grid = np.linspace(0.0, config.max_s, 201)
    curves = zip(grid.tolist(), *(PDFS[r](grid).tolist() for r in (Reference.CUE, Reference.GOE, Reference.POISSON)))
    files.append(write_csv(out / "reference_curves.csv", ["s", "cue", "goe", "poisson"], curves))
    files.append(_write_fig1_gnuplot(out / "fig1.gp", config.bin_width))

    expected = len(turns) * (2**config.n1 - (0 if config.include_wraparound else 1))
    data = {
        "params": {
            **_theta_params(config, turns),
            "bin_width": config.bin_width,
            "max_s": config.max_s,
            "include_wraparound": config.include_wraparound,
        },
        "counts": {
            "blocks": len(spectra),
            "spacings": ens.raw_count,
            "expected_spacings": expected,
            "per_block": [len(s) for s in per_block],
            "histogram_overflow": hist.overflow,
        },
        "spacing_count": ens.raw_count,
        "ks": ks,
        "ks_per_block_normalized": ks_alt,
        "raw_mean": _r(ens.raw_mean),
        "degeneracies": [s.degeneracies for s in spectra],
        "residuals": [_r(s.residual) for s in spectra],
        "residual_max": _r(max(s.residual for s in spectra)),
    }
    if ens.raw_count != expected:
        raise VerificationFailure(f"spacing count {ens.raw_count} != {expected}")
    report = ExperimentReport("fig1", data, [p.name for p in files] + ["fig1_report.json"])
    (out / "fig1_report.json").write_text(report.to_json())
    return report


def generic_state_index(spectrum: BlockSpectrum, tol: float = 1e-9) -> int:
    """First eigenstate (sorted by eigenangle) outside the eigenvalue-1 sector.

    Eigenvalue 1 always carries the uniform superposition H|0> = F|0>, whose
    intensities are all exactly 1 and so are not representative.
    """
    a = spectrum.eigenangles
    generic = np.flatnonzero(np.minimum(a, TWO_PI - a) > tol)
    if len(generic) == 0:
        raise ConfigError("block has no eigenstates outside the eigenvalue-1 sector")
    return int(generic[0])


def run_fig23(config: ExperimentConfig) -> ExperimentReport:
    """Intensities and cumulative intensity distribution of one eigenstate."""
    turns = resolve_thetas(config)
    pos, index = config.eigenstate_index
    if not 0 <= pos < len(turns):
        raise ConfigError(f"theta position {pos} out of range for {len(turns)} thetas")
    turn = turns[pos]
    (spectrum,) = diagonalize_blocks(config.n1, [turn])
    if index is None:
        index = generic_state_index(spectrum)
    try:
        rec = intensity_record(spectrum, index)
    except IndexError as exc:
        raise ConfigError(str(exc)) from exc
    xs, xi = cumulative_distribution(rec)
    ks = ks_distance(rec.intensities, exponential_cdf)

    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = [
        write_csv(out / "intensity.csv", ["m", "x"], enumerate(map(float, rec.intensities))),
        write_csv(out / "cumulative.csv", ["x", "xi"], zip(map(float, xs), map(float, xi))),
        _write_fig23_gnuplot(out / "fig23.gp"),
    ]
    data = {
        "params": {**_theta_params(config, [turn]), "state_index": index},
        "eigenangle": _r(spectrum.eigenangles[index]),
        "counts": {"intensities": len(rec.intensities)},
        "intensity_mean": _r(rec.intensities.mean()),
        "ks": {"exponential": _r(ks)},
        "residual_max": _r(spectrum.residual),
    }
    report = ExperimentReport("fig23", data, [p.name for p in files] + ["fig23_report.json"])
    (out / "fig23_report.json").write_text(report.to_json())
    return report


def _check(name: str, value: float, tol: float) -> dict:
    return {
        "name": name,
        "value": float(value),
        "tolerance": tol,
        "passed": bool(value < tol),
        "margin": float(tol - value),
    }


def verification_checks(config: ExperimentConfig) -> list[dict]:
    """Cross-checks between the full operator, its symmetry blocks and S."""
    shape = RegisterShape.minimal(config.n1, config.N, config.x)
    decomp = orbit_decomposition(config.x, config.N)
    classes = distinct_eigenangles(decomp)
    D, N = shape.d1, shape.N
    checks = []

    U = full_operator_U(shape)
    checks.append(_check("unitarity_U", U.unitarity_defect(), 1e-12))
    checks.append(_check("commutator_U_IdxS", commutator_with_shift(U, shape), 1e-12))

    full_angles = np.angle(np.linalg.eigvals(U.entries))
    block_angles, direct_dev, block_spectra = [], 0.0, {}
    for c in classes:
        spec = BlockSpec.from_turns(c.turns, config.n1)
        direct = block_operator_direct(spec).entries
        composed = block_operator_composed(spec).entries
        direct_dev = max(direct_dev, float(np.max(np.abs(direct - composed))))
        sp = eigendecompose_unitary(direct, c.theta)
        block_spectra[c.turns] = sp
        block_angles.extend(list(sp.eigenangles) * c.multiplicity)
    checks.append(_check("direct_vs_composed_blocks", direct_dev, 1e-12))
    checks.append(_check("block_vs_full_spectrum", max_angle_mismatch(full_angles, block_angles), 1e-8))

    pairs = shift_eigenbasis(decomp)
    S = shift_permutation(config.x, N, N)
    vecs = np.array([p.vector for p in pairs]).T
    Sv = np.empty_like(vecs)
    Sv[S, :] = vecs
    lam = np.exp(1j * np.array([p.theta for p in pairs]))
    checks.append(_check("shift_eigen_residual",
                         float(np.max(np.linalg.norm(Sv - vecs * lam, axis=0))), 1e-12))
    checks.append(_check("shift_orthonormality",
                         float(np.max(np.abs(vecs.conj().T @ vecs - np.eye(N)))), 1e-12))
    order_power = np.arange(N)
    for _ in range(decomp.order):
        order_power = S[order_power]
    checks.append(_check("shift_periodicity", float(np.any(order_power != np.arange(N))), 0.5))

    # product states |phi>|s> against the full operator
    prod_res = 0.0
    for p in pairs:
        sp = block_spectra[p.turns % 1]
        states = np.einsum("al,k->akl", sp.eigenvectors, p.vector).reshape(D * N, D)
        lam_b = np.exp(1j * sp.eigenangles)
        prod_res = max(prod_res, float(np.max(np.linalg.norm(U.entries @ states - states * lam_b, axis=0))))
    checks.append(_check("product_eigenstates", prod_res, 1e-10))

    ut = utilde_spectrum(shape, include_trivial=False)
    r = decomp.order
    checks.append(_check("utilde_roots_of_unity",
                         float(sum(c for f, c in ut.items() if (f * r).denominator != 1)), 0.5))
    checks.append(_check("utilde_multiplicity_total", float(abs(sum(ut.values()) - D * N)), 0.5))
    checks.append(_check("utilde_unit_degeneracy", float(max(0, D - ut.get(Fraction(0), 0))), 0.5))
    cyc_angles = np.concatenate([np.full(c, TWO_PI * float(f)) for f, c in ut.items()])
    dense_angles = np.angle(np.linalg.eigvals(full_operator_Utilde(shape).entries))
    checks.append(_check("utilde_vs_dense", max_angle_mismatch(cyc_angles, dense_angles), 1e-8))
    return checks


def run_verify(config: ExperimentConfig) -> ExperimentReport:
    checks = verification_checks(config)
    data = {
        "params": {"n1": config.n1, "N": config.N, "x": config.x},
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    report = ExperimentReport("verify", data, ["verify_report.json"])
    (out / "verify_report.json").write_text(report.to_json())
    failed = [c["name"] for c in checks if not c["passed"]]
    if failed:
        raise VerificationFailure("failed checks: " + ", ".join(failed), report)
    return report


def _write_fig1_gnuplot(path: Path, bin_width: float) -> Path:
    path.write_text(
        "set datafile separator ','\n"
        "set key autotitle columnhead\n"
        "set xlabel 's'\nset ylabel 'P(s)'\n"
        "set style fill transparent solid 0.4\n"
        f"set boxwidth {bin_width}\n"
        "plot 'histogram.csv' using 1:2 with boxes title 'spacings', \\\n"
        "     'reference_curves.csv' using 1:2 with lines lw 2 title 'CUE', \\\n"
        "     'reference_curves.csv' using 1:3 with lines dt 2 title 'GOE', \\\n"
        "     'reference_curves.csv' using 1:4 with lines dt 3 title 'Poisson'\n"
    )
    return path


def _write_fig23_gnuplot(path: Path) -> Path:
    path.write_text(
        "set datafile separator ','\n"
        "set multiplot layout 1,2\n"
        "set xlabel 'm'\nset ylabel 'x'\n"
        "plot 'intensity.csv' using 1:2 with impulses notitle\n"
        "set xlabel 'x'\nset ylabel 'xi(x)'\n"
        "plot 'cumulative.csv' using 1:2 with steps title 'empirical', 1-exp(-x) title '1-exp(-x)'\n"
        "unset multiplot\n"
    )
    return path
