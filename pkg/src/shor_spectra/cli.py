"""Command line entry point: ``shor-spectra <subcommand> [options]``.

Exit codes: 0 success, 2 configuration error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import NotCoprimeError, ShorSpectraError, VerificationFailure
from .experiments import ExperimentConfig, run_fig1, run_fig23, run_verify
from .numtheory import orbit_decomposition
from .serialization import fmt
from .shift_spectrum import distinct_eigenangles
from .structure import tm_fourier_column

EXIT_CONFIG = 2
EXIT_VERIFY = 3


def parse_thetas(text: str):
    """``paper`` / ``all`` / ``seeds`` or comma-separated ``p/q`` meaning 2*pi*p/q."""
    text = text.strip()
    if text in ("paper", "all", "seeds"):
        return text
    try:
        return [Fraction(tok.strip()) for tok in text.split(",") if tok.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad theta list {text!r}: {exc}") from exc


def _common(p: argparse.ArgumentParser, n1: int | None = 10, thetas: bool = False) -> None:
    if n1 is not None:
        p.add_argument("--n1", type=int, default=n1, help="first-register qubits")
    p.add_argument("--modulus", "-N", type=int, default=29, help="the odd integer N")
    p.add_argument("--base", "-x", type=int, default=2, help="base x coprime to N")
    if thetas:
        p.add_argument("--thetas", type=parse_thetas, default="paper",
                       help="'paper', 'all', 'seeds' or comma-separated p/q (theta = 2 pi p/q)")
        p.add_argument("--out", type=Path, default=Path("out"), help="output directory")
        p.add_argument("--bins", type=float, default=0.25, help="histogram bin width")
        p.add_argument("--wraparound", action="store_true",
                       help="include the spacing across angle 0")
        p.add_argument("--seed-index", type=int, default=None,
                       help="eigenstate index within the first theta block (fig23)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shor-spectra", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    _common(sub.add_parser("orbits", help="orbit decomposition of k -> x k mod N as JSON"), n1=None)
    _common(sub.add_parser("shift-spectrum", help="distinct eigenangles of S as JSON"), n1=None)
    _common(sub.add_parser("fig1", help="spacing distribution vs CUE/GOE/Poisson"), thetas=True)
    _common(sub.add_parser("fig23", help="eigenstate intensity statistics"), thetas=True)
    p = sub.add_parser("verify", help="symmetry and block-diagonalization cross-checks")
    _common(p, n1=5, thetas=True)
    tm = sub.add_parser("thue-morse", help="Fourier column of the Thue-Morse sequence as CSV")
    tm.add_argument("--n1", type=int, default=6)
    tm.add_argument("--out", type=Path, default=None, help="write CSV here instead of stdout")
    return parser


def _config(args) -> ExperimentConfig:
    return ExperimentConfig(
        n1=args.n1,
        N=args.modulus,
        x=args.base,
        thetas=args.thetas,
        bin_width=args.bins,
        include_wraparound=args.wraparound,
        output_dir=args.out,
        eigenstate_index=(0, args.seed_index),
    )


def _thue_morse_csv(n1: int) -> str:
    col = tm_fourier_column(n1)
    inten = len(col) * np.abs(col) ** 2
    lines = ["k,re,im,intensity"]
    lines += [f"{k},{fmt(c.real)},{fmt(c.imag)},{fmt(i)}" for k, (c, i) in enumerate(zip(col, inten))]
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "orbits":
            print(json.dumps(orbit_decomposition(args.base, args.modulus).to_dict()))
        elif args.command == "shift-spectrum":
            classes = distinct_eigenangles(orbit_decomposition(args.base, args.modulus))
            print(json.dumps([
                {"theta": c.theta, "turns": f"{c.turns.numerator}/{c.turns.denominator}",
                 "multiplicity": c.multiplicity, "seeds": list(c.seeds)}
                for c in classes
            ]))
        elif args.command == "thue-morse":
            text = _thue_morse_csv(args.n1)
            if args.out:
                args.out.write_text(text)
            else:
                sys.stdout.write(text)
        else:
            runner = {"fig1": run_fig1, "fig23": run_fig23, "verify": run_verify}[args.command]
            report = runner(_config(args))
            sys.stdout.write(report.to_json())
    except VerificationFailure as exc:
        if exc.report is not None:
            sys.stdout.write(exc.report.to_json())
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (ShorSpectraError, NotCoprimeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return 0


if __name__ == "__main__":
    sys.exit(main())
