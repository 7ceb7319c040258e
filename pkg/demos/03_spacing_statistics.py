"""Nearest-neighbour spacings of five blocks at n1=10, N=29 against the CUE surmise.

Writes the histogram, reference curves, JSON report and a gnuplot script to
./fig1_out; `gnuplot -p fig1_out/fig1.gp` draws the figure.
"""

from pathlib import Path

from shor_spectra.experiments import ExperimentConfig, run_fig1

report = run_fig1(ExperimentConfig(output_dir=Path("fig1_out")))
d = report.data
print("thetas (fractions of 2pi):", [t["turns"] for t in d["params"]["thetas"]])
print("spacings:", d["spacing_count"], " raw mean before rescale:", d["raw_mean"])
print("KS distance  CUE {cue:.4f}  GOE {goe:.4f}  Poisson {poisson:.4f}".format(**d["ks"]))
print("files:", report.files)
