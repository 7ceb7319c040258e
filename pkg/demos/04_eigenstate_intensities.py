"""Intensities of one eigenstate of the theta = -20pi/28 block and their CDF.

The uniform superposition is an exact eigenvector of every block (eigenvalue
1); it is flat, so the default picks the next state in eigenangle order.
"""

from pathlib import Path

from shor_spectra.experiments import ExperimentConfig, run_fig23

for index in (None, 0, 500):
    rep = run_fig23(ExperimentConfig(output_dir=Path("fig23_out"), eigenstate_index=(0, index)))
    print(f"state {rep.data['params']['state_index']:4d}: "
          f"max |xi(x) - (1 - e^-x)| = {rep.data['ks']['exponential']:.4f}")
