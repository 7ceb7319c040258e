"""The full order-finding unitary commutes with Id x S and splits into blocks.

Each block F^{-1} Lambda_theta H is 2**n1 x 2**n1 and can be written down
entry by entry with a product over the bits of the column index.
"""

import numpy as np

from shor_spectra import (
    BlockSpec,
    RegisterShape,
    block_operator_composed,
    block_operator_direct,
    commutator_with_shift,
    distinct_eigenangles,
    full_operator_U,
    orbit_decomposition,
)
from shor_spectra.spectral_stats import max_angle_mismatch

shape = RegisterShape.minimal(n1=4, N=29)
U = full_operator_U(shape)
print(f"U is {U.dim} x {U.dim}; unitarity defect {U.unitarity_defect():.1e}")
print(f"max |[U, Id x S]| = {commutator_with_shift(U, shape):.1e}")

full = np.angle(np.linalg.eigvals(U.entries))
blocks = []
for c in distinct_eigenangles(orbit_decomposition(2, 29)):
    spec = BlockSpec.from_turns(c.turns, shape.n1)
    direct = block_operator_direct(spec).entries
    assert np.allclose(direct, block_operator_composed(spec).entries, atol=1e-12)
    blocks.extend(list(np.angle(np.linalg.eigvals(direct))) * c.multiplicity)
print(f"{len(blocks)} block eigenvalues vs {len(full)} full eigenvalues, "
      f"largest mismatch {max_angle_mismatch(full, blocks):.1e}")
