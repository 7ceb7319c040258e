"""Orbits of k -> 2k mod N and the exact eigenvectors of the shift operator.

N = 29 has order 28: one long cycle through 1 plus the fixed point 0, so the
eigenvalue 1 of S is doubly degenerate and every other eigenvalue is simple.
N = 31 has order 5 and six 5-cycles, which makes S highly degenerate.
"""

import numpy as np

from shor_spectra import distinct_eigenangles, orbit_decomposition, shift_eigenbasis, shift_matrix

for N in (29, 31):
    d = orbit_decomposition(2, N)
    print(f"N={N}: order r={d.order}, {len(d.orbits)} orbits")
    for o in d.orbits:
        print(f"  seed {o.seed:2d}, length {o.length:2d}: {o.elements}")
    classes = distinct_eigenangles(d)
    print("  eigenangles / 2pi and multiplicities:",
          [(str(c.turns), c.multiplicity) for c in classes])

# Every eigenvector is flat in modulus on its orbit.
pairs = shift_eigenbasis(orbit_decomposition(2, 29))
S = shift_matrix(2, 29, 29).entries
worst = max(np.linalg.norm(S @ p.vector - np.exp(1j * p.theta) * p.vector) for p in pairs)
print(f"max eigen-residual over all 29 shift eigenpairs: {worst:.1e}")
print("moduli of harmonic 5 on the long orbit:", np.unique(np.round(np.abs(pairs[6].vector), 12)))
