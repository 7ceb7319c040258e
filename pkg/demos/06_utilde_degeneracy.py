"""With a Fourier transform in place of the Hadamard gates the spectrum collapses
onto roots of unity: U-tilde is similar to U_x, a permutation.
"""

import numpy as np

from shor_spectra import RegisterShape, full_operator_Utilde, utilde_spectrum
from shor_spectra.spectral_stats import max_angle_mismatch
from shor_spectra.operators import utilde_eigenvalues

shape = RegisterShape(n1=2, n2=5, N=31)
spec = utilde_spectrum(shape, include_trivial=False)
print("eigenangle/2pi: multiplicity ->", {str(k): v for k, v in spec.items()})
print("including the k >= N sector:", {str(k): v for k, v in utilde_spectrum(shape).items()})
dense = np.linalg.eigvals(full_operator_Utilde(shape).entries)
print(f"cycle count vs dense diagonalization: {max_angle_mismatch(np.angle(utilde_eigenvalues(shape, False)), np.angle(dense)):.1e}")
