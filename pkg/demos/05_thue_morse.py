"""The last column of F^{-1} H is the Fourier transform of the Thue-Morse signs."""

import numpy as np

from shor_spectra import BlockSpec, block_operator_direct, thue_morse, tm_fourier_column, tm_peak_scaling

n1 = 8
col = tm_fourier_column(n1)
fft = np.fft.fft(thue_morse(n1).values) / 2**n1
last = block_operator_direct(BlockSpec(0.0, n1)).entries[:, -1]
print(f"product formula vs FFT: {np.max(np.abs(col - fft)):.1e}")
print(f"product formula vs block column: {np.max(np.abs(col - last)):.1e}")
print("largest normalized intensity per n1:")
for n, peak in tm_peak_scaling(range(2, 17, 2)):
    print(f"  n1={n:2d}  {peak:10.3f}")
