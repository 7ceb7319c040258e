import numpy as np
import pytest

from shor_spectra.operators import BlockSpec, block_operator_direct
from shor_spectra.structure import thue_morse, tm_dft, tm_fourier_column, tm_peak_scaling


def _explicit_dft(values):
    """O(D^2) sum, independent of numpy.fft."""
    D = len(values)
    k = np.arange(D)
    W = np.exp(-2j * np.pi * np.outer(k, k) / D)
    return W @ values / D


def test_thue_morse_values():
    assert thue_morse(1).values.tolist() == [1, -1]
    assert thue_morse(2).values.tolist() == [1, -1, -1, 1]
    for n1 in range(1, 12):
        t = thue_morse(n1).values
        assert np.array_equal(t[len(t) // 2:], -t[: len(t) // 2])


def test_tm_column_small():
    assert tm_fourier_column(1)[1] == pytest.approx(1.0)
    for n1 in range(1, 11):
        assert abs(tm_fourier_column(n1)[0]) < 1e-15


@pytest.mark.parametrize("n1", range(1, 11))
def test_tm_column_identities(n1):
    col = tm_fourier_column(n1)
    assert np.max(np.abs(col - _explicit_dft(thue_morse(n1).values))) < 1e-12
    assert np.max(np.abs(col - tm_dft(n1))) < 1e-12
    block = block_operator_direct(BlockSpec(0.0, n1)).entries
    assert np.max(np.abs(col - block[:, -1])) < 1e-12
    assert np.linalg.norm(col) == pytest.approx(1.0, abs=1e-12)


def test_peak_scaling():
    rows = tm_peak_scaling(range(1, 13))
    assert rows[0] == (1, pytest.approx(2.0))
    col2 = _explicit_dft(thue_morse(2).values)
    assert rows[1][1] == pytest.approx(4 * np.max(np.abs(col2) ** 2))
    peaks = [p for _, p in rows]
    assert all(b >= a for a, b in zip(peaks, peaks[1:]))
