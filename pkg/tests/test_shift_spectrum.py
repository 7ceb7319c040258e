import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from shor_spectra.numtheory import orbit_decomposition
from shor_spectra.operators import shift_matrix
from shor_spectra.shift_spectrum import distinct_eigenangles, shift_eigenbasis


def _check_basis(x, N, pad):
    pairs = shift_eigenbasis(orbit_decomposition(x, N), pad)
    assert len(pairs) == N
    S = shift_matrix(x, N, pad).entries
    V = np.array([p.vector for p in pairs]).T
    assert np.max(np.abs(V.conj().T @ V - np.eye(N))) < 1e-12
    for p in pairs:
        assert np.linalg.norm(S @ p.vector - np.exp(1j * p.theta) * p.vector) < 1e-12
        nz = np.abs(p.vector) > 0
        assert np.allclose(np.abs(p.vector[nz]), 1 / math.sqrt(p.orbit_length), rtol=0, atol=1e-15)
        assert nz.sum() == p.orbit_length
        assert not p.vector[N:].any()
    recon = sum(np.exp(1j * p.theta) * np.outer(p.vector, p.vector.conj()) for p in pairs)
    assert np.max(np.abs(recon[:N, :N] - S[:N, :N])) < 1e-10
    return pairs


def test_n29_eigenbasis():
    pairs = _check_basis(2, 29, 32)
    assert sum(p.orbit_seed == 1 for p in pairs) == 28
    zero = [p for p in pairs if p.orbit_seed == 0]
    assert len(zero) == 1 and zero[0].theta == 0
    assert np.array_equal(zero[0].vector[:29], np.eye(29)[0])


def test_n3_eigenbasis_by_hand():
    pairs = _check_basis(2, 3, 3)
    r2 = 1 / math.sqrt(2)
    expected = [(0.0, [1, 0, 0]), (0.0, [0, r2, r2]), (math.pi, [0, r2, -r2])]
    for p, (theta, vec) in zip(pairs, expected):
        assert p.theta == pytest.approx(theta)
        assert np.allclose(p.vector, vec)


def test_eq9_phase_convention():
    # harmonic j on the seed-1 orbit: component exp(-2 pi i j n / r) on 2**n mod N
    p = shift_eigenbasis(orbit_decomposition(2, 29))[1 + 3]
    for n in range(28):
        assert p.vector[pow(2, n, 29)] == pytest.approx(np.exp(-2j * math.pi * 3 * n / 28) / math.sqrt(28))


def test_distinct_29():
    classes = distinct_eigenangles(orbit_decomposition(2, 29))
    assert len(classes) == 28
    assert [c.multiplicity for c in classes] == [2] + [1] * 27
    assert classes[0].seeds == (0, 1)
    assert [c.turns for c in classes] == [Fraction(k, 28) for k in range(28)]


def test_distinct_31():
    classes = distinct_eigenangles(orbit_decomposition(2, 31))
    assert [c.turns for c in classes] == [Fraction(k, 5) for k in range(5)]
    assert [c.multiplicity for c in classes] == [7, 6, 6, 6, 6]
    _check_basis(2, 31, 32)


def test_distinct_3():
    assert [tuple(c) for c in distinct_eigenangles(orbit_decomposition(2, 3))] == [(0.0, 2), (math.pi, 1)]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([3, 5, 7, 9, 11, 15, 21, 25, 27, 33, 35, 45, 63, 65]), st.sampled_from([2, 4, 7, 8]))
def test_basis_properties(N, x):
    if math.gcd(x, N) != 1:
        return
    _check_basis(x, N, 2 ** (N - 1).bit_length())
    classes = distinct_eigenangles(orbit_decomposition(x, N))
    assert sum(c.multiplicity for c in classes) == N
