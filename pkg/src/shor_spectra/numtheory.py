"""Integer arithmetic behind the shift operator k -> x*k mod N.

All functions work on Python ints, so results are exact for any size of
modulus or exponent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotCoprimeError


@dataclass(frozen=True)
class Orbit:
    """One cycle of k -> x*k mod N, listed in powers-of-x order from its seed."""

    seed: int
    elements: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class OrbitDecomposition:
    modulus: int
    base: int
    order: int
    orbits: tuple[Orbit, ...]

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "base": self.base,
            "order": self.order,
            "orbits": [
                {"seed": o.seed, "length": o.length, "elements": list(o.elements)}
                for o in self.orbits
            ],
        }


def gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def _check_coprime(x: int, N: int) -> None:
    if math.gcd(x, N) != 1:
        raise NotCoprimeError(f"base {x} is not coprime to modulus {N}")


def mod_exp(x: int, j: int, N: int) -> int:
    """x**j mod N by square-and-multiply (delegates to the builtin three-arg pow)."""
    if N < 2:
        raise ValueError("modulus must be >= 2")
    if j < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(x, j, N)


def mult_order(x: int, N: int) -> int:
    """Smallest r > 0 with x**r = 1 (mod N)."""
    _check_coprime(x, N)
    x %= N
    r, acc = 1, x
    while acc != 1:
        acc = acc * x % N
        r += 1
    return r


def orbit_decomposition(x: int, N: int) -> OrbitDecomposition:
    """Partition {0, ..., N-1} into cycles of multiplication by x mod N.

    Orbits are returned in increasing order of their seed (smallest element).
    Scanning k upward means the first unseen k is always the smallest member
    of its cycle.
    """
    if N < 3 or N % 2 == 0:
        raise ValueError(f"modulus must be odd and >= 3, got {N}")
    _check_coprime(x, N)
    seen = bytearray(N)
    orbits = []
    for k in range(N):
        if seen[k]:
            continue
        cycle = []
        e = k
        while not seen[e]:
            seen[e] = 1
            cycle.append(e)
            e = e * x % N
        orbits.append(Orbit(seed=k, elements=tuple(cycle)))
    return OrbitDecomposition(
        modulus=N, base=x, order=mult_order(x, N), orbits=tuple(orbits)
    )
