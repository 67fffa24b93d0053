"""Lattice cubes as scaled orthogonal integer matrices.

A cube of side ``ell`` with a vertex at the origin is encoded by the integer
matrix whose rows are its three edge vectors ``alpha, beta, gamma`` from that
vertex, so ``m @ m.T == ell**2 * I``. Equivalence is the two-sided action of
the 48 signed permutation matrices: ``m ~ P @ m @ Q``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from latticepoly.exact import (
    Mat3,
    Vec3,
    add,
    det3,
    dot,
    mat3,
    scale,
    sub,
    transpose,
    vgcd,
)


class NotACubeError(ValueError):
    pass


@dataclass(frozen=True)
class CubeMatrix:
    rows: Mat3
    ell: int

    def __post_init__(self):
        _validate(self.rows, self.ell)

    @property
    def alpha(self) -> Vec3:
        return self.rows[0]

    @property
    def beta(self) -> Vec3:
        return self.rows[1]

    @property
    def gamma(self) -> Vec3:
        return self.rows[2]

    def transpose(self) -> CubeMatrix:
        return CubeMatrix(transpose(self.rows), self.ell)

    def scaled(self, k: int) -> CubeMatrix:
        return CubeMatrix(tuple(scale(k, r) for r in self.rows), k * self.ell)

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)

    def to_json(self) -> dict:
        prof = divisor_profile(self)
        return {
            "ell": self.ell,
            "rows": [list(r) for r in self.rows],
            "divisors": prof.to_json(),
            "irreducible": is_irreducible(self),
            "self_dual": is_self_dual(self),
        }

    @classmethod
    def from_json(cls, d: dict) -> CubeMatrix:
        cube = from_rows(d["rows"])
        if cube.ell != d["ell"]:
            raise NotACubeError(f"stored ell {d['ell']} does not match rows (ell={cube.ell})")
        return cube


def _validate(rows: Mat3, ell: int) -> None:
    if ell <= 0:
        raise NotACubeError(f"side must be positive, got {ell}")
    n = ell * ell
    for i in range(3):
        for j in range(3):
            expect = n if i == j else 0
            if dot(rows[i], rows[j]) != expect:
                raise NotACubeError(
                    f"rows {i} and {j}: dot product {dot(rows[i], rows[j])}, expected {expect}"
                )
    if abs(det3(rows)) != ell**3:
        raise NotACubeError("determinant does not match side length")


def from_rows(rows) -> CubeMatrix:
    """Validate an integer 3x3 matrix as a cube and infer its side."""
    m = mat3(rows)
    norms = [dot(r, r) for r in m]
    if len(set(norms)) != 1:
        raise NotACubeError(f"rows have unequal squared norms {norms}")
    ell = math.isqrt(norms[0])
    if ell * ell != norms[0] or ell == 0:
        raise NotACubeError(f"squared row norm {norms[0]} is not a positive perfect square")
    return CubeMatrix(m, ell)


def rodrigues(a: int, b: int, c: int, d: int) -> CubeMatrix:
    """Cube from the Rodrigues/Euler four-parameter orthogonal matrix.

    The matrix is scaled by ``a^2+b^2+c^2+d^2`` to clear denominators, then
    the nine entries and the scale are divided by their common gcd.
    """
    if a == b == c == d == 0:
        raise ValueError("parameters must not all be zero")
    s = a * a + b * b + c * c + d * d
    m = (
        (a * a + b * b - c * c - d * d, 2 * (b * c + d * a), 2 * (b * d - c * a)),
        (2 * (b * c - d * a), a * a - b * b + c * c - d * d, 2 * (c * d + b * a)),
        (2 * (b * d + c * a), 2 * (c * d - b * a), a * a - b * b - c * c + d * d),
    )
    g = math.gcd(s, *itertools.chain.from_iterable(m))
    rows = mat3(tuple(x // g for x in r) for r in m)
    return CubeMatrix(rows, s // g)


def pythagorean_cube(a: int, b: int, c: int) -> CubeMatrix:
    """The cube over the square ``(0,0),(a,b),(a-b,a+b),(-b,a)`` lifted by ``c``."""
    if a * a + b * b != c * c or c <= 0:
        raise ValueError(f"({a}, {b}, {c}) is not a Pythagorean triple")
    if math.gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}, {c}) is not primitive")
    return CubeMatrix(((a, b, 0), (-b, a, 0), (0, 0, c)), c)


@dataclass(frozen=True)
class DivisorProfile:
    """Every gcd invariant of a cube.

    ``d``: gcds of the rows. ``d_prime``: ``ell // d``. ``D``: gcds of
    ``a+b+g, a+b-g, a-b+g, -a+b+g``. ``e``: gcds of ``a+b, b+g, g+a,
    a-b, b-g, g-a``. ``col``: gcds of the columns.
    """

    d: tuple[int, int, int]
    d_prime: tuple[int, int, int]
    D: tuple[int, int, int, int]
    e: tuple[int, int, int, int, int, int]
    col: tuple[int, int, int]
    # gcds of a-b, a-g, g-b: the pairwise row differences
    diff: tuple[int, int, int]

    def to_json(self) -> dict:
        return {
            "d": list(self.d),
            "D": list(self.D),
            "e": list(self.e),
            "col": list(self.col),
        }


def divisor_profile(cube: CubeMatrix) -> DivisorProfile:
    a, b, g = cube.rows
    d = (vgcd(a), vgcd(b), vgcd(g))
    D = (
        vgcd(add(add(a, b), g)),
        vgcd(sub(add(a, b), g)),
        vgcd(add(sub(a, b), g)),
        vgcd(add(sub(b, a), g)),
    )
    e = (
        vgcd(add(a, b)),
        vgcd(add(b, g)),
        vgcd(add(g, a)),
        vgcd(sub(a, b)),
        vgcd(sub(b, g)),
        vgcd(sub(g, a)),
    )
    col = tuple(vgcd(c) for c in transpose(cube.rows))
    diff = (vgcd(sub(a, b)), vgcd(sub(a, g)), vgcd(sub(g, b)))
    return DivisorProfile(
        d=d,
        d_prime=tuple(cube.ell // x for x in d),
        D=D,
        e=e,
        col=col,
        diff=diff,
    )


@lru_cache(maxsize=None)
def signed_permutations() -> np.ndarray:
    """The 48 signed permutation matrices, shape ``(48, 3, 3)``."""
    mats = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            m = np.zeros((3, 3), dtype=np.int64)
            for i in range(3):
                m[i, perm[i]] = signs[i]
            mats.append(m)
    out = np.array(mats)
    out.setflags(write=False)
    return out


def orbit(cube: CubeMatrix) -> np.ndarray:
    """All ``P @ m @ Q`` for ``P, Q`` signed permutations, shape ``(2304, 9)``."""
    s0 = signed_permutations()
    return np.einsum("aij,jk,bkl->abil", s0, cube.as_array(), s0).reshape(-1, 9)


def canonical_key(cube: CubeMatrix) -> tuple[int, ...]:
    flat = orbit(cube)
    # lexsort sorts by the last key first
    idx = np.lexsort(flat.T[::-1])[0]
    return tuple(int(x) for x in flat[idx])


def canonicalize(cube: CubeMatrix) -> CubeMatrix:
    """Lexicographically smallest row-major matrix in the two-sided orbit."""
    k = canonical_key(cube)
    return CubeMatrix((k[0:3], k[3:6], k[6:9]), cube.ell)


def is_irreducible(cube: CubeMatrix) -> bool:
    return math.gcd(*itertools.chain.from_iterable(cube.rows)) == 1


def is_self_dual(cube: CubeMatrix) -> bool:
    """Whether the transpose (``ell^2`` times the inverse) is equivalent to the cube."""
    return canonical_key(cube.transpose()) == canonical_key(cube)


def is_scaled_unit_cube(cube: CubeMatrix) -> bool:
    return all(abs(x) in (0, cube.ell) for r in cube.rows for x in r)
