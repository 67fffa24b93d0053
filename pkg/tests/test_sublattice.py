import itertools
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latticepoly.catalog import known_cube
from latticepoly.cubes import divisor_profile
from latticepoly.exact import cross, dot, primitive
from latticepoly.sublattice import ext_gcd, fundamental_area_sq, plane_basis


def _area_sq(b):
    n = cross(b.u, b.tau)
    return dot(n, n)


def test_examples():
    b = plane_basis(0, 0, 1)
    assert (b.u, b.tau) == ((1, 0, 0), (0, 1, 0))
    b = plane_basis(2, 1, 2)
    assert (b.u, b.tau) == ((-1, 2, 0), (0, -2, 1))
    assert _area_sq(b) == 9
    assert _area_sq(plane_basis(1, 1, 1)) == 3


def test_rejects_non_primitive():
    with pytest.raises(ValueError):
        plane_basis(2, 4, 6)
    with pytest.raises(ValueError):
        fundamental_area_sq(0, 0, 0)


@given(st.integers(-500, 500), st.integers(-500, 500))
def test_ext_gcd(a, b):
    g, k, l = ext_gcd(a, b)
    assert g == math.gcd(a, b) and k * a + l * b == g


def test_fundamental_area():
    assert fundamental_area_sq(1, 0, 0) == 1
    assert fundamental_area_sq(2, 1, 2) == 9
    # face normal of a cube, reduced: area is the co-divisor ell / d
    c = known_cube("C5")
    prof = divisor_profile(c)
    for r, dp in zip(c.rows, prof.d_prime):
        assert fundamental_area_sq(*primitive(r)) == dp**2


def _random_primitive(rng):
    while True:
        v = tuple(rng.randint(-100, 100) for _ in range(3))
        if math.gcd(*v) == 1:
            return v


def test_random_normals_area_identity():
    rng = random.Random(2024)
    for _ in range(1000):
        n = _random_primitive(rng)
        b = plane_basis(*n)
        assert dot(n, b.u) == 0 and dot(n, b.tau) == 0
        assert _area_sq(b) == dot(n, n)


@pytest.mark.parametrize("n", [(2, 1, 2), (1, 1, 1), (3, -5, 7), (0, 4, 5), (6, 10, 15), (1, 0, 0), (0, -3, 2)])
def test_basis_generates_every_plane_point(n):
    b = plane_basis(*n)
    for p in itertools.product(range(-10, 11), repeat=3):
        if dot(n, p) == 0 and dot(p, p) <= 100:
            x, y = b.coordinates(p)
            assert tuple(x * u + y * t for u, t in zip(b.u, b.tau)) == p
