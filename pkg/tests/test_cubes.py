import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticepoly.catalog import cubes_of_side, known_cube
from latticepoly.cubes import (
    CubeMatrix,
    NotACubeError,
    canonicalize,
    divisor_profile,
    from_rows,
    is_irreducible,
    is_self_dual,
    pythagorean_cube,
    rodrigues,
    signed_permutations,
)
from latticepoly.exact import det3, dot
from latticepoly.reference import KNOWN_CUBES


def _apply(P, m, Q):
    r = P @ np.array(m, dtype=np.int64) @ Q
    return tuple(tuple(int(x) for x in row) for row in r)


def test_signed_permutations_form_the_group():
    s0 = signed_permutations()
    assert s0.shape == (48, 3, 3)
    keys = {tuple(m.ravel()) for m in s0}
    assert len(keys) == 48
    for a, b in itertools.product(s0[:6], s0):
        assert tuple((a @ b).ravel()) in keys


@pytest.mark.parametrize("name", sorted(KNOWN_CUBES))
def test_known_cubes_valid(name):
    c = known_cube(name)
    m = np.array(c.rows)
    assert (m @ m.T == c.ell**2 * np.eye(3, dtype=int)).all()
    assert abs(det3(c.rows)) == c.ell**3
    for d in divisor_profile(c).d:
        assert c.ell % d == 0


def test_from_rows():
    assert from_rows(KNOWN_CUBES["C3"]).ell == 3
    assert from_rows(((1, 0, 0), (0, 1, 0), (0, 0, 1))).ell == 1
    with pytest.raises(NotACubeError):
        from_rows(((1, 1, 0), (0, 1, 1), (1, 0, 1)))
    with pytest.raises(NotACubeError):
        from_rows(((1, 1, 0), (1, -1, 0), (0, 0, 1)))  # unequal norms
    with pytest.raises(NotACubeError):
        from_rows(((1, 1, 0), (1, -1, 0), (0, 1, 1)))  # norm 2 not a square


def test_rodrigues_examples():
    assert rodrigues(1, 0, 0, 0).rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    c = rodrigues(1, 1, 1, 0)
    assert c.ell == 3 and c.rows == ((1, 2, -2), (2, 1, 2), (2, -2, -1))
    assert canonicalize(c) == canonicalize(known_cube("C3"))
    c = rodrigues(2, 1, 0, 0)
    assert c.ell == 5 and c.rows == ((5, 0, 0), (0, 3, 4), (0, -4, 3))
    assert canonicalize(c) == canonicalize(known_cube("C5"))
    with pytest.raises(ValueError):
        rodrigues(0, 0, 0, 0)


@given(st.tuples(*[st.integers(-12, 12)] * 4).filter(any))
def test_rodrigues_always_valid(p):
    c = rodrigues(*p)
    assert from_rows(c.rows) == c


def test_pythagorean_cube():
    assert pythagorean_cube(4, 3, 5).rows == ((4, 3, 0), (-3, 4, 0), (0, 0, 5))
    assert pythagorean_cube(5, 12, 13).rows == ((5, 12, 0), (-12, 5, 0), (0, 0, 13))
    with pytest.raises(ValueError, match="primitive"):
        pythagorean_cube(6, 8, 10)
    with pytest.raises(ValueError, match="Pythagorean"):
        pythagorean_cube(2, 3, 4)
    assert canonicalize(pythagorean_cube(5, 12, 13)) == canonicalize(known_cube("C13hat"))


def test_divisor_profile_examples():
    p = divisor_profile(known_cube("C1105"))
    assert p.d == (13, 5, 17) and sum(p.d) == 35
    assert p.col == (5, 1, 1) and sum(p.col) == 7
    p = divisor_profile(known_cube("C3"))
    assert (p.d, p.D, p.e) == ((1, 1, 1), (3, 1, 1, 1), (1, 1, 1, 3, 3, 3))
    p = divisor_profile(known_cube("C1"))
    assert (p.d, p.D, p.e) == ((1, 1, 1), (1, 1, 1, 1), (1,) * 6)
    assert divisor_profile(known_cube("C5")).d_prime == (5, 5, 1)


def test_canonicalize_examples():
    c3 = known_cube("C3")
    k = canonicalize(c3)
    for P in signed_permutations():
        assert canonicalize(CubeMatrix(_apply(P, c3.rows, np.eye(3, dtype=np.int64)), 3)) == k
    assert canonicalize(known_cube("C13")) != canonicalize(known_cube("C13hat"))
    assert canonicalize(k) == k


@settings(max_examples=60)
@given(st.sampled_from(sorted(n for n in KNOWN_CUBES if n != "C1105")), st.integers(0, 47), st.integers(0, 47))
def test_orbit_members_share_canonical_form_and_profile(name, i, j):
    c = known_cube(name)
    s0 = signed_permutations()
    moved = CubeMatrix(_apply(s0[i], c.rows, s0[j]), c.ell)
    assert canonicalize(moved) == canonicalize(c)
    # right action keeps row gcds, left action permutes them
    assert sorted(divisor_profile(moved).d) == sorted(divisor_profile(c).d)


def test_irreducible():
    assert is_irreducible(known_cube("C3"))
    assert not is_irreducible(known_cube("C1").scaled(3))
    assert is_irreducible(known_cube("C1105"))


def test_self_dual():
    assert is_self_dual(known_cube("C1"))
    assert is_self_dual(known_cube("C5"))
    assert not is_self_dual(known_cube("C1105"))


def test_self_dual_cubes_have_equal_row_and_column_sums():
    seen = 0
    for ell in range(1, 50, 2):
        for c in cubes_of_side(ell, max_side=50):
            if is_self_dual(c):
                p = divisor_profile(c)
                assert sum(p.d) == sum(p.col), c
                seen += 1
    assert seen > 20


def test_random_rows_mostly_rejected():
    rng = random.Random(7)
    for _ in range(200):
        rows = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        try:
            c = from_rows(rows)
        except NotACubeError:
            continue
        assert all(dot(c.rows[i], c.rows[j]) == (c.ell**2 if i == j else 0) for i in range(3) for j in range(3))


def test_json_roundtrip():
    c = known_cube("C11")
    d = c.to_json()
    assert set(d) == {"ell", "rows", "divisors", "irreducible", "self_dual"}
    assert CubeMatrix.from_json(d) == c
