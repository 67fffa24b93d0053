from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latticepoly.exact import (
    EhrhartCubic,
    cross,
    det3,
    dot,
    format_rational,
    gcd3,
    parse_rational,
    product_cubic,
    vec3,
)


@pytest.mark.parametrize(
    "args, expected",
    [((0, 0, 5), 5), ((420, 1015, -120), 5), ((-65, 156, 1092), 13), ((0, 0, 0), 0), ((-4, 6, -8), 2)],
)
def test_gcd3(args, expected):
    assert gcd3(*args) == expected


def test_vector_ops():
    assert cross((1, 0, 0), (0, 1, 0)) == (0, 0, 1)
    assert dot((4, 3, 0), (3, -4, 0)) == 0
    assert det3(((-1, 2, 2), (2, -1, 2), (2, 2, -1))) == 27


def test_det3_matches_cofactor_expansion():
    m = ((2, -3, 5), (7, 0, -1), (4, 6, 9))
    by_hand = 2 * (0 * 9 - (-1) * 6) - (-3) * (7 * 9 - (-1) * 4) + 5 * (7 * 6 - 0 * 4)
    assert det3(m) == by_hand


def test_vec3_rejects_out_of_range():
    with pytest.raises(OverflowError):
        vec3((2**63, 0, 0))
    with pytest.raises(ValueError):
        vec3((1, 2))


def test_eval():
    cube = EhrhartCubic(1, 3, 3, 1)
    assert cube.eval(2) == 27
    # (3t+1)(9t^2+1)
    assert product_cubic((3, 1), (9, 0, 1)).eval(1) == 40
    o1 = EhrhartCubic(Fraction(4, 3), 2, Fraction(8, 3), 1)
    assert o1(2) == 25


def test_rational_serialization():
    assert format_rational(Fraction(13, 2)) == "13/2"
    assert format_rational(Fraction(-4, 1)) == "-4"
    assert parse_rational("-16/3") == Fraction(-16, 3)
    p = EhrhartCubic(Fraction(125, 3), 5, Fraction(1, 3), 1)
    assert EhrhartCubic.from_json(p.to_json()) == p
    assert p.to_json() == {"c3": "125/3", "c2": "5", "c1": "1/3", "c0": "1"}


def test_str():
    assert str(EhrhartCubic(36, 9, -1, 1)) == "36t^3 + 9t^2 - t + 1"
    assert str(EhrhartCubic(Fraction(1, 3), 1, Fraction(5, 3), 1)) == "(1/3)t^3 + t^2 + (5/3)t + 1"


def test_divide_linear():
    p = product_cubic((7, 1), (49, -4, 1))
    q, rem = p.divide_linear(1, 7)
    assert rem == 0 and q == (49, -4, 1)
    _, rem = EhrhartCubic(1, 0, 0, 1).divide_linear(1, 2)
    assert rem != 0


small = st.fractions(min_value=-50, max_value=50, max_denominator=30)


@given(small, small, small)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    s = a + b * c
    from math import gcd

    assert gcd(s.numerator, s.denominator) == 1 and s.denominator > 0


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20), st.integers(-30, 30))
def test_eval_is_horner_of_expanded(a, b, c, d, t):
    p = EhrhartCubic(a, b, c, d)
    assert p.eval(t) == a * t**3 + b * t**2 + c * t + d
