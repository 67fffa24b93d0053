"""Exact integer vector arithmetic and cubic polynomials over Q.

Vectors are plain ``tuple[int, int, int]`` and matrices are tuples of three
row vectors. Python integers never wrap, but every vector entering the
library is checked against the signed 64-bit range so that the vectorised
counting code (which runs on ``numpy.int64``) cannot overflow silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

Vec3 = Tuple[int, int, int]
Mat3 = Tuple[Vec3, Vec3, Vec3]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def check_int64(*values: int) -> None:
    for v in values:
        if not INT64_MIN <= v <= INT64_MAX:
            raise OverflowError(f"integer {v} outside signed 64-bit range")


def vec3(xs: Iterable[int]) -> Vec3:
    v = tuple(int(x) for x in xs)
    if len(v) != 3:
        raise ValueError(f"expected 3 components, got {len(v)}")
    check_int64(*v)
    return v  # type: ignore[return-value]


def mat3(rows: Iterable[Iterable[int]]) -> Mat3:
    m = tuple(vec3(r) for r in rows)
    if len(m) != 3:
        raise ValueError(f"expected 3 rows, got {len(m)}")
    return m  # type: ignore[return-value]


def gcd3(a: int, b: int, c: int) -> int:
    """gcd of absolute values; ``gcd3(0, 0, 0) == 0``."""
    return math.gcd(a, b, c)


def vgcd(v: Vec3) -> int:
    return math.gcd(*v)


def dot(u: Vec3, v: Vec3) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Vec3, v: Vec3) -> Vec3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def add(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def sub(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def scale(k: int, v: Vec3) -> Vec3:
    return (k * v[0], k * v[1], k * v[2])


def det3(m: Mat3) -> int:
    return dot(m[0], cross(m[1], m[2]))


def transpose(m: Mat3) -> Mat3:
    return tuple(zip(*m))  # type: ignore[return-value]


def primitive(v: Vec3) -> Vec3:
    """``v`` divided by the gcd of its components."""
    g = vgcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return (v[0] // g, v[1] // g, v[2] // g)


def format_rational(q: Fraction | int) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(q))


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class EhrhartCubic:
    """``c3 t^3 + c2 t^2 + c1 t + c0`` with exact rational coefficients."""

    c3: Fraction
    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __post_init__(self):
        for name in ("c3", "c2", "c1", "c0"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def from_coefficients(cls, coeffs: Iterable) -> EhrhartCubic:
        """Build from ``(c0, c1, c2, c3)``, lowest degree first."""
        c0, c1, c2, c3 = coeffs
        return cls(c3, c2, c1, c0)

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c3, self.c2, self.c1, self.c0)

    def __call__(self, t: int) -> Fraction:
        return self.eval(t)

    def eval(self, t: int) -> Fraction:
        t = Fraction(t)
        return ((self.c3 * t + self.c2) * t + self.c1) * t + self.c0

    def divide_linear(self, root_num: int, root_den: int = 1):
        """Divide by ``(root_den * t + root_num)``.

        Returns ``(quotient, remainder)`` with the quotient as
        ``(q2, q1, q0)`` coefficients, highest first.
        """
        a, b = Fraction(root_den), Fraction(root_num)
        q2 = self.c3 / a
        q1 = (self.c2 - q2 * b) / a
        q0 = (self.c1 - q1 * b) / a
        rem = self.c0 - q0 * b
        return (q2, q1, q0), rem

    def to_json(self) -> dict:
        return {
            "c3": format_rational(self.c3),
            "c2": format_rational(self.c2),
            "c1": format_rational(self.c1),
            "c0": format_rational(self.c0),
        }

    @classmethod
    def from_json(cls, d: dict) -> EhrhartCubic:
        return cls(*(parse_rational(d[k]) for k in ("c3", "c2", "c1", "c0")))

    def __str__(self) -> str:
        terms = []
        for coef, mono in zip(self.coefficients, ("t^3", "t^2", "t", "")):
            if coef == 0:
                continue
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            body = format_rational(mag) if (mag != 1 or not mono) else ""
            if body and mono and mag.denominator != 1:
                body = f"({body})"
            terms.append((sign, body + mono))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def product_cubic(linear: tuple[int, int], quadratic: tuple[int, int, int]) -> EhrhartCubic:
    """Expand ``(a t + b)(p t^2 + q t + r)``."""
    a, b = linear
    p, q, r = quadratic
    return EhrhartCubic(a * p, a * q + b * p, a * r + b * q, b * r)
