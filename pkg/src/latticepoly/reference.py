"""Reference cubes and their known Ehrhart polynomials.

These literal matrices and polynomials are the golden data for the test
suite and for ``verify``; nothing in the library derives from them.
"""

from __future__ import annotations

import math
from fractions import Fraction as F

from latticepoly.exact import EhrhartCubic, product_cubic

# rows are the edge vectors from the origin vertex
KNOWN_CUBES: dict[str, tuple] = {
    "C1": ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    "C3": ((-1, 2, 2), (2, -1, 2), (2, 2, -1)),
    "C5": ((4, 3, 0), (3, -4, 0), (0, 0, 5)),
    "C7": ((-2, 6, 3), (3, -2, 6), (6, 3, -2)),
    "C9": ((7, 4, -4), (4, 1, 8), (-4, 8, 1)),
    "C11": ((2, 9, 6), (9, 2, -6), (6, -6, 7)),
    "C13": ((-3, 12, 4), (4, -3, 12), (12, 4, -3)),
    "C13hat": ((5, 12, 0), (12, -5, 0), (0, 0, 13)),
    # smallest side where all three row gcds exceed 1
    "C1105": ((-65, 156, 1092), (420, 1015, -120), (1020, -408, 119)),
}

# L(C, t) = (ell t + 1)(ell^2 t^2 + alpha t + 1); values of alpha
KNOWN_CUBE_ALPHA: dict[str, int] = {
    "C1": 2,
    "C3": 0,
    "C5": 2,
    "C7": -4,
    "C9": -6,
    "C11": -8,
    "C13": -10,
    "C13hat": 2,
}

# (tetrahedron on vertices 0, a+b, b+g, g+a; octahedron on +-a, +-b, +-g)
KNOWN_TETRA_OCTA: dict[str, tuple[EhrhartCubic, EhrhartCubic]] = {
    "C1": (
        EhrhartCubic(F(1, 3), 1, F(5, 3), 1),
        EhrhartCubic(F(4, 3), 2, F(8, 3), 1),
    ),
    "C3": (
        EhrhartCubic(9, F(9, 2), F(13, 2), 1),
        EhrhartCubic(36, 9, -1, 1),
    ),
    "C5": (
        EhrhartCubic(F(125, 3), 5, F(1, 3), 1),
        EhrhartCubic(F(500, 3), 10, F(16, 3), 1),
    ),
}

# primitive Pythagorean triples (a, b, c) with a^2 + b^2 = c^2
PYTHAGOREAN_TRIPLES = ((3, 4, 5), (5, 12, 13), (8, 15, 17))


def known_cube_polynomial(name: str) -> EhrhartCubic:
    r = KNOWN_CUBES[name][0]
    ell = math.isqrt(r[0] ** 2 + r[1] ** 2 + r[2] ** 2)
    return product_cubic((ell, 1), (ell * ell, KNOWN_CUBE_ALPHA[name], 1))


def pythagorean_polynomial(c: int) -> EhrhartCubic:
    """``(c t + 1)(c^2 t^2 + 2 t + 1)``."""
    return product_cubic((c, 1), (c * c, 2, 1))

