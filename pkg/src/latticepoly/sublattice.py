"""Explicit basis of the plane sublattice ``{x in Z^3 : a x + b y + c z = 0}``."""

from __future__ import annotations

import math
from dataclasses import dataclass

from latticepoly.exact import Vec3, cross, dot, gcd3


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, k, l)`` with ``k*a + l*b == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class PlaneBasis:
    normal: Vec3
    u: Vec3
    tau: Vec3

    def coordinates(self, p: Vec3) -> tuple[int, int]:
        """Integer coordinates of ``p`` in the basis ``(u, tau)``.

        Raises ``ValueError`` if ``p`` is not in the lattice spanned by the basis.
        """
        if dot(self.normal, p) != 0:
            raise ValueError(f"{p} is not in the plane")
        n = cross(self.u, self.tau)
        nn = dot(n, n)
        x, rx = divmod(dot(cross(p, self.tau), n), nn)
        y, ry = divmod(dot(cross(self.u, p), n), nn)
        if rx or ry:
            raise ValueError(f"{p} is not an integer combination of the basis")
        return x, y


def plane_basis(a: int, b: int, c: int) -> PlaneBasis:
    if gcd3(a, b, c) != 1:
        raise ValueError(f"normal ({a}, {b}, {c}) is not primitive")
    normal = (a, b, c)
    zeros = [i for i, x in enumerate(normal) if x == 0]
    if len(zeros) == 2:
        units = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        return PlaneBasis(normal, units[zeros[0]], units[zeros[1]])

    omega, k, l = ext_gcd(a, b)
    u = (-b // omega, a // omega, 0)
    g_ac = math.gcd(a, c)
    g_bc = math.gcd(b, c)
    v = (-c // g_ac, 0, a // g_ac)
    w = (0, -c // g_bc, b // g_bc)
    # tau = gcd(a,c) k v + gcd(b,c) l w, which simplifies to k(-c,0,a) + l(0,-c,b)
    tau = (
        g_ac * k * v[0] + g_bc * l * w[0],
        g_ac * k * v[1] + g_bc * l * w[1],
        g_ac * k * v[2] + g_bc * l * w[2],
    )
    return PlaneBasis(normal, u, tau)


def fundamental_area_sq(a: int, b: int, c: int) -> int:
    """Squared area of a fundamental parallelogram of the plane sublattice."""
    if gcd3(a, b, c) != 1:
        raise ValueError(f"normal ({a}, {b}, {c}) is not primitive")
    return a * a + b * b + c * c
