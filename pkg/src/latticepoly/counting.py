"""Exact lattice-point counting in dilated polytopes.

The main path walks the integer bounding box column by column: for fixed
``(x, y)`` every halfspace with a nonzero ``z`` coefficient bounds ``z`` by
an exact floor/ceil division, so the number of points in the column is an
interval length. This is vectorised with numpy over the ``(x, y)`` grid and
may be split into disjoint ``x`` slabs run on a thread pool; slab totals are
integers, so the sum is identical for any thread count.

:func:`count_pointwise` tests every point of the box one at a time and serves
as the independent oracle for the column scan.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from latticepoly.cubes import CubeMatrix
from latticepoly.exact import Vec3, dot, primitive, sub, vgcd
from latticepoly.polytope import Halfspace, LatticePolytope, dilate

# keep every intermediate of the int64 column scan well inside range
_SAFE_BOUND = 2**60


@dataclass(frozen=True)
class CountResult:
    closed: int
    interior: int
    dilation: int

    @property
    def boundary(self) -> int:
        return self.closed - self.interior

    def to_json(self) -> dict:
        return {
            "dilation": self.dilation,
            "closed": self.closed,
            "interior": self.interior,
            "boundary": self.boundary,
        }


def _check_range(halfspaces, lo, hi) -> None:
    coord = max(max(abs(v) for v in lo), max(abs(v) for v in hi)) + 1
    for n, c in halfspaces:
        if 3 * max(abs(x) for x in n) * coord + abs(c) + 1 > _SAFE_BOUND:
            raise OverflowError("polytope too large for 64-bit column scan")


def _count_slab(halfspaces, xs: np.ndarray, ys: np.ndarray, zlo: int, zhi: int) -> int:
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    lower = np.full(X.shape, zlo, dtype=np.int64)
    upper = np.full(X.shape, zhi, dtype=np.int64)
    ok = np.ones(X.shape, dtype=bool)
    for (nx, ny, nz), c in halfspaces:
        rest = c - nx * X - ny * Y
        if nz > 0:
            np.minimum(upper, np.floor_divide(rest, nz), out=upper)
        elif nz < 0:
            np.maximum(lower, -np.floor_divide(rest, -nz), out=lower)
        else:
            ok &= rest >= 0
    lengths = np.where(ok, np.maximum(upper - lower + 1, 0), 0)
    return int(lengths.sum(dtype=np.int64))


def count_in_box(
    halfspaces: tuple[Halfspace, ...] | list[Halfspace],
    lo: Vec3,
    hi: Vec3,
    threads: int = 1,
) -> int:
    """Number of integer points ``x`` with ``lo <= x <= hi`` satisfying every halfspace."""
    if any(h < l for l, h in zip(lo, hi)):
        return 0
    _check_range(halfspaces, lo, hi)
    xs = np.arange(lo[0], hi[0] + 1, dtype=np.int64)
    ys = np.arange(lo[1], hi[1] + 1, dtype=np.int64)
    nslabs = max(1, min(threads, len(xs)))
    slabs = np.array_split(xs, nslabs)
    if nslabs == 1:
        return _count_slab(halfspaces, xs, ys, lo[2], hi[2])
    with ThreadPoolExecutor(max_workers=nslabs) as pool:
        parts = pool.map(lambda s: _count_slab(halfspaces, s, ys, lo[2], hi[2]), slabs)
        return sum(parts)


def _strict(halfspaces) -> list[Halfspace]:
    # integer points: n.x < c  <=>  n.x <= c - 1
    return [(n, c - 1) for n, c in halfspaces]


def count(poly: LatticePolytope, t: int = 1, threads: int = 1) -> CountResult:
    """Closed and interior lattice-point counts of ``t * poly``."""
    if t < 1:
        raise ValueError(f"dilation must be a positive integer, got {t}")
    tp = dilate(poly, t)
    lo, hi = tp.bounding_box()
    closed = count_in_box(tp.halfspaces, lo, hi, threads)
    interior = count_in_box(_strict(tp.halfspaces), lo, hi, threads)
    if closed < len(poly.vertices):
        raise ValueError("polytope contains fewer lattice points than vertices; halfspaces inconsistent")
    return CountResult(closed=closed, interior=interior, dilation=t)


def count_pointwise(poly: LatticePolytope, t: int = 1) -> CountResult:
    """Reference count: test every point of the bounding box individually."""
    tp = dilate(poly, t)
    lo, hi = tp.bounding_box()
    closed = interior = 0
    for p in itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))):
        vals = [dot(n, p) - c for n, c in tp.halfspaces]
        if all(v <= 0 for v in vals):
            closed += 1
            if all(v < 0 for v in vals):
                interior += 1
    return CountResult(closed=closed, interior=interior, dilation=t)


def half_open_halfspaces(cube: CubeMatrix) -> list[Halfspace]:
    """``0 <= r.x < ell^2`` for each row ``r``, in primitive form."""
    out = []
    n2 = cube.ell**2
    for r in cube.rows:
        p = primitive(r)
        out.append(((-p[0], -p[1], -p[2]), 0))
        out.append((p, n2 // vgcd(r) - 1))
    return out


def count_half_open_cube(cube: CubeMatrix, threads: int = 1) -> int:
    """Lattice points in the half-open cell ``{x : 0 <= r.x < ell^2}``.

    This cell tiles space under translations by the rows of the cube.
    """
    from latticepoly.polytope import cube_polytope

    lo, hi = cube_polytope(cube).bounding_box()
    return count_in_box(half_open_halfspaces(cube), lo, hi, threads)


def boundary_edge_interior_count(poly: LatticePolytope) -> int:
    """Lattice points strictly inside the six edges of a tetrahedron."""
    if poly.kind != "tetrahedron":
        raise ValueError(f"expected a tetrahedron, got {poly.kind}")
    return sum(vgcd(sub(q, p)) - 1 for p, q in itertools.combinations(poly.vertices, 2))
