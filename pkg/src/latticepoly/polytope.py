"""Cubes, regular tetrahedra and regular octahedra as integer H/V-polytopes.

Halfspaces are ``(n, c)`` meaning ``dot(n, x) <= c`` with ``n`` primitive.
The closed-form facets below come straight from the edge vectors of the cube;
:func:`facets_from_vertices` recomputes them from the vertex list alone and is
used as a cross-check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from latticepoly.cubes import CubeMatrix
from latticepoly.exact import Vec3, add, cross, det3, dot, primitive, scale, sub, vec3, vgcd

Kind = Literal["cube", "tetrahedron", "octahedron"]
Halfspace = tuple[Vec3, int]


class DegeneratePolytopeError(ValueError):
    pass


@dataclass(frozen=True)
class LatticePolytope:
    vertices: tuple[Vec3, ...]
    halfspaces: tuple[Halfspace, ...]
    kind: Kind
    ell: int

    def contains(self, p: Vec3, strict: bool = False) -> bool:
        if strict:
            return all(dot(n, p) < c for n, c in self.halfspaces)
        return all(dot(n, p) <= c for n, c in self.halfspaces)

    def edges(self) -> list[tuple[Vec3, Vec3]]:
        """Vertex pairs that share at least two facets."""
        tight = [
            frozenset(i for i, (n, c) in enumerate(self.halfspaces) if dot(n, v) == c)
            for v in self.vertices
        ]
        return [
            (self.vertices[i], self.vertices[j])
            for i, j in itertools.combinations(range(len(self.vertices)), 2)
            if len(tight[i] & tight[j]) >= 2
        ]

    def bounding_box(self) -> tuple[Vec3, Vec3]:
        lo = tuple(min(v[k] for v in self.vertices) for k in range(3))
        hi = tuple(max(v[k] for v in self.vertices) for k in range(3))
        return lo, hi

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "ell": self.ell,
            "vertices": [list(v) for v in self.vertices],
            "halfspaces": [{"n": list(n), "c": c} for n, c in self.halfspaces],
        }

    @classmethod
    def from_json(cls, d: dict) -> LatticePolytope:
        return cls(
            vertices=tuple(vec3(v) for v in d["vertices"]),
            halfspaces=tuple((vec3(h["n"]), int(h["c"])) for h in d["halfspaces"]),
            kind=d["kind"],
            ell=int(d["ell"]),
        )


def _orient(normals, vertices) -> tuple[Halfspace, ...]:
    """Turn facet normal directions into halfspaces tight on their facet.

    For each direction the facet lies at whichever extreme value (min or max
    over the vertices) is attained by at least three vertices.
    """
    out = []
    for n in normals:
        n = primitive(n)
        vals = [dot(n, v) for v in vertices]
        hi, lo = max(vals), min(vals)
        if vals.count(hi) >= 3:
            out.append((n, hi))
        if vals.count(lo) >= 3:
            out.append(((-n[0], -n[1], -n[2]), -lo))
    return tuple(out)


def cube_polytope(cube: CubeMatrix) -> LatticePolytope:
    a, b, g = cube.rows
    vertices = (
        (0, 0, 0), a, b, g,
        add(a, b), add(b, g), add(g, a), add(add(a, b), g),
    )
    n2 = cube.ell**2
    halfspaces = []
    for r in cube.rows:
        p = primitive(r)
        halfspaces.append((p, n2 // vgcd(r)))
        halfspaces.append(((-p[0], -p[1], -p[2]), 0))
    return LatticePolytope(vertices, tuple(halfspaces), "cube", cube.ell)


def _face_normals(cube: CubeMatrix) -> list[Vec3]:
    a, b, g = cube.rows
    return [
        add(add(a, b), g),
        sub(add(a, b), g),
        add(sub(a, b), g),
        add(sub(b, a), g),
    ]


def tetrahedron_of(cube: CubeMatrix, which: int = 1) -> LatticePolytope:
    """One of the two regular tetrahedra inscribed in the cube.

    ``which=1`` has vertices ``0, a+b, b+g, g+a``; ``which=2`` has
    ``a, b, g, a+b+g``.
    """
    a, b, g = cube.rows
    if which == 1:
        vertices = ((0, 0, 0), add(a, b), add(b, g), add(g, a))
    elif which == 2:
        vertices = (a, b, g, add(add(a, b), g))
    else:
        raise ValueError(f"which must be 1 or 2, got {which}")
    return LatticePolytope(vertices, _orient(_face_normals(cube), vertices), "tetrahedron", cube.ell)


def octahedron_of(cube: CubeMatrix) -> LatticePolytope:
    a, b, g = cube.rows
    neg = lambda v: (-v[0], -v[1], -v[2])  # noqa: E731
    vertices = (a, neg(a), b, neg(b), g, neg(g))
    return LatticePolytope(vertices, _orient(_face_normals(cube), vertices), "octahedron", cube.ell)


def facets_from_vertices(vertices) -> list[Halfspace]:
    """Facets of the convex hull of a few points, by scanning vertex triples.

    Output is sorted so that the result is independent of input order.
    """
    vs = [vec3(v) for v in vertices]
    k = len(vs)
    if k < 4:
        raise DegeneratePolytopeError("need at least 4 vertices")
    centroid_k = tuple(sum(v[i] for v in vs) for i in range(3))  # k * centroid
    if not any(
        det3((sub(q, vs[0]), sub(r, vs[0]), sub(s, vs[0])))
        for q, r, s in itertools.combinations(vs[1:], 3)
    ):
        raise DegeneratePolytopeError("vertices are coplanar")
    facets = set()
    for p, q, r in itertools.combinations(vs, 3):
        n = cross(sub(q, p), sub(r, p))
        if n == (0, 0, 0):
            continue
        n = primitive(n)
        c = dot(n, p)
        # orient so that the centroid is strictly on the <= side
        side = dot(n, centroid_k) - k * c
        if side == 0:
            continue
        if side > 0:
            n, c = scale(-1, n), -c
        if all(dot(n, v) <= c for v in vs):
            facets.add((n, c))
    return sorted(facets)


def dilate(poly: LatticePolytope, t: int) -> LatticePolytope:
    if t < 1:
        raise ValueError(f"dilation must be a positive integer, got {t}")
    return LatticePolytope(
        vertices=tuple(vec3(scale(t, v)) for v in poly.vertices),
        halfspaces=tuple((n, t * c) for n, c in poly.halfspaces),
        kind=poly.kind,
        ell=poly.ell,
    )
