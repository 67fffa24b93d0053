"""Enumeration and classification of irreducible lattice cubes by side.

Cubes are found by listing every integer vector of squared norm ``ell^2``,
fixing the first row to a sorted representative ``a >= b >= c >= 0`` (any
cube can be moved there by the symmetry action), scanning the full vector
list for orthogonal mates, and completing with ``+-(row1 x row2) / ell``.
One representative per canonical class is kept.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import os
import tempfile
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable

import numpy as np

from latticepoly.cubes import (
    CubeMatrix,
    canonical_key,
    canonicalize,
    divisor_profile,
    from_rows,
    is_irreducible,
    is_self_dual,
)
from latticepoly.ehrhart import cube_closed_form, lambda_coefficients, mu1_nu1
from latticepoly.exact import EhrhartCubic, cross, format_rational
from latticepoly.reference import KNOWN_CUBES

FORMAT_VERSION = 1
DEFAULT_MAX_SIDE = 21

def known_cube(name: str) -> CubeMatrix:
    return from_rows(KNOWN_CUBES[name])


class SearchBoundError(ValueError):
    pass


def sorted_sphere_vectors(ell: int) -> list[tuple[int, int, int]]:
    """All ``a >= b >= c >= 0`` with ``a^2 + b^2 + c^2 == ell^2``."""
    n = ell * ell
    out = []
    for a in range(math.isqrt(n), -1, -1):
        if 3 * a * a < n:
            break
        rest = n - a * a
        for b in range(min(a, math.isqrt(rest)), -1, -1):
            if 2 * b * b < rest:
                break
            c2 = rest - b * b
            c = math.isqrt(c2)
            if c * c == c2 and c <= b:
                out.append((a, b, c))
    return sorted(out, reverse=True)


def signed_permutations_of(v) -> set[tuple[int, int, int]]:
    out = set()
    for p in itertools.permutations(v):
        for s in itertools.product((1, -1), repeat=3):
            out.add((s[0] * p[0], s[1] * p[1], s[2] * p[2]))
    return out


def sphere_vectors(ell: int, reps=None) -> np.ndarray:
    """Every integer vector of squared norm ``ell^2``, as a sorted ``(N, 3)`` array."""
    reps = sorted_sphere_vectors(ell) if reps is None else reps
    allv = set()
    for r in reps:
        allv |= signed_permutations_of(r)
    return np.array(sorted(allv), dtype=np.int64).reshape(-1, 3)


def _cubes_from_rows(
    ell: int,
    firsts: Iterable[tuple[int, int, int]],
    mates: np.ndarray,
    accept: Callable[[CubeMatrix], bool],
) -> list[CubeMatrix]:
    classes: dict[tuple, CubeMatrix] = {}
    for a in firsts:
        dots = mates @ np.array(a, dtype=np.int64)
        for w in mates[dots == 0]:
            w = tuple(int(x) for x in w)
            g = cross(a, w)
            if any(x % ell for x in g):
                continue
            g = tuple(x // ell for x in g)
            cube = CubeMatrix((a, w, g), ell)
            if not accept(cube):
                continue
            key = canonical_key(cube)
            if key not in classes:
                classes[key] = CubeMatrix((key[0:3], key[3:6], key[6:9]), ell)
    return [classes[k] for k in sorted(classes)]


def cubes_of_side(ell: int, max_side: int = DEFAULT_MAX_SIDE) -> list[CubeMatrix]:
    """One canonical representative per class of irreducible cubes of side ``ell``."""
    if ell < 1:
        raise ValueError(f"side must be positive, got {ell}")
    if ell % 2 == 0:
        raise ValueError(
            f"side {ell} is even: every cube of even side is twice a smaller cube, "
            "so irreducible cubes have odd sides"
        )
    if ell > max_side:
        raise SearchBoundError(f"side {ell} exceeds search bound {max_side}")
    reps = sorted_sphere_vectors(ell)
    return _cubes_from_rows(ell, reps, sphere_vectors(ell, reps), is_irreducible)


def find_all_divisors_gt1(
    sides: Iterable[int],
    progress: Callable[[int, int, int], None] | None = None,
) -> list[CubeMatrix]:
    """Irreducible cubes whose three row gcds all exceed 1.

    Only vectors with a nontrivial gcd can be rows, which keeps the search
    feasible for sides in the thousands. ``progress(ell, i, n)`` is called
    after each first-row candidate.
    """
    found = []
    for ell in sides:
        if ell % 2 == 0:
            raise ValueError(f"side {ell} is even; irreducible cubes have odd sides")
        reps = [r for r in sorted_sphere_vectors(ell) if math.gcd(*r) > 1]
        mates = sphere_vectors(ell, reps)

        def accept(c: CubeMatrix) -> bool:
            return is_irreducible(c) and min(divisor_profile(c).d) > 1

        for i, r in enumerate(reps):
            found.extend(_cubes_from_rows(ell, [r], mates, accept))
            if progress is not None:
                progress(ell, i + 1, len(reps))
    unique = {canonical_key(c): c for c in found}
    return [unique[k] for k in sorted(unique, key=lambda k: (unique[k].ell, k))]


@dataclass
class CatalogEntry:
    cube: CubeMatrix

    @property
    def ell(self) -> int:
        return self.cube.ell

    def to_json(self) -> dict:
        d = self.cube.to_json()
        lam1, lam2 = lambda_coefficients(self.cube)
        mu1, nu1 = mu1_nu1(self.cube)
        d["ehrhart"] = {
            "cube": cube_closed_form(self.cube).to_json(),
            "lambda1": lam1,
            "lambda2": lam2,
            "mu1": format_rational(mu1),
            "nu1": format_rational(nu1),
        }
        return d


@dataclass
class CubeCatalog:
    entries: dict[int, list[CatalogEntry]] = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)

    @classmethod
    def build(cls, sides: Iterable[int], max_side: int = DEFAULT_MAX_SIDE) -> CubeCatalog:
        sides = sorted(set(sides))
        entries = {ell: [CatalogEntry(c) for c in cubes_of_side(ell, max_side)] for ell in sides}
        prov = {
            "sides": sides,
            "max_side": max_side,
            "equivalence": "two-sided signed permutations (P m Q)",
            "canonical_form": "lexicographic minimum of row-major entries over the orbit",
            "created": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        }
        return cls(entries, prov)

    def cubes(self, ell_max: int | None = None) -> list[tuple[str, CubeMatrix]]:
        """``(id, cube)`` pairs in side order; ids look like ``L13.2``."""
        out = []
        for ell in sorted(self.entries):
            if ell_max is not None and ell > ell_max:
                continue
            for i, e in enumerate(self.entries[ell], 1):
                out.append((f"L{ell}.{i}", e.cube))
        return out

    def entries_json(self) -> dict:
        return {str(ell): [e.to_json() for e in es] for ell, es in sorted(self.entries.items())}

    def to_json(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "provenance": self.provenance,
            "entries": self.entries_json(),
        }

    @classmethod
    def from_json(cls, d: dict) -> CubeCatalog:
        if d.get("format_version") != FORMAT_VERSION:
            raise ValueError(f"unsupported catalog format {d.get('format_version')!r}")
        entries = {
            int(ell): [CatalogEntry(CubeMatrix.from_json(c)) for c in cs]
            for ell, cs in d["entries"].items()
        }
        return cls(entries, d.get("provenance", {}))

    def save(self, path: str | os.PathLike) -> None:
        """Atomic whole-file replace."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(self.to_json(), fh, indent=1, sort_keys=True)
                fh.write("\n")
            os.replace(tmp, path)
        except BaseException:
            os.unlink(tmp)
            raise

    @classmethod
    def load(cls, path: str | os.PathLike) -> CubeCatalog:
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))

    @classmethod
    def load_or_build(cls, path, sides: Iterable[int], max_side: int = DEFAULT_MAX_SIDE) -> CubeCatalog:
        """Reuse a cached catalog when it has the right format and every requested side."""
        sides = sorted(set(sides))
        if path is not None and Path(path).exists():
            try:
                cat = cls.load(path)
            except (ValueError, KeyError, json.JSONDecodeError):
                cat = None
            if cat is not None and all(s in cat.entries for s in sides):
                return cat
        cat = cls.build(sides, max_side)
        if path is not None:
            cat.save(path)
        return cat

    def to_csv(self) -> str:
        return catalog_csv(c for _, c in self.cubes())


CSV_COLUMNS = ["ell", "rows", "d1", "d2", "d3", "D1", "D2", "D3", "D4", "lambda1", "lambda2", "mu1", "self_dual"]


def csv_row(cube: CubeMatrix) -> list:
    prof = divisor_profile(cube)
    lam1, lam2 = lambda_coefficients(cube)
    mu1, _ = mu1_nu1(cube)
    rows = ";".join(",".join(str(x) for x in r) for r in cube.rows)
    return [cube.ell, rows, *prof.d, *prof.D, lam1, lam2, format_rational(mu1), str(is_self_dual(cube)).lower()]


def catalog_csv(cubes: Iterable[CubeMatrix]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for c in cubes:
        w.writerow(csv_row(c))
    return buf.getvalue()


def conjecture_scan(ell_max: int, extra: Iterable[CubeMatrix] = (), catalog: CubeCatalog | None = None) -> dict:
    """Compare row-gcd and column-gcd sums over cataloged cubes with side ``<= ell_max``.

    ``extra`` cubes are checked as well. Violators are listed with both sums.
    """
    if catalog is None:
        catalog = CubeCatalog.build(range(1, ell_max + 1, 2))
    subjects = [c for _, c in catalog.cubes(ell_max)] + list(extra)
    violations = []
    for c in subjects:
        prof = divisor_profile(c)
        if sum(prof.d) != sum(prof.col):
            violations.append(
                {
                    "ell": c.ell,
                    "rows": [list(r) for r in c.rows],
                    "row_gcd_sum": sum(prof.d),
                    "col_gcd_sum": sum(prof.col),
                    "self_dual": is_self_dual(c),
                }
            )
    return {"ell_max": ell_max, "checked": len(subjects), "violations": violations}


def ehrhart_polynomial_census(ell: int, max_side: int = DEFAULT_MAX_SIDE) -> list[EhrhartCubic]:
    """Distinct closed-form cube polynomials among the classes of side ``ell``."""
    polys = {cube_closed_form(c) for c in cubes_of_side(ell, max_side)}
    return sorted(polys, key=lambda p: p.coefficients)


def same_class(a: CubeMatrix, b: CubeMatrix) -> bool:
    return a.ell == b.ell and canonicalize(a) == canonicalize(b)
