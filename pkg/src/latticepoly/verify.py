"""The full identity suite, as a deterministic stream of reports."""

from __future__ import annotations

from typing import Iterator

from latticepoly.catalog import CubeCatalog, conjecture_scan, known_cube
from latticepoly.cubes import CubeMatrix, divisor_profile, is_self_dual, pythagorean_cube
from latticepoly.ehrhart import (
    IdentityReport,
    closed_form_report,
    cube_closed_form,
    fitted_polynomial,
    lambda_coefficients,
    lambda_report,
    max_count_bound,
    mu2_nu2_relation,
    mu_nu_report,
    reciprocity_check,
    row_column_report,
    tetra_octa_polynomials,
    wandering_set_report,
)
from latticepoly.polytope import cube_polytope, octahedron_of, tetrahedron_of
from latticepoly.reference import (
    KNOWN_CUBE_ALPHA,
    KNOWN_TETRA_OCTA,
    PYTHAGOREAN_TRIPLES,
    known_cube_polynomial,
    pythagorean_polynomial,
)

RECIPROCITY_T_MAX = 3


def cube_reports(cube: CubeMatrix, subject: str, threads: int = 1) -> Iterator[IdentityReport]:
    """Every per-cube identity, including reciprocity for all four solids."""
    fitted = fitted_polynomial(cube_polytope(cube), threads)
    yield closed_form_report(cube, subject, threads)
    yield lambda_report(cube, subject, fitted)
    yield mu_nu_report(cube, subject, threads)
    yield mu2_nu2_relation(cube, subject, threads)
    lt, lo = tetra_octa_polynomials(cube, threads)
    for label, poly, L in (
        ("cube", cube_polytope(cube), fitted),
        ("tetrahedron1", tetrahedron_of(cube, 1), lt),
        ("tetrahedron2", tetrahedron_of(cube, 2), lt),
        ("octahedron", octahedron_of(cube), lo),
    ):
        yield reciprocity_check(poly, L, RECIPROCITY_T_MAX, subject, threads, label=label)
    yield wandering_set_report(cube, subject, threads)
    yield max_count_bound(cube, subject)
    yield row_column_report(cube, subject)


def known_polynomial_report(name: str, threads: int = 1) -> IdentityReport:
    cube = known_cube(name)
    rep = IdentityReport(name, "known_cube_polynomial")
    want = known_cube_polynomial(name)
    got = fitted_polynomial(cube_polytope(cube), threads)
    closed = cube_closed_form(cube)
    for k, w, g, c in zip(("c3", "c2", "c1", "c0"), want.coefficients, got.coefficients, closed.coefficients):
        rep.add(f"fitted_{k}", w, g)
        rep.add(f"closed_form_{k}", w, c)
    return rep


def known_tetra_octa_report(name: str, threads: int = 1) -> IdentityReport:
    rep = IdentityReport(name, "known_tetra_octa_polynomials")
    lt, lo = tetra_octa_polynomials(known_cube(name), threads)
    want_t, want_o = KNOWN_TETRA_OCTA[name]
    for k, w, g in zip(("c3", "c2", "c1", "c0"), want_t.coefficients, lt.coefficients):
        rep.add(f"tetra_{k}", w, g)
    for k, w, g in zip(("c3", "c2", "c1", "c0"), want_o.coefficients, lo.coefficients):
        rep.add(f"octa_{k}", w, g)
    return rep


def pythagorean_report(triple: tuple[int, int, int], threads: int = 1) -> IdentityReport:
    a, b, c = triple
    rep = IdentityReport(f"P{a},{b},{c}", "pythagorean_polynomial")
    got = fitted_polynomial(cube_polytope(pythagorean_cube(a, b, c)), threads)
    for k, w, g in zip(("c3", "c2", "c1", "c0"), pythagorean_polynomial(c).coefficients, got.coefficients):
        rep.add(k, w, g)
    return rep


def c1105_report() -> IdentityReport:
    """Gcd invariants of the side-1105 cube; no counting."""
    cube = known_cube("C1105")
    prof = divisor_profile(cube)
    rep = IdentityReport("C1105", "c1105_invariants")
    for i, (w, g) in enumerate(zip((13, 5, 17), prof.d), 1):
        rep.add(f"d{i}", w, g)
    rep.add("sum(d)", 35, sum(prof.d))
    rep.add("sum(col)", 7, sum(prof.col))
    rep.add("lambda1", 38675, lambda_coefficients(cube)[0])
    rep.add("lambda2", 35, lambda_coefficients(cube)[1])
    rep.add("self_dual", 0, int(is_self_dual(cube)))
    return rep


def conjecture_report(catalog: CubeCatalog, ell_max: int) -> IdentityReport:
    scan = conjecture_scan(ell_max, catalog=catalog)
    rep = IdentityReport(f"catalog<= {ell_max}", "row_vs_column_gcd_sum_scan")
    rep.add("violations", 0, len(scan["violations"]))
    with_1105 = conjecture_scan(ell_max, extra=[known_cube("C1105")], catalog=catalog)
    rep.add("violations_with_C1105", 1, len(with_1105["violations"]))
    return rep


def class_count_report(catalog: CubeCatalog, ell_max: int) -> IdentityReport:
    """Class counts per side: one for sides up to 11, two at 13."""
    rep = IdentityReport(f"catalog<= {ell_max}", "class_counts")
    expected = {1: 1, 3: 1, 5: 1, 7: 1, 9: 1, 11: 1, 13: 2}
    for ell in sorted(catalog.entries):
        if ell <= ell_max:
            n = len(catalog.entries[ell])
            rep.add(f"classes(ell={ell})", expected.get(ell, n), n, asserted=ell in expected)
    return rep


def verify_reports(
    ell_max: int = 13, threads: int = 1, catalog: CubeCatalog | None = None
) -> Iterator[IdentityReport]:
    if catalog is None:
        catalog = CubeCatalog.build(range(1, ell_max + 1, 2))
    yield class_count_report(catalog, ell_max)
    for subject, cube in catalog.cubes(ell_max):
        yield from cube_reports(cube, subject, threads)
    for name in KNOWN_CUBE_ALPHA:
        if known_cube(name).ell <= ell_max:
            yield known_polynomial_report(name, threads)
    for name in KNOWN_TETRA_OCTA:
        if known_cube(name).ell <= ell_max:
            yield known_tetra_octa_report(name, threads)
    for triple in PYTHAGOREAN_TRIPLES:
        yield pythagorean_report(triple, threads)
    three_unit = known_cube("C1").scaled(3)
    yield max_count_bound(three_unit, "3*C1")
    yield c1105_report()
    yield conjecture_report(catalog, ell_max)

