"""Command-line interface.

Examples::

    latticepoly ehrhart --shape cube --rows "-1,2,2;2,-1,2;2,2,-1"
    latticepoly count --shape octa --rows "1,0,0;0,1,0;0,0,1" --t 2
    latticepoly verify --ell-max 13
    latticepoly search --ell 13 15 --catalog cubes.json
    latticepoly search --ell 1105 --divisors-gt1
    latticepoly census --ell 13

Exit codes: 0 success, 1 an asserted identity failed, 2 usage or input error.
JSON output is one object per line with sorted keys.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from latticepoly.catalog import (
    CSV_COLUMNS,
    CubeCatalog,
    DEFAULT_MAX_SIDE,
    SearchBoundError,
    conjecture_scan,
    csv_row,
    cubes_of_side,
    ehrhart_polynomial_census,
    find_all_divisors_gt1,
    known_cube,
)
from latticepoly.counting import count
from latticepoly.cubes import CubeMatrix, NotACubeError, from_rows, pythagorean_cube, rodrigues
from latticepoly.ehrhart import ConsistencyError, cube_closed_form, fitted_polynomial, mu1_nu1, polytope_volume
from latticepoly.polytope import cube_polytope, octahedron_of, tetrahedron_of
from latticepoly.reference import KNOWN_CUBES
from latticepoly.verify import verify_reports

SHAPES = ("cube", "tetra", "octa")


class UsageError(ValueError):
    pass


def parse_rows(text: str) -> list[list[int]]:
    try:
        rows = [[int(x) for x in r.split(",")] for r in text.strip().split(";")]
    except ValueError as exc:
        raise UsageError(f"bad --rows {text!r}: {exc}") from None
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise UsageError(f"--rows needs 3 rows of 3 integers, got {text!r}")
    return rows


def parse_ints(text: str, n: int, flag: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad {flag} {text!r}") from None
    if len(vals) != n:
        raise UsageError(f"{flag} needs {n} comma-separated integers")
    return vals


def cube_from_args(args) -> CubeMatrix:
    if args.rows is not None:
        return from_rows(parse_rows(args.rows))
    if args.rodrigues is not None:
        return rodrigues(*parse_ints(args.rodrigues, 4, "--rodrigues"))
    if args.pythagorean is not None:
        return pythagorean_cube(*parse_ints(args.pythagorean, 3, "--pythagorean"))
    if args.named is not None:
        return known_cube(args.named)
    raise UsageError("specify a cube with --rows, --rodrigues, --pythagorean or --named")


def polytope_from_args(args, cube: CubeMatrix):
    if args.shape == "cube":
        return cube_polytope(cube)
    if args.shape == "tetra":
        return tetrahedron_of(cube, args.which)
    return octahedron_of(cube)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _pretty_cube(cube: CubeMatrix) -> str:
    d = cube.to_json()
    lines = [f"cube of side {cube.ell}"]
    lines += [f"  {r}" for r in cube.rows]
    lines.append(f"  divisors {d['divisors']}")
    lines.append(f"  irreducible={d['irreducible']} self_dual={d['self_dual']}")
    lines.append(f"  L(t) = {cube_closed_form(cube)}")
    return "\n".join(lines)


def cmd_generate(args, out) -> int:
    if args.ell is not None:
        cubes = cubes_of_side(args.ell, args.max_side)
    else:
        cubes = [cube_from_args(args)]
    if args.shape is not None:
        if args.format == "csv":
            raise UsageError("csv output is available for cubes only")
        for c in cubes:
            p = polytope_from_args(args, c)
            if args.format == "pretty":
                out.write(f"{p.kind} (side {p.ell}) vertices {list(p.vertices)}\n")
            else:
                out.write(_dump(p.to_json()) + "\n")
        return 0
    if args.format == "csv":
        out.write(_csv(CSV_COLUMNS, [csv_row(c) for c in cubes]))
    elif args.format == "pretty":
        out.write("\n".join(_pretty_cube(c) for c in cubes) + "\n")
    else:
        for c in cubes:
            out.write(_dump(c.to_json()) + "\n")
    return 0


def cmd_count(args, out) -> int:
    cube = cube_from_args(args)
    poly = polytope_from_args(args, cube)
    res = count(poly, args.t, args.threads)
    d = {"kind": poly.kind, "ell": cube.ell, **res.to_json()}
    if args.format == "csv":
        out.write(_csv(list(d), [list(d.values())]))
    elif args.format == "pretty":
        out.write(f"{poly.kind} (side {cube.ell}) at t={res.dilation}: "
                  f"{res.closed} points, {res.interior} interior, {res.boundary} on the boundary\n")
    else:
        out.write(_dump(d) + "\n")
    return 0


def cmd_ehrhart(args, out) -> int:
    cube = cube_from_args(args)
    poly = polytope_from_args(args, cube)
    fitted = fitted_polynomial(poly, args.threads)
    if poly.kind == "cube":
        closed = cube_closed_form(cube).to_json()
        match = cube_closed_form(cube) == fitted
    else:
        # only the leading, t^2 and constant coefficients have closed forms
        mu1, nu1 = mu1_nu1(cube)
        c2 = mu1 if poly.kind == "tetrahedron" else nu1
        lead = polytope_volume(poly)
        closed = {"c3": str(lead), "c2": str(c2), "c1": None, "c0": "1"}
        match = (fitted.c3, fitted.c2, fitted.c0) == (lead, c2, 1)
    d = {"kind": poly.kind, "ell": cube.ell, "closed_form": closed, "fitted": fitted.to_json(), "match": match}
    if args.format == "csv":
        f = fitted.to_json()
        out.write(_csv(["kind", "ell", "c3", "c2", "c1", "c0", "match"],
                       [[poly.kind, cube.ell, f["c3"], f["c2"], f["c1"], f["c0"], str(match).lower()]]))
    elif args.format == "pretty":
        out.write(f"{poly.kind} (side {cube.ell}): L(t) = {fitted}  [closed form match: {match}]\n")
    else:
        out.write(_dump(d) + "\n")
    return 0 if match else 1


def cmd_verify(args, out) -> int:
    catalog = None
    if args.catalog is not None:
        catalog = CubeCatalog.load_or_build(args.catalog, range(1, args.ell_max + 1, 2), args.max_side)
    ok = True
    rows = []
    for rep in verify_reports(args.ell_max, args.threads, catalog):
        ok &= rep.ok
        if args.format == "json":
            out.write(_dump(rep.to_json()) + "\n")
        elif args.format == "csv":
            for c in rep.checks:
                j = c.to_json()
                rows.append([rep.subject, rep.identity, j["name"], j["expected"], j["actual"],
                             str(j["pass"]).lower(), str(j["asserted"]).lower()])
        else:
            status = "ok  " if rep.ok else "FAIL"
            out.write(f"{status} {rep.subject:<12} {rep.identity}\n")
            for c in rep.checks:
                if not c.passed:
                    tag = "violated" if c.asserted else "differs (reported only)"
                    out.write(f"       {c.name}: expected {c.expected}, got {c.actual} -- {tag}\n")
    if args.format == "csv":
        out.write(_csv(["subject", "identity", "check", "expected", "actual", "pass", "asserted"], rows))
    return 0 if ok else 1


def cmd_search(args, out) -> int:
    if args.conjecture_scan is not None:
        cat = CubeCatalog.load_or_build(args.catalog, range(1, args.conjecture_scan + 1, 2), args.max_side)
        extra = [known_cube("C1105")] if args.include_1105 else []
        out.write(_dump(conjecture_scan(args.conjecture_scan, extra, cat)) + "\n")
        return 0
    if not args.ell:
        raise UsageError("search needs --ell or --conjecture-scan")
    if args.divisors_gt1:
        def progress(ell, i, n):
            if args.progress:
                print(f"side {ell}: {i}/{n} first rows", file=sys.stderr)

        cubes = find_all_divisors_gt1(args.ell, progress)
    else:
        cat = (CubeCatalog.load_or_build(args.catalog, args.ell, args.max_side)
               if args.catalog else CubeCatalog.build(args.ell, args.max_side))
        cubes = [c for _, c in cat.cubes() if c.ell in set(args.ell)]
    if args.format == "csv":
        out.write(_csv(CSV_COLUMNS, [csv_row(c) for c in cubes]))
    elif args.format == "pretty":
        out.write("\n".join(_pretty_cube(c) for c in cubes) + ("\n" if cubes else ""))
    else:
        for c in cubes:
            out.write(_dump(c.to_json()) + "\n")
    return 0


def cmd_census(args, out) -> int:
    polys = ehrhart_polynomial_census(args.ell, args.max_side)
    if args.format == "csv":
        out.write(_csv(["ell", "c3", "c2", "c1", "c0"],
                       [[args.ell, *p.to_json().values()] for p in polys]))
    elif args.format == "pretty":
        out.write(f"side {args.ell}: {len(polys)} distinct polynomial(s)\n")
        out.write("".join(f"  {p}\n" for p in polys))
    else:
        out.write(_dump({"ell": args.ell, "count": len(polys), "polynomials": [p.to_json() for p in polys]}) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--catalog", default=None, help="catalog JSON file (read if valid, else written)")
    common.add_argument("--threads", type=int, default=1, help="worker threads; never changes output")
    common.add_argument("--max-side", type=int, default=DEFAULT_MAX_SIDE, help="enumeration bound")

    cube_args = argparse.ArgumentParser(add_help=False)
    g = cube_args.add_mutually_exclusive_group()
    g.add_argument("--rows", help='edge vectors as "a,b,c;d,e,f;g,h,i"')
    g.add_argument("--rodrigues", help="four integers a,b,c,d")
    g.add_argument("--pythagorean", help="primitive triple a,b,c")
    g.add_argument("--named", choices=sorted(KNOWN_CUBES))
    cube_args.add_argument("--shape", choices=SHAPES, default=None)
    cube_args.add_argument("--which", type=int, choices=(1, 2), default=1, help="which inscribed tetrahedron")

    p = argparse.ArgumentParser(prog="latticepoly", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("generate", parents=[common, cube_args], help="print cubes or polytopes")
    s.add_argument("--ell", type=int, help="list every class of irreducible cubes of this side")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("count", parents=[common, cube_args], help="count lattice points in t*P")
    s.add_argument("--t", type=int, default=1)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("ehrhart", parents=[common, cube_args], help="fitted vs closed-form polynomial")
    s.set_defaults(func=cmd_ehrhart)

    s = sub.add_parser("verify", parents=[common], help="run the full identity suite")
    s.add_argument("--ell-max", type=int, default=13)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", parents=[common], help="enumerate cube classes")
    s.add_argument("--ell", type=int, nargs="*", default=[])
    s.add_argument("--divisors-gt1", action="store_true", help="only cubes with every row gcd > 1")
    s.add_argument("--progress", action="store_true")
    s.add_argument("--conjecture-scan", type=int, metavar="ELL_MAX",
                   help="compare row and column gcd sums over the catalog")
    s.add_argument("--include-1105", action="store_true")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("census", parents=[common], help="distinct cube polynomials of one side")
    s.add_argument("--ell", type=int, required=True)
    s.set_defaults(func=cmd_census)
    return p


def _check_args(args) -> None:
    if args.threads < 1:
        raise UsageError("--threads must be >= 1")
    if getattr(args, "t", 1) < 1:
        raise UsageError("--t must be >= 1")
    if args.command in ("count", "ehrhart") and args.shape is None:
        args.shape = "cube"
    if args.command in ("generate", "count", "ehrhart"):
        if args.which != 1 and args.shape != "tetra":
            raise UsageError("--which applies only with --shape tetra")
    if args.command == "generate" and args.ell is not None:
        if any(getattr(args, k) is not None for k in ("rows", "rodrigues", "pythagorean", "named")):
            raise UsageError("--ell conflicts with an explicit cube")
    if args.command == "search" and args.conjecture_scan is not None and (args.ell or args.divisors_gt1):
        raise UsageError("--conjecture-scan conflicts with --ell/--divisors-gt1")


# matrix and parameter values may start with "-", which argparse reads as a flag
_VALUE_FLAGS = ("--rows", "--rodrigues", "--pythagorean")


def _glue_values(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        if argv[i] in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    argv = _glue_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _check_args(args)
        return args.func(args, out)
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, NotACubeError, SearchBoundError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
