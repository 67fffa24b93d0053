import json

import pytest

from latticepoly.catalog import (
    CSV_COLUMNS,
    CubeCatalog,
    SearchBoundError,
    catalog_csv,
    conjecture_scan,
    cubes_of_side,
    ehrhart_polynomial_census,
    find_all_divisors_gt1,
    known_cube,
    same_class,
    sorted_sphere_vectors,
    sphere_vectors,
)
from latticepoly.cubes import canonicalize, divisor_profile, from_rows, is_irreducible
from latticepoly.exact import EhrhartCubic


def _brute_sphere(ell):
    n = ell * ell
    r = range(-ell, ell + 1)
    return sorted((a, b, c) for a in r for b in r for c in r if a * a + b * b + c * c == n)


@pytest.mark.parametrize("ell", [1, 3, 5, 9, 13])
def test_sphere_vectors_complete(ell):
    got = sorted(tuple(int(x) for x in v) for v in sphere_vectors(ell))
    assert got == _brute_sphere(ell)
    assert all(a >= b >= c >= 0 for a, b, c in sorted_sphere_vectors(ell))


@pytest.mark.parametrize("ell, n", [(1, 1), (3, 1), (5, 1), (7, 1), (9, 1), (11, 1), (13, 2)])
def test_class_counts(ell, n):
    assert len(cubes_of_side(ell)) == n


def test_named_cubes_found():
    for name in ("C1", "C3", "C5", "C7", "C9", "C11", "C13", "C13hat"):
        c = known_cube(name)
        assert canonicalize(c) in cubes_of_side(c.ell)


def test_entries_are_canonical_irreducible_valid():
    for ell in range(1, 22, 2):
        cubes = cubes_of_side(ell)
        assert len({c.rows for c in cubes}) == len(cubes)
        for c in cubes:
            assert canonicalize(c) == c
            assert is_irreducible(c)
            assert from_rows(c.rows) == c


def test_side_errors():
    with pytest.raises(ValueError, match="even"):
        cubes_of_side(4)
    with pytest.raises(SearchBoundError):
        cubes_of_side(23)
    with pytest.raises(ValueError):
        cubes_of_side(0)


def test_divisors_gt1():
    assert find_all_divisors_gt1([15]) == []
    assert find_all_divisors_gt1([9]) == []
    assert min(divisor_profile(known_cube("C1105")).d) > 1


def test_divisors_gt1_rediscovers_1105():
    calls = []
    found = find_all_divisors_gt1([1105], progress=lambda *a: calls.append(a))
    target = known_cube("C1105")
    assert any(same_class(c, target) for c in found)
    assert calls and calls[-1][1] == calls[-1][2]


def test_conjecture_scan(catalog13):
    assert conjecture_scan(13, catalog=catalog13)["violations"] == []
    assert conjecture_scan(1, catalog=catalog13)["violations"] == []
    rep = conjecture_scan(13, extra=[known_cube("C1105")], catalog=catalog13)
    (v,) = rep["violations"]
    assert (v["row_gcd_sum"], v["col_gcd_sum"]) == (35, 7)


def test_census():
    assert len(ehrhart_polynomial_census(13)) == 2
    assert len(ehrhart_polynomial_census(3)) == 1
    assert ehrhart_polynomial_census(1) == [EhrhartCubic(1, 3, 3, 1)]


def test_persistence_roundtrip(tmp_path, catalog13):
    path = tmp_path / "cat.json"
    catalog13.save(path)
    loaded = CubeCatalog.load(path)
    assert loaded.entries_json() == catalog13.entries_json()
    assert json.loads(path.read_text())["format_version"] == 1


def test_load_or_build_rebuilds_on_version_mismatch(tmp_path):
    path = tmp_path / "cat.json"
    path.write_text(json.dumps({"format_version": 0, "entries": {}}))
    cat = CubeCatalog.load_or_build(path, [1, 3])
    assert sorted(cat.entries) == [1, 3]
    assert json.loads(path.read_text())["format_version"] == 1


def test_enumeration_deterministic():
    a = CubeCatalog.build(range(1, 22, 2))
    b = CubeCatalog.build(range(1, 22, 2))
    assert json.dumps(a.entries_json(), sort_keys=True) == json.dumps(b.entries_json(), sort_keys=True)


def test_csv(catalog13):
    text = catalog13.to_csv()
    lines = text.strip().split("\n")
    assert lines[0].split(",") == CSV_COLUMNS
    assert len(lines) == 1 + 8
    one = catalog_csv([known_cube("C1105")]).strip().split("\n")[1]
    assert one.startswith('1105,"-65,156,1092;420,1015,-120;1020,-408,119",13,5,17,')
    assert one.endswith(",38675,35,1105,false")


def test_1105_is_first_side_with_all_row_gcds_above_one():
    assert all(find_all_divisors_gt1([ell]) == [] for ell in range(1, 1105, 2))
