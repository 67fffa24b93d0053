"""Scan odd sides for irreducible cubes whose three row gcds all exceed 1.

    python scripts/first_side_all_divisors.py --ell-max 1105

Prints every side where such a cube exists and checks that the known side-1105
matrix is among the classes found there.
"""

import argparse
import time

from latticepoly.catalog import find_all_divisors_gt1, known_cube, same_class
from latticepoly.cubes import divisor_profile


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ell-max", type=int, default=1105)
    args = ap.parse_args()

    start = time.perf_counter()
    first = None
    for ell in range(1, args.ell_max + 1, 2):
        found = find_all_divisors_gt1([ell])
        if found:
            first = first or ell
            print(f"side {ell}: {len(found)} class(es)")
            for c in found:
                print(f"   d={divisor_profile(c).d} rows={c.rows}")
    print(f"first side: {first}  ({time.perf_counter() - start:.1f}s)")
    if args.ell_max >= 1105:
        hits = [c for c in find_all_divisors_gt1([1105]) if same_class(c, known_cube("C1105"))]
        print(f"known side-1105 matrix rediscovered: {bool(hits)}")


if __name__ == "__main__":
    main()
