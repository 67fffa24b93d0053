"""Class counts, distinct cube polynomials, and the most lattice points per side.

    python scripts/census.py --ell-max 49

The last column answers, empirically, how many lattice points an irreducible
cube of a given side can hold at most.
"""

import argparse

from latticepoly.catalog import cubes_of_side
from latticepoly.cubes import divisor_profile, is_self_dual
from latticepoly.ehrhart import cube_closed_form


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ell-max", type=int, default=49)
    args = ap.parse_args()

    print(f"{'side':>5} {'classes':>8} {'polys':>6} {'self-dual':>10} {'row=col':>8} {'max L(1)':>10}")
    for ell in range(1, args.ell_max + 1, 2):
        cubes = cubes_of_side(ell, args.ell_max)
        polys = {cube_closed_form(c) for c in cubes}
        dual = sum(is_self_dual(c) for c in cubes)
        agree = sum(sum(divisor_profile(c).d) == sum(divisor_profile(c).col) for c in cubes)
        best = max(int(p.eval(1)) for p in polys)
        print(f"{ell:>5} {len(cubes):>8} {len(polys):>6} {dual:>10} {agree:>8} {best:>10}")


if __name__ == "__main__":
    main()
