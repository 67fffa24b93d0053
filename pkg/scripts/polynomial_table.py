"""Print cube, tetrahedron and octahedron polynomials for every class up to a side bound.

    python scripts/polynomial_table.py --ell-max 21
"""

import argparse

from latticepoly.catalog import cubes_of_side
from latticepoly.counting import boundary_edge_interior_count
from latticepoly.cubes import divisor_profile
from latticepoly.ehrhart import cube_closed_form, fitted_polynomial, tetra_octa_polynomials
from latticepoly.polytope import cube_polytope, tetrahedron_of


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ell-max", type=int, default=21)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    for ell in range(1, args.ell_max + 1, 2):
        for i, cube in enumerate(cubes_of_side(ell, max(args.ell_max, 21)), 1):
            prof = divisor_profile(cube)
            lc = fitted_polynomial(cube_polytope(cube), args.threads)
            assert lc == cube_closed_form(cube)
            lt, lo = tetra_octa_polynomials(cube, args.threads)
            tau = boundary_edge_interior_count(tetrahedron_of(cube))
            print(f"side {ell} class {i}: rows {cube.rows}")
            print(f"   d={prof.d} D={prof.D} tau={tau}")
            print(f"   cube        {lc}")
            print(f"   tetrahedron {lt}")
            print(f"   octahedron  {lo}")
            print(f"   nu2+2mu2 = {lo.c1 + 2 * lt.c1}  (6+tau = {6 + tau})")


if __name__ == "__main__":
    main()
