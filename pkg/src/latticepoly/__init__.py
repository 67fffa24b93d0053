"""Regular lattice polyhedra in Z^3 and their Ehrhart polynomials.

Cubes, regular tetrahedra and regular octahedra with integer vertices are
built from scaled orthogonal integer matrices. Their Ehrhart polynomials are
computed in closed form from gcd invariants and, independently, by exact
lattice-point counting followed by exact interpolation.
"""

from latticepoly.exact import EhrhartCubic, cross, det3, dot, gcd3
from latticepoly.cubes import (
    CubeMatrix,
    DivisorProfile,
    NotACubeError,
    canonicalize,
    divisor_profile,
    from_rows,
    is_irreducible,
    is_self_dual,
    pythagorean_cube,
    rodrigues,
)
from latticepoly.polytope import (
    LatticePolytope,
    cube_polytope,
    dilate,
    facets_from_vertices,
    octahedron_of,
    tetrahedron_of,
)
from latticepoly.counting import CountResult, count, count_half_open_cube
from latticepoly.ehrhart import (
    IdentityReport,
    cube_closed_form,
    fit_cubic,
    lambda_coefficients,
    mu1_nu1,
    tetra_octa_polynomials,
)

__all__ = [
    "EhrhartCubic",
    "cross",
    "det3",
    "dot",
    "gcd3",
    "CubeMatrix",
    "DivisorProfile",
    "NotACubeError",
    "canonicalize",
    "divisor_profile",
    "from_rows",
    "is_irreducible",
    "is_self_dual",
    "pythagorean_cube",
    "rodrigues",
    "LatticePolytope",
    "cube_polytope",
    "dilate",
    "facets_from_vertices",
    "octahedron_of",
    "tetrahedron_of",
    "CountResult",
    "count",
    "count_half_open_cube",
    "IdentityReport",
    "cube_closed_form",
    "fit_cubic",
    "lambda_coefficients",
    "mu1_nu1",
    "tetra_octa_polynomials",
]
