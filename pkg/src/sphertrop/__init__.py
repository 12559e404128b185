"""Exact-arithmetic toolkit for spherical tropicalization and balancing.

Computes tropicalizations of points and parametrized curve branches for a
catalog of spherical homogeneous spaces (tori, sl2_u, gln), models colored
cone/fan combinatorics with full axiom validation, and verifies the
balancing condition for the weighted ray fans of tropical curves.
"""

from .balance import (
    BalanceReport,
    WeightedRayFan,
    assemble,
    check_balancing,
    check_quotient_balancing,
    pairing_residual,
    solve_colored_weights,
)
from .catalog import builtin_space, reference_fixture, sl2u_family, space_by_id
from .lattice import (
    Cone,
    ZeroVectorError,
    cone_contains,
    cone_dual,
    faces,
    primitive,
    quotient_projection,
    relint_meets,
    relint_meets_region,
    smith_normal_form,
)
from .luna_vust import (
    ColoredCone,
    ColoredFan,
    SphericalSpace,
    StarResult,
    colored_faces,
    decolor,
    is_toroidal,
    star,
    validate_colored_cone,
    validate_colored_fan,
)
from .puiseux import (
    INF,
    PuiseuxPoly,
    determinant,
    format_puiseux,
    min_minor_valuation,
    parse_puiseux,
    val,
)
from .tropicalize import (
    CurveBranch,
    NonIntegerRayError,
    OffSpaceError,
    TropicalPoint,
    ZeroTropicalizationError,
    branch_rays,
    invariant_factor_valuations,
    trop_branch_ray,
    trop_point,
    trop_sl2u,
    trop_torus,
)

__version__ = "0.1.0"

__all__ = [
    "BalanceReport",
    "ColoredCone",
    "ColoredFan",
    "Cone",
    "CurveBranch",
    "INF",
    "NonIntegerRayError",
    "OffSpaceError",
    "PuiseuxPoly",
    "SphericalSpace",
    "StarResult",
    "TropicalPoint",
    "WeightedRayFan",
    "ZeroTropicalizationError",
    "ZeroVectorError",
    "assemble",
    "branch_rays",
    "builtin_space",
    "check_balancing",
    "check_quotient_balancing",
    "colored_faces",
    "cone_contains",
    "cone_dual",
    "decolor",
    "determinant",
    "faces",
    "format_puiseux",
    "invariant_factor_valuations",
    "is_toroidal",
    "min_minor_valuation",
    "pairing_residual",
    "parse_puiseux",
    "primitive",
    "quotient_projection",
    "reference_fixture",
    "relint_meets",
    "relint_meets_region",
    "sl2u_family",
    "smith_normal_form",
    "solve_colored_weights",
    "space_by_id",
    "star",
    "trop_branch_ray",
    "trop_point",
    "trop_sl2u",
    "trop_torus",
    "val",
    "validate_colored_cone",
    "validate_colored_fan",
]
