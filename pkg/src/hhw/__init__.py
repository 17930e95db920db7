"""Exact Hochschild cohomology, Hodge decomposition and deformation checks
for small commutative algebras over Q."""

from .algebra import Algebra, build_quotient_poly_univar, build_truncated_poly, is_etale, validate
from .cohomology import Bicomplex, cohomology_dims, hodge_cohomology_dims
from .hochschild import (
    Cochain,
    ResourceBoundError,
    d_prime,
    gerstenhaber_bracket,
    hochschild_d,
    hodge_components,
    homotopy_k,
)
from .poisson import is_poisson, jacobiator, poisson_bracket, sn_bracket
from .poly import PolyCoeff, PolyMultivector
from .quantize import ConstantBivector, FormalPoly, assoc_defect, mc_defect, moyal_star
from .spectral import (
    first_page_first_filtration,
    first_page_second_filtration,
    smooth_collapse_check,
    total_z2_cohomology,
)

__version__ = "0.1.0"
