"""Exact verification of sumset and mixed-volume inequalities for convex bodies,
box unions and finite sets in dimensions 1 to 4."""

from .bodies import MAX_DIM, BoxUnion, PointSet, VPolytope, Zonotope, canonicalize, direct_product
from .convex import minkowski_sum, project, support, triangulate, volume
from .inequalities import InequalityReport
from .mixed import (MixedVolumeQuery, VolumePolynomial, alternating_sum, mixed_volume,
                    mixed_volume_interpolated, steiner_coefficients, volume_polynomial)
from .regions import PolygonUnion, measure, msum
from .scalar import Scalar

__all__ = [
    "MAX_DIM",
    "BoxUnion",
    "PointSet",
    "PolygonUnion",
    "VPolytope",
    "Zonotope",
    "Scalar",
    "InequalityReport",
    "MixedVolumeQuery",
    "VolumePolynomial",
    "canonicalize",
    "direct_product",
    "minkowski_sum",
    "project",
    "support",
    "triangulate",
    "volume",
    "measure",
    "msum",
    "mixed_volume",
    "mixed_volume_interpolated",
    "volume_polynomial",
    "steiner_coefficients",
    "alternating_sum",
]

__version__ = "0.1.0"
