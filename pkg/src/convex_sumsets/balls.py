"""Rational polytopes inside the Euclidean unit ball.

Vertices are grid points with the common denominator 2^24, rounded from
points of the unit sphere and pulled inward until they lie in the closed
ball.  Hence ``r B <= P <= B`` where the inradius r is computed exactly from
the facets; a shared denominator keeps the integer hull arithmetic small.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .bodies import VPolytope, canonicalize
from .hull import _cofactor_normal

__all__ = ["ball_polytope", "inradius_squared", "sqrt_lower", "power_lower"]

_DEN = 1 << 24


def _grid_point(target) -> tuple[Fraction, ...]:
    coords = [round(x * _DEN) for x in target]
    # pull inward along the largest coordinate until the point is in the ball
    while sum(c * c for c in coords) > _DEN * _DEN:
        k = max(range(len(coords)), key=lambda i: abs(coords[i]))
        coords[k] -= 1 if coords[k] > 0 else -1
    return tuple(Fraction(c, _DEN) for c in coords)


def _polygon(level: int) -> list[tuple[Fraction, ...]]:
    count = 1 << level
    if count < 4:
        raise ValueError("planar ball approximation needs level >= 2")
    return [_grid_point((math.cos(2 * math.pi * k / count), math.sin(2 * math.pi * k / count)))
            for k in range(count)]


def _sphere(level: int) -> list[tuple[Fraction, ...]]:
    lon = 1 << level
    lat = max(2, lon // 2)
    pts = [_grid_point((0.0, 0.0, 1.0)), _grid_point((0.0, 0.0, -1.0))]
    for i in range(1, lat):
        phi = math.pi * i / lat
        for j in range(lon):
            theta = 2 * math.pi * (j + 0.5 * (i % 2)) / lon
            pts.append(_grid_point((math.sin(phi) * math.cos(theta),
                                    math.sin(phi) * math.sin(theta), math.cos(phi))))
    return pts


@lru_cache(maxsize=16)
def ball_polytope(dim: int, level: int) -> VPolytope:
    """Level-``level`` rational polytope inscribed in the unit ball.

    Dimension 2: a 2^level-gon with vertices near the regular angles.
    Dimension 3: 2^level meridians times 2^(level-1) latitude bands, plus poles.
    """
    if dim == 2:
        return canonicalize(VPolytope(_polygon(level), 2))
    if dim == 3:
        if level < 2:
            raise ValueError("spatial ball approximation needs level >= 2")
        return canonicalize(VPolytope(_sphere(level), 3))
    raise ValueError(f"ball approximations exist in dimensions 2 and 3, not {dim}")


def inradius_squared(P: VPolytope) -> Fraction:
    """Squared distance from the origin to the nearest facet hyperplane.

    Requires a full-dimensional polytope with the origin in its interior.
    """
    P = canonicalize(P)
    hull = P.hull()
    if hull.rank != P.dim:
        raise ValueError("polytope is not full-dimensional")
    den, pts = P.integer_points()
    best = None
    for facet in hull.facets:
        base = pts[facet[0]]
        normal = _cofactor_normal(base, [pts[v] for v in facet[1:]])
        off = sum(a * b for a, b in zip(normal, base))
        if off == 0:
            raise ValueError("origin lies on the boundary")
        d2 = Fraction(off * off, den * den * sum(a * a for a in normal))
        if best is None or d2 < best:
            best = d2
    return best


def sqrt_lower(x: Fraction, bits: int = 64) -> Fraction:
    """Rational lower bound for sqrt(x), within 2^-bits."""
    if x < 0:
        raise ValueError("negative argument")
    scale = 1 << bits
    return Fraction(isqrt(math.floor(x * scale * scale)), scale)


def power_lower(r0: Fraction, k: int) -> Fraction:
    return r0 ** k
