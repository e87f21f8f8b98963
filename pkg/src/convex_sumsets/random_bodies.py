"""Seeded random bodies with small-denominator rational coordinates.

Each sample draws from its own stream ``default_rng(SeedSequence([seed, index]))``
so that a sweep gives the same bodies whatever the order of evaluation.
Degenerate draws (not full-dimensional) are detected exactly and redrawn;
the number of redraws is reported alongside the body.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .bodies import BoxUnion, PointSet, VPolytope, Zonotope
from .hull import affine_rank

__all__ = [
    "DEFAULT_DENOMINATOR",
    "GENERATORS",
    "sample_rng",
    "random_polytope",
    "random_simplex",
    "random_zonotope",
    "random_triangle",
    "random_boxunion",
    "random_pointset",
    "random_body",
]

DEFAULT_DENOMINATOR = 1 << 16
_MAX_REDRAWS = 1000


def sample_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed & (2 ** 64 - 1), index]))


def _coords(rng, shape, den, lo=0):
    return [[Fraction(int(x), den) for x in row] for row in rng.integers(lo * den, den + 1, size=shape)]


def random_polytope(rng, dim: int, k: int | None = None,
                    den: int = DEFAULT_DENOMINATOR) -> tuple[VPolytope, int]:
    """Hull of ``k`` (default 2n+2) uniform grid points in the unit box."""
    k = 2 * dim + 2 if k is None else k
    if k < dim + 1:
        raise ValueError(f"need at least {dim + 1} points for a full-dimensional polytope")
    for redraws in range(_MAX_REDRAWS):
        pts = [tuple(row) for row in _coords(rng, (k, dim), den)]
        if affine_rank([tuple(int(x * den) for x in p) for p in pts])[0] == dim:
            return VPolytope(pts, dim), redraws
    raise RuntimeError("could not draw a full-dimensional polytope")


def random_simplex(rng, dim: int, den: int = DEFAULT_DENOMINATOR) -> tuple[VPolytope, int]:
    return random_polytope(rng, dim, dim + 1, den)


def random_triangle(rng, den: int = DEFAULT_DENOMINATOR) -> tuple[VPolytope, int]:
    return random_simplex(rng, 2, den)


def random_zonotope(rng, dim: int, g: int | None = None,
                    den: int = DEFAULT_DENOMINATOR) -> tuple[Zonotope, int]:
    """Centre in the unit box, ``g`` (default n+1) generators in [-1/2, 1/2]^n, spanning R^n."""
    g = dim + 1 if g is None else g
    if g < dim:
        raise ValueError("fewer generators than the dimension")
    for redraws in range(_MAX_REDRAWS):
        center = tuple(_coords(rng, (1, dim), den)[0])
        gens = [tuple(x - Fraction(1, 2) for x in row) for row in _coords(rng, (g, dim), den)]
        ints = [tuple(0 for _ in range(dim))] + [tuple(int(x * den * 2) for x in v) for v in gens]
        if affine_rank(ints)[0] == dim:
            return Zonotope(center, gens), redraws
    raise RuntimeError("could not draw a spanning zonotope")


def random_boxunion(rng, dim: int, boxes: int = 3, den: int = 16) -> tuple[BoxUnion, int]:
    """Union of 1..``boxes`` boxes with corners on the grid (1/den) Z in [0, 1]."""
    count = int(rng.integers(1, boxes + 1))
    out = []
    for _ in range(count):
        a = rng.integers(0, den + 1, size=(2, dim))
        lo = tuple(Fraction(int(min(x, y)), den) for x, y in zip(a[0], a[1]))
        hi = tuple(Fraction(int(max(x, y)), den) for x, y in zip(a[0], a[1]))
        out.append((lo, hi))
    return BoxUnion(out, dim), 0


def random_pointset(rng, dim: int, size: int = 4, den: int = 16) -> tuple[PointSet, int]:
    pts = [tuple(row) for row in _coords(rng, (size, dim), den)]
    return PointSet(pts, dim), 0


def random_body(rng, dim: int, generator: str = "random-polytope") -> tuple[object, int]:
    """One body from the named generator; ``mixed`` picks polytope, zonotope or simplex."""
    if generator == "mixed":
        generator = ("random-polytope", "random-zonotope", "random-triangle")[int(rng.integers(3))]
    if generator == "random-polytope":
        return random_polytope(rng, dim)
    if generator == "random-zonotope":
        return random_zonotope(rng, dim)
    if generator == "random-triangle":
        return random_simplex(rng, dim)
    if generator == "random-boxunion":
        return random_boxunion(rng, dim)
    if generator == "random-pointset":
        return random_pointset(rng, dim)
    raise ValueError(f"unknown generator {generator!r}")


GENERATORS = ("random-polytope", "random-zonotope", "random-triangle", "mixed",
              "random-boxunion", "random-pointset")
