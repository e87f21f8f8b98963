"""Volumes, Minkowski sums, projections and support functions of polytopes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt, lcm
from typing import Sequence

from .bodies import VPolytope, Zonotope, canonicalize
from .hull import convex_hull, det, fan_volume
from .scalar import as_fraction

__all__ = [
    "Triangulation",
    "volume",
    "minkowski_sum",
    "scale_sum",
    "project",
    "support",
    "triangulate",
    "as_polytope",
]


def as_polytope(K) -> VPolytope:
    if isinstance(K, VPolytope):
        return K
    if isinstance(K, Zonotope):
        return K.to_vpolytope()
    raise TypeError(f"expected a convex body, got {type(K).__name__}")


def volume(P) -> Fraction:
    """Exact n-dimensional volume; zero for lower-dimensional bodies."""
    P = as_polytope(P)
    if P._volume is None:
        if P._src is not None:
            den, pts, hull = P._src
        else:
            P = canonicalize(P) if not P.canonical else P
            den, pts = P.integer_points()
            hull = P.hull()
        P._volume = fan_volume(pts, hull) / den ** P.dim
    return P._volume


def _from_hull(dim: int, den: int, pts: list, hull) -> VPolytope:
    verts = sorted({pts[i] for i in hull.vertices})
    if den == 1:
        out = VPolytope([tuple(Fraction(x) for x in v) for v in verts], dim, _canonical=True)
    else:
        out = VPolytope([tuple(Fraction(x, den) for x in v) for v in verts], dim,
                        _canonical=True)
    out._int = (den, verts)
    out._src = (den, pts, hull)
    return out


def minkowski_sum(P, Q) -> VPolytope:
    """Canonical hull of all pairwise vertex sums."""
    P = canonicalize(as_polytope(P))
    Q = canonicalize(as_polytope(Q))
    if P.dim != Q.dim:
        raise ValueError(f"dimension mismatch: {P.dim} vs {Q.dim}")
    if len(P.vertices) == 1 and not any(P.vertices[0]):
        return Q
    if len(Q.vertices) == 1 and not any(Q.vertices[0]):
        return P
    dp, ip = P.integer_points()
    dq, iq = Q.integer_points()
    den = lcm(dp, dq)
    fp, fq = den // dp, den // dq
    if fp != 1:
        ip = [tuple(x * fp for x in p) for p in ip]
    if fq != 1:
        iq = [tuple(x * fq for x in q) for q in iq]
    pts = list({tuple(a + b for a, b in zip(p, q)) for p in ip for q in iq})
    pts.sort()
    hull = convex_hull(pts)
    return _from_hull(P.dim, den, pts, hull)


def scale_sum(coeffs: Sequence, bodies: Sequence) -> VPolytope:
    """sum_i t_i K_i for non-negative rational t_i."""
    if len(coeffs) != len(bodies):
        raise ValueError("coefficient and body counts differ")
    if not bodies:
        raise ValueError("no bodies given")
    ts = [as_fraction(t) for t in coeffs]
    if any(t < 0 for t in ts):
        raise ValueError("negative coefficient in scale_sum")
    polys = [as_polytope(K) for K in bodies]
    dim = polys[0].dim
    if any(K.dim != dim for K in polys):
        raise ValueError("dimension mismatch in scale_sum")
    out = VPolytope.origin(dim)
    for t, K in zip(ts, polys):
        if t:
            out = minkowski_sum(out, K.scale(t))
    return out


def _rational_norm(u: Sequence[Fraction]) -> Fraction:
    sq = sum(x * x for x in u)
    p, q = sq.numerator, sq.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp != p or rq * rq != q:
        raise ValueError(f"basis vector {tuple(str(x) for x in u)} has irrational length")
    return Fraction(rp, rq)


def project(P, basis: Sequence[Sequence]) -> VPolytope:
    """Orthogonal projection onto span(basis), in isometric subspace coordinates.

    The basis vectors must be pairwise orthogonal with rational lengths, so
    the coordinate ``<x, u>/|u|`` stays rational.
    """
    P = canonicalize(as_polytope(P))
    us = [tuple(as_fraction(x) for x in u) for u in basis]
    if not us:
        raise ValueError("empty basis")
    for u in us:
        if len(u) != P.dim:
            raise ValueError("basis vector dimension mismatch")
        if not any(u):
            raise ValueError("zero basis vector")
    for i in range(len(us)):
        for j in range(i + 1, len(us)):
            if sum(a * b for a, b in zip(us[i], us[j])) != 0:
                raise ValueError("basis is not orthogonal")
    scaled = [tuple(x / _rational_norm(u) for x in u) for u in us]
    pts = [tuple(sum(a * b for a, b in zip(v, u)) for u in scaled) for v in P.vertices]
    return canonicalize(VPolytope(pts, len(us)))


def support(P, u: Sequence) -> Fraction:
    """h_P(u) = max over vertices of <v, u>."""
    P = as_polytope(P)
    u = [as_fraction(x) for x in u]
    if len(u) != P.dim:
        raise ValueError("direction dimension mismatch")
    if not any(u):
        raise ValueError("zero direction")
    return max(sum(a * b for a, b in zip(v, u)) for v in P.vertices)


@dataclass(frozen=True)
class Triangulation:
    """Cone decomposition of a full-dimensional polytope from an interior apex.

    Each entry of ``facets`` lists ``dim`` vertex indices of a boundary
    simplex; the cone over it from ``apex`` is one piece of the body.
    """

    apex: tuple[Fraction, ...]
    vertices: tuple[tuple[Fraction, ...], ...]
    facets: tuple[tuple[int, ...], ...]

    def simplex_volumes(self) -> list[Fraction]:
        d = len(self.apex)
        out = []
        for f in self.facets:
            rows = [[self.vertices[v][k] - self.apex[k] for k in range(d)] for v in f]
            den = 1
            for r in rows:
                for x in r:
                    den = lcm(den, x.denominator)
            irows = [[int(x * den) for x in r] for r in rows]
            out.append(Fraction(abs(det(irows)), factorial(d) * den ** d))
        return out


def triangulate(P) -> Triangulation:
    P = canonicalize(as_polytope(P))
    hull = P.hull()
    verts = P.vertices
    m = len(verts)
    apex = tuple(sum(v[k] for v in verts) / m for k in range(P.dim))
    facets = hull.facets if hull.rank == P.dim else ()
    return Triangulation(apex, verts, tuple(facets))
