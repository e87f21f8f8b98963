"""Exact convex hulls of integer point sets in dimensions 1 to 4.

All predicates are decided in integer arithmetic.  In dimensions 3 and 4 the
beneath-beyond insertion screens every point against all facets at once with
a float64 evaluation and a forward error bound; only the screenings that fall
inside the error bound are re-decided with Python integers, so the result is
exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, gcd
from typing import Sequence

import numpy as np

__all__ = ["HullResult", "convex_hull", "affine_rank", "det", "fan_volume"]

IntPoint = tuple[int, ...]

# float screening tolerance relative to the magnitude of the dot product
_REL_TOL = 1e-12
# beyond this coordinate size normals may overflow float64; use pure integers
_FLOAT_SAFE_BITS = 200


@dataclass(frozen=True)
class HullResult:
    """Combinatorial hull of ``points``.

    ``vertices`` indexes the extreme points of the input.  ``facets`` is a
    triangulation of the boundary (index tuples of length ``dim``) and is only
    filled for full-dimensional input; ``rank`` is the affine dimension.
    """

    dim: int
    rank: int
    vertices: tuple[int, ...]
    facets: tuple[tuple[int, ...], ...]


def det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a small square integer matrix."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        (a, b), (c, d) = rows
        return a * d - b * c
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    total = 0
    first = rows[0]
    rest = rows[1:]
    for j in range(n):
        if first[j]:
            minor = [r[:j] + r[j + 1:] for r in rest]
            term = first[j] * det(minor)
            total += -term if j & 1 else term
    return total


def _cofactor_normal(base: IntPoint, others: Sequence[IntPoint]) -> list[int]:
    """Primitive normal of the hyperplane through ``base`` and ``others`` (d-1 points)."""
    d = len(base)
    if d == 3:
        (a0, a1, a2), (b0, b1, b2) = [[o[k] - base[k] for k in range(3)] for o in others]
        normal = [a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0]
    elif d == 4:
        (a0, a1, a2, a3), (b0, b1, b2, b3), (c0, c1, c2, c3) = [
            [o[k] - base[k] for k in range(4)] for o in others]
        # 2x2 minors of the first two rows
        m01 = a0 * b1 - a1 * b0
        m02 = a0 * b2 - a2 * b0
        m03 = a0 * b3 - a3 * b0
        m12 = a1 * b2 - a2 * b1
        m13 = a1 * b3 - a3 * b1
        m23 = a2 * b3 - a3 * b2
        normal = [
            c1 * m23 - c2 * m13 + c3 * m12,
            -(c0 * m23 - c2 * m03 + c3 * m02),
            c0 * m13 - c1 * m03 + c3 * m01,
            -(c0 * m12 - c1 * m02 + c2 * m01),
        ]
        # cofactor signs chosen so that normal is orthogonal to every row
    else:
        rows = [tuple(o[k] - base[k] for k in range(d)) for o in others]
        normal = []
        for j in range(d):
            minor = [r[:j] + r[j + 1:] for r in rows]
            m = det(minor) if minor else 1
            normal.append(-m if j & 1 else m)
    g = 0
    for x in normal:
        g = gcd(g, x)
    if g > 1:
        normal = [x // g for x in normal]
    return normal


def _echelon_insert(basis: list[list[Fraction]], pivots: list[int], v) -> bool:
    """Reduce ``v`` against a row-echelon basis; append it if independent."""
    w = [Fraction(x) for x in v]
    for row, p in zip(basis, pivots):
        if w[p]:
            f = w[p] / row[p]
            w = [a - f * b for a, b in zip(w, row)]
    for j, x in enumerate(w):
        if x:
            basis.append(w)
            pivots.append(j)
            return True
    return False


def affine_rank(points: Sequence[IntPoint]) -> tuple[int, list[int]]:
    """Affine dimension of ``points`` and indices of an affinely independent subset."""
    if not points:
        raise ValueError("empty point set")
    p0 = points[0]
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    chosen = [0]
    d = len(p0)
    for i in range(1, len(points)):
        v = [points[i][k] - p0[k] for k in range(d)]
        if _echelon_insert(basis, pivots, v):
            chosen.append(i)
            if len(basis) == d:
                break
    return len(basis), chosen


def _hull_1d(points: Sequence[IntPoint]) -> list[int]:
    lo = min(range(len(points)), key=lambda i: points[i][0])
    hi = max(range(len(points)), key=lambda i: points[i][0])
    return [lo] if points[lo] == points[hi] else [lo, hi]


def _hull_2d(points: Sequence[IntPoint]) -> list[int]:
    """Monotone chain; strictly convex counter-clockwise vertex indices."""
    order = sorted(range(len(points)), key=lambda i: points[i])
    uniq = []
    for i in order:
        if not uniq or points[uniq[-1]] != points[i]:
            uniq.append(i)
    if len(uniq) <= 2:
        return uniq

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[int] = []
    for i in uniq:
        while len(lower) >= 2 and cross(points[lower[-2]], points[lower[-1]], points[i]) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(uniq):
        while len(upper) >= 2 and cross(points[upper[-2]], points[upper[-1]], points[i]) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


class _BeneathBeyond:
    """Incremental hull for full-dimensional integer point sets, d >= 3."""

    def __init__(self, points: Sequence[IntPoint], simplex: list[int], exact: bool = False):
        self.points = points
        # exact mode skips the float screen (coordinates too large for float64)
        self.exact = exact
        d = self.d = len(points[0])
        # interior reference point, scaled by d + 1 to stay integral
        self.center = tuple(sum(points[i][k] for i in simplex) for k in range(d))
        self.scale = d + 1
        cap = 256
        self.nf = np.zeros((cap, d))
        self.bf = np.zeros(cap)
        self.mag = np.zeros(cap)
        self.alive = np.zeros(cap, dtype=bool)
        self.normals: list[list[int]] = []
        self.offsets: list[int] = []
        self.verts: list[tuple[int, ...] | None] = []
        self.ridges: dict[tuple[int, ...], list[int]] = {}
        self.alive_ids: set[int] = set()
        simplex = sorted(simplex)
        self._add_facets([tuple(simplex[:k] + simplex[k + 1:]) for k in range(d + 1)])

    def _add_facets(self, vert_lists: list[tuple[int, ...]]):
        pts = self.points
        center, scale = self.center, self.scale
        first = len(self.normals)
        ridges = self.ridges
        for verts in vert_lists:
            base = pts[verts[0]]
            normal = _cofactor_normal(base, [pts[v] for v in verts[1:]])
            offset = sum(a * b for a, b in zip(normal, base))
            if sum(a * b for a, b in zip(normal, center)) > offset * scale:
                normal = [-a for a in normal]
                offset = -offset
            fid = len(self.normals)
            self.normals.append(normal)
            self.offsets.append(offset)
            self.verts.append(verts)
            for skip in range(len(verts)):
                key = verts[:skip] + verts[skip + 1:]
                lst = ridges.get(key)
                if lst is None:
                    ridges[key] = [fid]
                else:
                    lst.append(fid)
        last = len(self.normals)
        if self.exact:
            self.alive_ids.update(range(first, last))
            return
        while last > len(self.alive):
            self._grow()
        block = np.array(self.normals[first:last], dtype=float)
        self.nf[first:last] = block
        self.bf[first:last] = np.array(self.offsets[first:last], dtype=float)
        self.mag[first:last] = np.abs(block).sum(axis=1)
        self.alive[first:last] = True

    def _grow(self):
        cap = 2 * len(self.alive)
        d = self.d
        for name, shape in (("nf", (cap, d)), ("mag", (cap,)), ("bf", (cap,))):
            old = getattr(self, name)
            new = np.zeros(shape)
            new[: len(old)] = old
            setattr(self, name, new)
        alive = np.zeros(cap, dtype=bool)
        alive[: len(self.alive)] = self.alive
        self.alive = alive

    def _remove_facet(self, fid: int):
        verts = self.verts[fid]
        if self.exact:
            self.alive_ids.discard(fid)
        else:
            self.alive[fid] = False
        for skip in range(len(verts)):
            key = verts[:skip] + verts[skip + 1:]
            lst = self.ridges[key]
            lst.remove(fid)
            if not lst:
                del self.ridges[key]
        self.verts[fid] = None

    def visible(self, idx: int) -> list[int]:
        p = self.points[idx]
        if self.exact:
            return [f for f in self.alive_ids
                    if sum(a * b for a, b in zip(self.normals[f], p)) > self.offsets[f]]
        n = len(self.normals)
        pf = np.asarray(p, dtype=float)
        s = self.nf[:n] @ pf - self.bf[:n]
        # |n.p - b| error bound: relative to max|p| * sum|n| + |b|
        tol = _REL_TOL * (self.mag[:n] * np.abs(pf).max() + np.abs(self.bf[:n]))
        alive = self.alive[:n]
        out = np.nonzero(alive & (s > tol))[0].tolist()
        for fid in np.nonzero(alive & (np.abs(s) <= tol))[0].tolist():
            normal = self.normals[fid]
            if sum(a * b for a, b in zip(normal, p)) > self.offsets[fid]:
                out.append(fid)
        return out

    def insert(self, idx: int) -> bool:
        vis = self.visible(idx)
        if not vis:
            return False
        visset = set(vis)
        horizon = []
        for fid in vis:
            verts = self.verts[fid]
            for skip in range(len(verts)):
                key = verts[:skip] + verts[skip + 1:]
                for other in self.ridges[key]:
                    if other != fid and other not in visset:
                        horizon.append(key)
        for fid in vis:
            self._remove_facet(fid)
        # new facets keep sorted vertex tuples so ridge keys need no sorting
        self._add_facets([tuple(sorted(key + (idx,))) for key in horizon])
        return True

    def _alive_ids(self) -> list[int]:
        if self.exact:
            return sorted(self.alive_ids)
        return [f for f in range(len(self.normals)) if self.alive[f]]

    def facets(self) -> list[tuple[int, ...]]:
        return [self.verts[f] for f in self._alive_ids()]

    def facet_normals(self) -> list[list[int]]:
        return [self.normals[f] for f in self._alive_ids()]


_PRIME = (1 << 61) - 1


def _rank_mod(vectors, p: int = _PRIME) -> int:
    rows = [[x % p for x in v] for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        prow = [x * inv % p for x in rows[rank]]
        rows[rank] = prow
        for r in range(rank + 1, len(rows)):
            f = rows[r][col]
            if f:
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], prow)]
        rank += 1
    return rank


def _rank(vectors) -> int:
    # rank mod p never exceeds the rational rank, so a full modular rank is conclusive
    vectors = list(vectors)
    if not vectors:
        return 0
    d = len(vectors[0])
    # cheap exits: a few d-subsets with nonzero determinant
    for tried, combo in enumerate(combinations(vectors, d)):
        if tried >= 8:
            break
        if det(combo) != 0:
            return d
    if _rank_mod(vectors) == d:
        return len(vectors[0])
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for v in vectors:
        _echelon_insert(basis, pivots, v)
    return len(basis)


def _extreme_vertices(d: int, facets, normals) -> list[int]:
    # a boundary point is a vertex iff its incident facet normals span R^d
    incident: dict[int, set[tuple[int, ...]]] = {}
    for f, nrm in zip(facets, normals):
        for v in f:
            incident.setdefault(v, set()).add(tuple(nrm))
    verts = [v for v, nset in incident.items() if len(nset) >= d and _rank(list(nset)) == d]
    verts.sort()
    return verts


def _hull_full(points: Sequence[IntPoint]) -> tuple[list[int], list[tuple[int, ...]]]:
    return _hull_beneath_beyond(points)


def _hull_beneath_beyond(points: Sequence[IntPoint]) -> tuple[list[int], list[tuple[int, ...]]]:
    d = len(points[0])
    n = len(points)
    exact = max(abs(x) for p in points for x in p).bit_length() > _FLOAT_SAFE_BITS
    if exact:
        c = [sum(p[k] for p in points) for k in range(d)]
        far = [sum((n * p[k] - c[k]) ** 2 for k in range(d)) for p in points]
    else:
        arr = np.asarray(points, dtype=float)
        centroid = arr.mean(axis=0)
        far = np.einsum("ij,ij->i", arr - centroid, arr - centroid)
    # farthest points first: early hulls are large, so most later points are inside
    order = sorted(range(n), key=lambda i: (-far[i], i))
    ordered = [points[i] for i in order]
    rank, chosen = affine_rank(ordered)
    assert rank == d
    simplex = [order[i] for i in chosen]
    bb = _BeneathBeyond(points, simplex, exact)
    in_simplex = set(simplex)
    for i in order:
        if i not in in_simplex:
            bb.insert(i)
    facets = bb.facets()
    return _extreme_vertices(d, facets, bb.facet_normals()), facets


def _injective_coordinates(points: Sequence[IntPoint], chosen: list[int]) -> list[int]:
    """Coordinate subset on which the affine hull projects bijectively."""
    d = len(points[0])
    p0 = points[chosen[0]]
    dirs = [[points[i][k] - p0[k] for k in range(d)] for i in chosen[1:]]
    r = len(dirs)
    for cols in combinations(range(d), r):
        if det([[row[c] for c in cols] for row in dirs]) != 0:
            return list(cols)
    raise AssertionError("no injective coordinate projection")


def convex_hull(points: Sequence[IntPoint]) -> HullResult:
    """Extreme points (and, if full-dimensional, a boundary triangulation)."""
    if not points:
        raise ValueError("empty point set")
    d = len(points[0])
    rank, chosen = affine_rank(points)
    if rank == 0:
        return HullResult(d, 0, (0,), ())
    if rank < d:
        cols = _injective_coordinates(points, chosen)
        sub = [tuple(p[c] for c in cols) for p in points]
        inner = convex_hull(sub)
        return HullResult(d, rank, tuple(sorted(inner.vertices)), ())
    if d == 1:
        verts = _hull_1d(points)
        return HullResult(1, 1, tuple(sorted(verts)), tuple((v,) for v in verts))
    if d == 2:
        ring = _hull_2d(points)
        facets = tuple((ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring)))
        return HullResult(2, 2, tuple(ring), facets)
    verts, facets = _hull_full(points)
    return HullResult(d, d, tuple(verts), tuple(facets))


def fan_volume(points: Sequence[IntPoint], hull: HullResult) -> Fraction:
    """Volume of a full-dimensional hull, coned from the vertex centroid."""
    d = hull.dim
    if hull.rank < d:
        return Fraction(0)
    if d == 1:
        xs = [points[v][0] for v in hull.vertices]
        return Fraction(max(xs) - min(xs))
    m = len(hull.vertices)
    apex = [sum(points[v][k] for v in hull.vertices) for k in range(d)]
    total = 0
    for facet in hull.facets:
        rows = [[m * points[v][k] - apex[k] for k in range(d)] for v in facet]
        total += abs(det(rows))
    return Fraction(total, factorial(d) * m ** d)
