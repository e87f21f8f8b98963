"""Non-convex compact sets: box unions, finite point sets and planar polygon unions.

The functions ``msum`` and ``measure`` give one Minkowski-sum / Lebesgue
measure interface over every body type in the package:

* convex + convex stays a ``VPolytope``;
* box unions, point sets and axis boxes combine inside the ``BoxUnion``
  algebra in any dimension;
* in the plane anything else becomes a ``PolygonUnion``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .bodies import BoxUnion, PointSet, VPolytope, Zonotope, canonicalize
from .convex import as_polytope, minkowski_sum, volume

__all__ = [
    "boxunion_volume",
    "boxunion_sum",
    "boxunion_normalize",
    "boxunion_difference",
    "boxunion_inclusion_exclusion",
    "discrete_sumset",
    "PolygonUnion",
    "polygon_union_area",
    "polygon_union_inclusion_exclusion",
    "msum",
    "measure",
    "reflect",
    "contains_origin",
    "is_convex_body",
]


# ---------------------------------------------------------------------------
# box unions

def _box_volume(lo, hi):
    v = 1
    for a, b in zip(lo, hi):
        v = v * (b - a)
    return v


def _union_length(intervals):
    ivs = sorted(iv for iv in intervals if iv[0] < iv[1])
    total = 0
    cur_lo = cur_hi = None
    for lo, hi in ivs:
        if cur_hi is None or lo > cur_hi:
            if cur_hi is not None:
                total = total + (cur_hi - cur_lo)
            cur_lo, cur_hi = lo, hi
        elif hi > cur_hi:
            cur_hi = hi
    if cur_hi is not None:
        total = total + (cur_hi - cur_lo)
    return total


def _sweep_measure(boxes: list, axis: int, dim: int):
    if axis == dim - 1:
        return _union_length([(lo[axis], hi[axis]) for lo, hi in boxes])
    full = [b for b in boxes if b[0][axis] < b[1][axis]]
    if not full:
        return 0
    cuts = sorted(set([b[0][axis] for b in full] + [b[1][axis] for b in full]))
    total = 0
    for x0, x1 in zip(cuts, cuts[1:]):
        active = [b for b in full if b[0][axis] <= x0 and b[1][axis] >= x1]
        if active:
            total = total + (x1 - x0) * _sweep_measure(active, axis + 1, dim)
    return total


def boxunion_volume(U: BoxUnion):
    """Measure of the union, overlaps counted once (coordinate sweep)."""
    if not U.boxes:
        return Fraction(0)
    v = _sweep_measure(list(U.boxes), 0, U.dim)
    return Fraction(v) if isinstance(v, int) else v


def _sweep_disjoint(boxes: list, axis: int, dim: int) -> list:
    """Pairwise interior-disjoint boxes covering the full-dimensional part."""
    full = [b for b in boxes if b[0][axis] < b[1][axis]]
    if not full:
        return []
    cuts = sorted(set([b[0][axis] for b in full] + [b[1][axis] for b in full]))
    out = []
    if axis == dim - 1:
        merged = []
        for lo, hi in sorted((b[0][axis], b[1][axis]) for b in full):
            if merged and lo <= merged[-1][1]:
                if hi > merged[-1][1]:
                    merged[-1][1] = hi
            else:
                merged.append([lo, hi])
        return [((lo,), (hi,)) for lo, hi in merged]
    prev = None
    for x0, x1 in zip(cuts, cuts[1:]):
        active = [b for b in full if b[0][axis] <= x0 and b[1][axis] >= x1]
        if not active:
            prev = None
            continue
        sub = _sweep_disjoint(active, axis + 1, dim)
        key = tuple(sub)
        if prev is not None and prev[0] == key and prev[2] == x0:
            # extend the previous slab when the cross-section is unchanged
            prev[2] = x1
            continue
        prev = [key, x0, x1]
        out.append(prev)
    return [((x0,) + lo, (x1,) + hi) for key, x0, x1 in out for lo, hi in key]


def boxunion_normalize(U: BoxUnion) -> BoxUnion:
    """Interior-disjoint boxes with the same measure; null boxes are dropped."""
    boxes = _sweep_disjoint(list(U.boxes), 0, U.dim)
    return BoxUnion(boxes, U.dim)


def boxunion_difference(X: BoxUnion, Y: BoxUnion) -> BoxUnion:
    """Closure of X \\ Y up to a null set, as interior-disjoint boxes."""
    if X.dim != Y.dim:
        raise ValueError("dimension mismatch")
    dim = X.dim
    xs = _sweep_disjoint(list(X.boxes), 0, dim)
    ys = _sweep_disjoint(list(Y.boxes), 0, dim)
    if not xs:
        return BoxUnion([], dim)
    grids = []
    for ax in range(dim):
        grids.append(sorted(set([b[0][ax] for b in xs + ys] + [b[1][ax] for b in xs + ys])))

    def cells(box):
        ranges = []
        for ax in range(dim):
            g = grids[ax]
            i0 = g.index(box[0][ax])
            i1 = g.index(box[1][ax])
            ranges.append(range(i0, i1))
        out = [()]
        for r in ranges:
            out = [c + (i,) for c in out for i in r]
        return out

    ycells = set()
    for b in ys:
        ycells.update(cells(b))
    keep = []
    for b in xs:
        for c in cells(b):
            if c not in ycells:
                lo = tuple(grids[ax][c[ax]] for ax in range(dim))
                hi = tuple(grids[ax][c[ax] + 1] for ax in range(dim))
                keep.append((lo, hi))
    return boxunion_normalize(BoxUnion(keep, dim)) if keep else BoxUnion([], dim)


def _prune_contained(boxes: list) -> list:
    def inside(a, b):
        return all(b[0][k] <= a[0][k] and a[1][k] <= b[1][k] for k in range(len(a[0])))

    uniq = list(dict.fromkeys(boxes))
    # larger boxes first so that containment checks hit early
    uniq.sort(key=lambda b: [-(h - l) for l, h in zip(*b)])
    kept: list = []
    for b in uniq:
        if not any(inside(b, k) for k in kept):
            kept.append(b)
    return kept


def boxunion_sum(U: BoxUnion, V: BoxUnion) -> BoxUnion:
    """Minkowski sum: the union of all pairwise box sums."""
    if U.dim != V.dim:
        raise ValueError(f"dimension mismatch: {U.dim} vs {V.dim}")
    sums = [(tuple(a + b for a, b in zip(u[0], v[0])), tuple(a + b for a, b in zip(u[1], v[1])))
            for u in U.boxes for v in V.boxes]
    return BoxUnion(_prune_contained(sums), U.dim)


def boxunion_inclusion_exclusion(U: BoxUnion):
    """Union measure by inclusion-exclusion; exponential, a test oracle only."""
    boxes = list(U.boxes)
    total = 0
    for r in range(1, len(boxes) + 1):
        for combo in combinations(boxes, r):
            lo = tuple(max(b[0][k] for b in combo) for k in range(U.dim))
            hi = tuple(min(b[1][k] for b in combo) for k in range(U.dim))
            if all(a < b for a, b in zip(lo, hi)):
                v = _box_volume(lo, hi)
                total = total + (v if r % 2 else -v)
    return Fraction(total) if isinstance(total, int) else total


def discrete_sumset(S: PointSet, T: PointSet) -> PointSet:
    if S.dim != T.dim:
        raise ValueError(f"dimension mismatch: {S.dim} vs {T.dim}")
    return PointSet({tuple(a + b for a, b in zip(p, q)) for p in S.points for q in T.points},
                    S.dim)


# ---------------------------------------------------------------------------
# planar unions of convex polygons

class PolygonUnion:
    """Finite union of convex polygons (possibly degenerate) in the plane."""

    __slots__ = ("pieces",)
    dim = 2

    def __init__(self, pieces: Iterable[VPolytope]):
        ps = []
        for P in pieces:
            P = canonicalize(as_polytope(P))
            if P.dim != 2:
                raise ValueError("PolygonUnion pieces must be planar")
            ps.append(P)
        self.pieces = tuple(dict.fromkeys(ps))

    def __neg__(self):
        return PolygonUnion([-P for P in self.pieces])

    def __repr__(self):
        return f"PolygonUnion({len(self.pieces)} pieces)"


def _ccw_ring(P: VPolytope) -> list[tuple[Fraction, Fraction]]:
    hull = P.hull()
    if hull.rank < 2:
        return []
    return [P.vertices[i] for i in hull.vertices]


def _edges(ring):
    return [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]


def _cross_section(edges, x):
    ys = []
    for (x0, y0), (x1, y1) in edges:
        if x0 == x1:
            if x0 == x:
                ys.extend((y0, y1))
            continue
        lo, hi = (x0, x1) if x0 < x1 else (x1, x0)
        if lo <= x <= hi:
            ys.append(y0 + (y1 - y0) * (x - x0) / (x1 - x0))
    return (min(ys), max(ys)) if ys else None


def polygon_union_area(pieces: Sequence[VPolytope]) -> Fraction:
    """Exact area of a union of convex polygons by a vertical slab sweep.

    Slab boundaries are all vertex abscissae and all abscissae where edges
    of different polygons cross; inside a slab the union length is affine in
    x, so the midpoint rule is exact.
    """
    rings = [r for r in (_ccw_ring(canonicalize(as_polytope(P))) for P in pieces) if r]
    if not rings:
        return Fraction(0)
    edge_lists = [_edges(r) for r in rings]
    xs = {v[0] for r in rings for v in r}
    for i, j in combinations(range(len(rings)), 2):
        for (p0, p1) in edge_lists[i]:
            for (q0, q1) in edge_lists[j]:
                x = _crossing_x(p0, p1, q0, q1)
                if x is not None:
                    xs.add(x)
    cuts = sorted(xs)
    xr = [(min(v[0] for v in r), max(v[0] for v in r)) for r in rings]
    area = Fraction(0)
    for x0, x1 in zip(cuts, cuts[1:]):
        xm = (x0 + x1) / 2
        ivs = []
        for k, e in enumerate(edge_lists):
            if xr[k][0] <= x0 and xr[k][1] >= x1:
                cs = _cross_section(e, xm)
                if cs is not None:
                    ivs.append(cs)
        if ivs:
            area += (x1 - x0) * _union_length(ivs)
    return area


def _crossing_x(p0, p1, q0, q1):
    """Abscissa of a proper or touching crossing of two segments, if any."""
    rx, ry = p1[0] - p0[0], p1[1] - p0[1]
    sx, sy = q1[0] - q0[0], q1[1] - q0[1]
    den = rx * sy - ry * sx
    if den == 0:
        return None
    qpx, qpy = q0[0] - p0[0], q0[1] - p0[1]
    t = (qpx * sy - qpy * sx) / den
    u = (qpx * ry - qpy * rx) / den
    if 0 <= t <= 1 and 0 <= u <= 1:
        return p0[0] + t * rx
    return None


def _clip(subject, clipper):
    """Sutherland-Hodgman clip of a convex ring by a convex ccw ring."""
    out = list(subject)
    for a, b in _edges(clipper):
        if not out:
            break
        inp, out = out, []

        def side(p):
            return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])

        for i in range(len(inp)):
            cur, prev = inp[i], inp[i - 1]
            sc, sp = side(cur), side(prev)
            if sc >= 0:
                if sp < 0:
                    t = sp / (sp - sc)
                    out.append((prev[0] + t * (cur[0] - prev[0]), prev[1] + t * (cur[1] - prev[1])))
                out.append(cur)
            elif sp >= 0:
                t = sp / (sp - sc)
                out.append((prev[0] + t * (cur[0] - prev[0]), prev[1] + t * (cur[1] - prev[1])))
    return out


def _shoelace(ring):
    s = Fraction(0)
    for (x0, y0), (x1, y1) in _edges(ring):
        s += x0 * y1 - x1 * y0
    return abs(s) / 2


def polygon_union_inclusion_exclusion(pieces: Sequence[VPolytope]) -> Fraction:
    """Union area via pairwise clipping and inclusion-exclusion (test oracle)."""
    rings = [r for r in (_ccw_ring(canonicalize(as_polytope(P))) for P in pieces) if r]
    total = Fraction(0)
    for r in range(1, len(rings) + 1):
        for combo in combinations(rings, r):
            inter = combo[0]
            for other in combo[1:]:
                inter = _clip(inter, other)
                if len(inter) < 3:
                    break
            if len(inter) >= 3:
                a = _shoelace(inter)
                total += a if r % 2 else -a
    return total


# ---------------------------------------------------------------------------
# dispatch over body types

def is_convex_body(X) -> bool:
    return isinstance(X, (VPolytope, Zonotope))


def _axis_box(P: VPolytope):
    """(lo, hi) if the polytope is an axis-parallel box, else None."""
    P = canonicalize(P)
    lo = tuple(min(v[k] for v in P.vertices) for k in range(P.dim))
    hi = tuple(max(v[k] for v in P.vertices) for k in range(P.dim))
    expected = 1
    for a, b in zip(lo, hi):
        expected *= 2 if a != b else 1
    if len(P.vertices) != expected:
        return None
    for v in P.vertices:
        if any(x != a and x != b for x, a, b in zip(v, lo, hi)):
            return None
    return lo, hi


def _to_boxunion(X):
    if isinstance(X, BoxUnion):
        return X
    if isinstance(X, PointSet):
        return BoxUnion.from_points(X.points, X.dim)
    if is_convex_body(X):
        box = _axis_box(as_polytope(X))
        if box is not None:
            return BoxUnion([box])
    return None


def _to_polygon_union(X) -> PolygonUnion:
    if isinstance(X, PolygonUnion):
        return X
    if is_convex_body(X):
        return PolygonUnion([as_polytope(X)])
    if isinstance(X, PointSet):
        return PolygonUnion([VPolytope.point(p) for p in X.points])
    if isinstance(X, BoxUnion):
        for lo, hi in X.boxes:
            for x in lo + hi:
                if not isinstance(x, Fraction):
                    raise ValueError("polygon unions need rational coordinates")
        return PolygonUnion([VPolytope.box(lo, hi) for lo, hi in X.boxes])
    raise TypeError(f"unsupported body type {type(X).__name__}")


def _dim(X) -> int:
    return X.dim


def msum(X, Y):
    """Minkowski sum of any two supported bodies of equal dimension."""
    if _dim(X) != _dim(Y):
        raise ValueError(f"dimension mismatch: {_dim(X)} vs {_dim(Y)}")
    if isinstance(X, Zonotope) and isinstance(Y, Zonotope):
        return X + Y
    if is_convex_body(X) and is_convex_body(Y):
        return minkowski_sum(X, Y)
    if isinstance(X, PointSet) and isinstance(Y, PointSet):
        return discrete_sumset(X, Y)
    bx, by = _to_boxunion(X), _to_boxunion(Y)
    if bx is not None and by is not None:
        return boxunion_sum(bx, by)
    if _dim(X) == 1:
        raise AssertionError("every 1-D body is a box union")
    if _dim(X) == 2:
        px, py = _to_polygon_union(X), _to_polygon_union(Y)
        return PolygonUnion([minkowski_sum(p, q) for p in px.pieces for q in py.pieces])
    raise ValueError(
        f"unsupported non-convex combination in dimension {_dim(X)}: "
        f"{type(X).__name__} + {type(Y).__name__}")


def measure(X) -> Fraction:
    """Lebesgue measure in the ambient dimension."""
    if is_convex_body(X):
        return volume(X)
    if isinstance(X, PointSet):
        return Fraction(0)
    if isinstance(X, BoxUnion):
        return boxunion_volume(X)
    if isinstance(X, PolygonUnion):
        return polygon_union_area(X.pieces)
    raise TypeError(f"unsupported body type {type(X).__name__}")


def reflect(X):
    """-X."""
    return -X


def contains_origin(X) -> bool:
    if isinstance(X, PointSet):
        return tuple(0 for _ in range(X.dim)) in X.points
    if isinstance(X, BoxUnion):
        return any(all(a <= 0 <= b for a, b in zip(lo, hi)) for lo, hi in X.boxes)
    if is_convex_body(X):
        P = canonicalize(as_polytope(X))
        return _in_hull((Fraction(0),) * P.dim, P)
    raise TypeError(f"unsupported body type {type(X).__name__}")


def _in_hull(x, P: VPolytope) -> bool:
    Q = canonicalize(VPolytope(list(P.vertices) + [x], P.dim))
    return Q.vertices == P.vertices
