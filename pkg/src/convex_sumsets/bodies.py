"""Body types: vertex polytopes, zonotopes, box unions and finite point sets.

Points are plain tuples.  Convex bodies (``VPolytope``, ``Zonotope``) carry
rational coordinates as ``Fraction``; box unions and point sets may carry
irrational ``Scalar`` coordinates from Q(sqrt2, sqrt3).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import lcm
from typing import Iterable, Sequence

from .hull import HullResult, convex_hull
from .scalar import Scalar, as_fraction

__all__ = [
    "MAX_DIM",
    "VPolytope",
    "Zonotope",
    "BoxUnion",
    "PointSet",
    "canonicalize",
    "direct_product",
    "exact_number",
]

MAX_DIM = 4

Point = tuple


def exact_number(x):
    """Fraction for rational input, ``Scalar`` for irrational input."""
    if isinstance(x, Scalar):
        return x.a if x.is_rational() else x
    return as_fraction(x)


def _check_dim(dim: int):
    if not 1 <= dim <= MAX_DIM:
        raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {dim}")


def integerize(points: Sequence[tuple[Fraction, ...]]) -> tuple[int, list[tuple[int, ...]]]:
    """Common denominator ``L`` and the integer points ``L * p``."""
    den = 1
    for p in points:
        for x in p:
            den = lcm(den, x.denominator)
    if den == 1:
        return 1, [tuple(x.numerator for x in p) for p in points]
    return den, [tuple(x.numerator * (den // x.denominator) for x in p) for p in points]


class VPolytope:
    """Convex hull of finitely many rational points in dimension 1..4."""

    __slots__ = ("dim", "vertices", "canonical", "_int", "_hull", "_volume", "_hash", "_src")

    def __init__(self, vertices: Iterable[Sequence], dim: int | None = None, *,
                 _canonical: bool = False):
        verts = tuple(tuple(as_fraction(x) for x in v) for v in vertices)
        if not verts:
            raise ValueError("VPolytope needs at least one vertex")
        if dim is None:
            dim = len(verts[0])
        _check_dim(dim)
        for v in verts:
            if len(v) != dim:
                raise ValueError(f"vertex {v} does not have dimension {dim}")
        self.dim = dim
        self.vertices = verts
        self.canonical = _canonical
        self._int = None
        self._hull = None
        self._volume = None
        self._hash = None
        # (denominator, integer points, hull) of a superset point list with the same hull
        self._src = None

    @classmethod
    def point(cls, coords: Sequence) -> "VPolytope":
        return cls([coords], _canonical=True)

    @classmethod
    def origin(cls, dim: int) -> "VPolytope":
        return cls([(0,) * dim], dim, _canonical=True)

    @classmethod
    def box(cls, lo: Sequence, hi: Sequence) -> "VPolytope":
        corners = product(*[(a, b) if a != b else (a,) for a, b in zip(lo, hi)])
        return canonicalize(cls(list(corners), len(lo)))

    @classmethod
    def cube(cls, dim: int, lo=0, hi=1) -> "VPolytope":
        return cls.box((lo,) * dim, (hi,) * dim)

    @classmethod
    def simplex(cls, dim: int) -> "VPolytope":
        """conv{0, e_1, ..., e_dim}."""
        pts = [tuple(0 for _ in range(dim))]
        for i in range(dim):
            pts.append(tuple(1 if j == i else 0 for j in range(dim)))
        return canonicalize(cls(pts))

    @classmethod
    def segment(cls, a: Sequence, b: Sequence) -> "VPolytope":
        return canonicalize(cls([a, b]))

    # integer view --------------------------------------------------------
    def integer_points(self) -> tuple[int, list[tuple[int, ...]]]:
        if self._int is None:
            self._int = integerize(self.vertices)
        return self._int

    def hull(self) -> HullResult:
        if self._hull is None:
            self._hull = convex_hull(self.integer_points()[1])
        return self._hull

    @property
    def affine_dim(self) -> int:
        return self.hull().rank

    def is_full_dimensional(self) -> bool:
        return self.hull().rank == self.dim

    def canonicalize(self) -> "VPolytope":
        return canonicalize(self)

    # transforms ----------------------------------------------------------
    def __neg__(self) -> "VPolytope":
        neg = [tuple(-x for x in v) for v in self.vertices]
        if self.canonical:
            return VPolytope(sorted(neg), self.dim, _canonical=True)
        return VPolytope(neg, self.dim)

    def translate(self, shift: Sequence) -> "VPolytope":
        s = [as_fraction(x) for x in shift]
        return VPolytope([tuple(a + b for a, b in zip(v, s)) for v in self.vertices],
                         self.dim, _canonical=self.canonical)

    def scale(self, t) -> "VPolytope":
        t = as_fraction(t)
        if t < 0:
            raise ValueError("negative scaling factor")
        if t == 0:
            return VPolytope.origin(self.dim)
        return VPolytope([tuple(t * x for x in v) for v in self.vertices], self.dim,
                         _canonical=self.canonical).canonicalize()

    def linear_map(self, diag: Sequence) -> "VPolytope":
        d = [as_fraction(x) for x in diag]
        return VPolytope([tuple(a * b for a, b in zip(v, d)) for v in self.vertices],
                         self.dim).canonicalize()

    def __eq__(self, other):
        if not isinstance(other, VPolytope):
            return NotImplemented
        return self.dim == other.dim and canonicalize(self).vertices == canonicalize(other).vertices

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, canonicalize(self).vertices))
        return self._hash

    def __repr__(self):
        vs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"VPolytope[{self.dim}]({vs})"


def canonicalize(P: VPolytope) -> VPolytope:
    """Same body, with only its extreme points in lexicographic order."""
    if P.canonical:
        return P
    hull = P.hull()
    verts = sorted({P.vertices[i] for i in hull.vertices})
    Q = VPolytope(verts, P.dim, _canonical=True)
    return Q


class Zonotope:
    """``center + sum_i [0, g_i]`` with rational center and generators."""

    __slots__ = ("dim", "center", "generators", "_poly")

    def __init__(self, center: Sequence, generators: Iterable[Sequence] = ()):
        self.center = tuple(as_fraction(x) for x in center)
        self.dim = len(self.center)
        _check_dim(self.dim)
        gens = tuple(tuple(as_fraction(x) for x in g) for g in generators)
        for g in gens:
            if len(g) != self.dim:
                raise ValueError("generator dimension mismatch")
        self.generators = gens
        self._poly = None

    def __add__(self, other):
        if isinstance(other, Zonotope):
            if other.dim != self.dim:
                raise ValueError("dimension mismatch")
            return Zonotope(tuple(a + b for a, b in zip(self.center, other.center)),
                            self.generators + other.generators)
        return NotImplemented

    def __neg__(self):
        # -(c + sum [0, g]) = (-c - sum g) + sum [0, g]
        shift = [-c for c in self.center]
        for g in self.generators:
            shift = [s - x for s, x in zip(shift, g)]
        return Zonotope(shift, self.generators)

    def to_vpolytope(self) -> VPolytope:
        if self._poly is None:
            from .convex import minkowski_sum

            P = VPolytope.point(self.center)
            for g in self.generators:
                if any(g):
                    P = minkowski_sum(P, VPolytope([(0,) * self.dim, g], self.dim))
            self._poly = P
        return self._poly

    def __repr__(self):
        return f"Zonotope[{self.dim}](center={self.center}, {len(self.generators)} generators)"


class BoxUnion:
    """Finite union of closed axis-parallel boxes; boxes may be degenerate."""

    __slots__ = ("dim", "boxes")

    def __init__(self, boxes: Iterable[tuple[Sequence, Sequence]], dim: int | None = None):
        bs = []
        for lo, hi in boxes:
            lo = tuple(exact_number(x) for x in lo)
            hi = tuple(exact_number(x) for x in hi)
            if len(lo) != len(hi):
                raise ValueError("box corner dimension mismatch")
            for a, b in zip(lo, hi):
                if b < a:
                    raise ValueError(f"box with lo > hi: {a} > {b}")
            bs.append((lo, hi))
        if dim is None:
            if not bs:
                raise ValueError("empty BoxUnion needs an explicit dimension")
            dim = len(bs[0][0])
        _check_dim(dim)
        for lo, _ in bs:
            if len(lo) != dim:
                raise ValueError("box dimension mismatch")
        self.dim = dim
        self.boxes = tuple(dict.fromkeys(bs))

    @classmethod
    def interval(cls, a, b) -> "BoxUnion":
        return cls([((a,), (b,))])

    @classmethod
    def from_points(cls, points: Iterable[Sequence], dim: int | None = None) -> "BoxUnion":
        pts = [tuple(p) for p in points]
        return cls([(p, p) for p in pts], dim)

    def __neg__(self):
        return BoxUnion([(tuple(-x for x in hi), tuple(-x for x in lo)) for lo, hi in self.boxes],
                        self.dim)

    def __repr__(self):
        return f"BoxUnion[{self.dim}]({len(self.boxes)} boxes)"


class PointSet:
    """Finite set of points with exact equality."""

    __slots__ = ("dim", "points")

    def __init__(self, points: Iterable[Sequence], dim: int | None = None):
        pts = frozenset(tuple(exact_number(x) for x in p) for p in points)
        if dim is None:
            if not pts:
                raise ValueError("empty PointSet needs an explicit dimension")
            dim = len(next(iter(pts)))
        _check_dim(dim)
        for p in pts:
            if len(p) != dim:
                raise ValueError("point dimension mismatch")
        self.dim = dim
        self.points = pts

    def __len__(self):
        return len(self.points)

    def __neg__(self):
        return PointSet([tuple(-x for x in p) for p in self.points], self.dim)

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.dim == other.dim and self.points == other.points

    def __hash__(self):
        return hash((self.dim, self.points))

    def __repr__(self):
        return f"PointSet[{self.dim}]({len(self.points)} points)"


def direct_product(P: VPolytope, Q: VPolytope) -> VPolytope:
    """P x Q in R^(n+m); the vertices are all pairs of vertices."""
    if P.dim + Q.dim > MAX_DIM:
        raise ValueError(f"product dimension {P.dim + Q.dim} exceeds {MAX_DIM}")
    P, Q = canonicalize(P), canonicalize(Q)
    verts = sorted(p + q for p in P.vertices for q in Q.vertices)
    return VPolytope(verts, P.dim + Q.dim, _canonical=True)
