"""Checkers for sumset and mixed-volume inequalities.

Every checker evaluates both sides exactly and returns an
``InequalityReport`` with ``slack = rhs - lhs``.  A report passes when
``slack >= -tolerance``; the tolerance is zero everywhere except in the two
checks that replace the Euclidean ball by an inscribed polytope.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, prod
from typing import Callable, Iterable, Sequence

from .balls import ball_polytope, inradius_squared, sqrt_lower
from .bodies import BoxUnion, PointSet, VPolytope, Zonotope, canonicalize
from .convex import as_polytope, minkowski_sum, project, volume
from .mixed import alternating_sum, mixed_volume, sum_volume
from .regions import (boxunion_difference, boxunion_sum, boxunion_volume,
                      contains_origin, is_convex_body, measure, msum)
from .scalar import Scalar

__all__ = [
    "InequalityReport",
    "FractionalPartition",
    "Multiset",
    "PLUNNECKE_CONSTANTS",
    "plunnecke_constant",
    "binomial_constant_bound",
    "elementary_compression",
    "compression_chain",
    "minimal_multiset",
    "is_compression",
    "check_supermodular3",
    "check_m_supermodular",
    "check_compression",
    "check_fractional_superadditivity",
    "check_alternating_sum",
    "plunnecke_ratio3",
    "plunnecke_ratio_m",
    "check_fractional_plunnecke",
    "check_xiao",
    "check_fenchel_local",
    "check_ruzsa_triangle",
    "check_litvak",
    "check_triangle_variant",
    "check_planar_difference",
    "asymmetry",
    "check_asymmetry",
    "check_delta_increment",
    "check_projection_ball",
    "check_zonoid_ellipsoid",
    "brunn_minkowski_sign",
]

# sharp or best known three-body constants |A||A+B+C| <= c_n |A+B||A+C|
PLUNNECKE_CONSTANTS = {1: Fraction(1), 2: Fraction(1), 3: Fraction(4, 3), 4: Fraction(2)}


def binomial_constant_bound(n: int) -> Fraction:
    """max over j, m >= 1 with j + m <= n of min(C(n-j, m), C(n-m, j)).

    A rational constant obtained by comparing the two mixed-volume expansions
    term by term; it stays below the golden-ratio power phi^n.
    """
    if n < 2:
        return Fraction(1)
    best = 1
    for j in range(1, n):
        for m in range(1, n - j + 1):
            best = max(best, min(comb(n - j, m), comb(n - m, j)))
    return Fraction(best)


def plunnecke_constant(n: int) -> Fraction:
    if n in PLUNNECKE_CONSTANTS:
        return PLUNNECKE_CONSTANTS[n]
    return binomial_constant_bound(n)


# ---------------------------------------------------------------------------
# reports

def _encode(bodies):
    from .serialize import encode_body

    return tuple(encode_body(b) for b in bodies)


@dataclass(frozen=True)
class InequalityReport:
    """One evaluated inequality instance ``lhs <= rhs``."""

    inequality_id: str
    dimension: int
    bodies: tuple
    lhs: Fraction | Scalar
    rhs: Fraction | Scalar
    slack: Fraction | Scalar
    passed: bool
    constant: Fraction | None = None
    ratio: Fraction | None = None
    degenerate: bool = False
    tolerance: Fraction = Fraction(0)
    params: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.degenerate:
            return "degenerate"
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        from .serialize import encode_number

        return {
            "id": self.inequality_id,
            "dim": self.dimension,
            "bodies": list(self.bodies),
            "lhs": encode_number(self.lhs),
            "rhs": encode_number(self.rhs),
            "slack": encode_number(self.slack),
            "pass": self.passed,
            "constant": encode_number(self.constant),
            "ratio": encode_number(self.ratio),
            "status": self.status,
            "tolerance": encode_number(self.tolerance),
            "params": self.params,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "InequalityReport":
        from .serialize import decode_number

        def num(key):
            v = obj.get(key)
            return None if v is None else decode_number(v)

        return cls(
            inequality_id=obj["id"],
            dimension=obj["dim"],
            bodies=tuple(obj.get("bodies", ())),
            lhs=num("lhs"),
            rhs=num("rhs"),
            slack=num("slack"),
            passed=bool(obj["pass"]),
            constant=num("constant"),
            ratio=num("ratio"),
            degenerate=obj.get("status") == "degenerate",
            tolerance=num("tolerance") or Fraction(0),
            params=dict(obj.get("params", {})),
        )


def _report(ident, dim, bodies, lhs, rhs, *, constant=None, ratio=None, degenerate=False,
            tolerance=Fraction(0), params=None, encode=True) -> InequalityReport:
    slack = rhs - lhs
    return InequalityReport(
        inequality_id=ident,
        dimension=dim,
        bodies=_encode(bodies) if encode else tuple(bodies),
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        passed=slack >= -tolerance,
        constant=constant,
        ratio=ratio,
        degenerate=degenerate,
        tolerance=tolerance,
        params=params or {},
    )


def _dims(*bodies) -> int:
    dims = {b.dim for b in bodies}
    if len(dims) != 1:
        raise ValueError(f"dimension mismatch: {sorted(dims)}")
    return dims.pop()


def _convex(*bodies):
    for b in bodies:
        if not is_convex_body(b):
            raise ValueError(f"convex body required, got {type(b).__name__}")
    return [as_polytope(b) for b in bodies]


def _sum_all(bodies):
    out = bodies[0]
    for b in bodies[1:]:
        out = msum(out, b)
    return out


def _vol_sum(bodies) -> Fraction:
    """|B_1 + ... + B_k| for any supported body types; zero for no bodies."""
    if not bodies:
        return Fraction(0)
    if all(is_convex_body(b) for b in bodies):
        return sum_volume([1] * len(bodies), bodies)
    return measure(_sum_all(list(bodies)))


# ---------------------------------------------------------------------------
# supermodularity

def check_supermodular3(A, B, C) -> InequalityReport:
    """|A+B| + |A+C| <= |A+B+C| + |A|.

    Convex triples always pass; with non-convex inputs the sums are formed
    in the box-union algebra (any dimension) or as planar polygon unions.
    """
    n = _dims(A, B, C)
    try:
        lhs = _vol_sum([A, B]) + _vol_sum([A, C])
        rhs = _vol_sum([A, B, C]) + measure(A)
    except ValueError as exc:
        raise ValueError(f"unsupported non-convex combination: {exc}") from None
    return _report("supermodular3", n, [A, B, C], lhs, rhs)


def _set_function(bodies: Sequence, mixed_with: Sequence = ()) -> Callable[[frozenset], Fraction]:
    """F(s) = |sum_{i in s} B_i|, or V((sum_{i in s} B_i)[n-l], C_1..C_l).

    Indices in ``s`` are 1-based.
    """
    polys = list(bodies)
    cs = [as_polytope(c) for c in mixed_with]
    cache: dict[frozenset, Fraction] = {}

    def F(s) -> Fraction:
        s = frozenset(s)
        if s not in cache:
            for i in s:
                if not 1 <= i <= len(polys):
                    raise ValueError(f"index {i} outside 1..{len(polys)}")
            picked = [polys[i - 1] for i in sorted(s)]
            if not cs:
                cache[s] = _vol_sum(picked)
            elif not picked:
                cache[s] = Fraction(0)
            else:
                n = polys[0].dim
                S = as_polytope(_sum_all(picked))
                l = len(cs)
                cache[s] = mixed_volume([S] + cs, [n - l] + [1] * l)
        return cache[s]

    return F


def check_m_supermodular(bodies: Sequence, s0: Iterable[int], increments: Sequence[Iterable[int]],
                         mixed_with: Sequence = ()) -> InequalityReport:
    """sum_{I subset [m]} (-1)^(m-|I|) F(s_0 u U_{i in I} s_i) >= 0.

    ``F(s) = |sum_{i in s} B_i|`` (1-based indices); with ``mixed_with``
    bodies C_1..C_l the function is the mixed volume
    ``V((sum_{i in s} B_i)[n-l], C_1, ..., C_l)``.  The report puts the
    negative terms on the left and the positive ones on the right.
    """
    s0 = frozenset(s0)
    incs = [frozenset(s) for s in increments]
    if not incs:
        raise ValueError("need at least one increment set")
    for a, b in combinations(incs, 2):
        if a & b:
            raise ValueError("increment sets must be pairwise disjoint")
    n = _dims(*bodies, *mixed_with)
    if len(mixed_with) > n:
        raise ValueError("too many mixed-with bodies")
    F = _set_function(bodies, mixed_with)
    m = len(incs)
    pos = Fraction(0)
    neg = Fraction(0)
    for mask in range(1 << m):
        s = set(s0)
        size = 0
        for i in range(m):
            if mask >> i & 1:
                s |= incs[i]
                size += 1
        v = F(s)
        if (m - size) % 2 == 0:
            pos += v
        else:
            neg += v
    return _report("m-supermodular", n, list(bodies) + list(mixed_with), neg, pos,
                   params={"m": m, "s0": sorted(s0), "increments": [sorted(s) for s in incs],
                           "mixed_with": len(mixed_with)})


# ---------------------------------------------------------------------------
# multisets and compressions

class Multiset:
    """Finite multiset of non-empty subsets of {1, ..., k}, kept in canonical order."""

    __slots__ = ("sets",)

    def __init__(self, sets: Iterable[Iterable[int]]):
        ss = [frozenset(s) for s in sets]
        ss = [s for s in ss if s]
        self.sets = tuple(sorted(ss, key=lambda s: (len(s), sorted(s))))

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)

    def __eq__(self, other):
        return isinstance(other, Multiset) and self.sets == other.sets

    def __hash__(self):
        return hash(self.sets)

    def __repr__(self):
        return "Multiset(" + ", ".join("{" + ",".join(map(str, sorted(s))) + "}"
                                       for s in self.sets) + ")"

    def square_weight(self) -> int:
        """sum |s|^2; strictly increases under elementary compression."""
        return sum(len(s) ** 2 for s in self.sets)

    def non_nested_pairs(self) -> list[tuple[int, int]]:
        out = []
        for i, j in combinations(range(len(self.sets)), 2):
            a, b = self.sets[i], self.sets[j]
            if not (a <= b or b <= a):
                out.append((i, j))
        return out

    def to_json(self) -> list[list[int]]:
        return [sorted(s) for s in self.sets]


def elementary_compression(M: Multiset, i: int, j: int) -> Multiset:
    a, b = M.sets[i], M.sets[j]
    if a <= b or b <= a:
        raise ValueError("elementary compression needs a non-nested pair")
    rest = [s for k, s in enumerate(M.sets) if k not in (i, j)]
    return Multiset(rest + [a & b, a | b])


def compression_chain(M: Multiset) -> list[Multiset]:
    """Compress the lexicographically smallest non-nested pair until none is left."""
    chain = [M]
    while True:
        pairs = chain[-1].non_nested_pairs()
        if not pairs:
            return chain
        i, j = pairs[0]
        chain.append(elementary_compression(chain[-1], i, j))


def minimal_multiset(M: Multiset | Iterable) -> Multiset:
    """A^#: the j-th set holds the elements lying in at least j sets of A."""
    if not isinstance(M, Multiset):
        M = Multiset(M)
    counts: dict[int, int] = {}
    for s in M.sets:
        for x in s:
            counts[x] = counts.get(x, 0) + 1
    top = max(counts.values(), default=0)
    return Multiset([{x for x, c in counts.items() if c >= j} for j in range(1, top + 1)])


def is_compression(A: Multiset, B: Multiset, max_states: int = 100_000) -> bool:
    """Whether B is reachable from A by elementary compressions (breadth-first)."""
    if A == B:
        return True
    target_weight = B.square_weight()
    seen = {A}
    frontier = [A]
    while frontier:
        nxt = []
        for M in frontier:
            for i, j in M.non_nested_pairs():
                N = elementary_compression(M, i, j)
                if N == B:
                    return True
                if N not in seen and N.square_weight() < target_weight:
                    seen.add(N)
                    nxt.append(N)
                    if len(seen) > max_states:
                        raise RuntimeError("compression search exceeded its state budget")
        frontier = nxt
    return False


def check_compression(bodies: Sequence, A, B=None) -> InequalityReport:
    """sum_{s in A} F(s) <= sum_{t in B} F(t) for a compression B of A.

    ``B`` defaults to the minimal multiset A^#.  Reachability is verified
    before evaluation.
    """
    A = A if isinstance(A, Multiset) else Multiset(A)
    B = minimal_multiset(A) if B is None else (B if isinstance(B, Multiset) else Multiset(B))
    if not is_compression(A, B):
        raise ValueError(f"{B!r} is not a compression of {A!r}")
    n = _dims(*bodies)
    F = _set_function(bodies)
    lhs = sum((F(s) for s in A), Fraction(0))
    rhs = sum((F(t) for t in B), Fraction(0))
    return _report("compression", n, bodies, lhs, rhs,
                   params={"A": A.to_json(), "B": B.to_json()})


@dataclass(frozen=True)
class FractionalPartition:
    """Weights beta(s) >= 0 on subsets of {1..k} covering every element exactly once."""

    k: int
    weights: tuple[tuple[frozenset, Fraction], ...]

    def __init__(self, k: int, weights):
        items = weights.items() if isinstance(weights, dict) else weights
        ws = tuple((frozenset(s), Fraction(w)) for s, w in items)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "weights", ws)
        self.validate()

    def validate(self):
        cover = {i: Fraction(0) for i in range(1, self.k + 1)}
        for s, w in self.weights:
            if w < 0:
                raise ValueError("negative fractional-partition weight")
            for i in s:
                if i not in cover:
                    raise ValueError(f"element {i} outside 1..{self.k}")
                cover[i] += w
        bad = [i for i, c in cover.items() if c != 1]
        if bad:
            raise ValueError(f"weights do not sum to 1 at elements {bad}")

    @classmethod
    def all_subsets_of_size(cls, k: int, size: int) -> "FractionalPartition":
        w = Fraction(1, comb(k - 1, size - 1))
        return cls(k, [(frozenset(c), w) for c in combinations(range(1, k + 1), size)])


def check_fractional_superadditivity(bodies: Sequence, partition: FractionalPartition
                                     ) -> InequalityReport:
    """sum_s beta(s) |sum_{j in s} A_j| <= |A_1 + ... + A_k|."""
    if partition.k != len(bodies):
        raise ValueError("partition ground size differs from the number of bodies")
    n = _dims(*bodies)
    F = _set_function(bodies)
    lhs = sum((w * F(s) for s, w in partition.weights), Fraction(0))
    rhs = F(range(1, len(bodies) + 1))
    return _report("fractional-superadditivity", n, bodies, lhs, rhs,
                   params={"partition": [[sorted(s), str(w)] for s, w in partition.weights]})


def check_alternating_sum(B0, others: Sequence) -> InequalityReport:
    """sum_{s subset [m]} (-1)^(m-|s|) |B_0 + sum_{i in s} B_i| against zero.

    Expanding the volume polynomial, only mixed volumes in which every B_i
    occurs survive: the sum is non-negative for m <= n and vanishes for
    m > n.  The report states ``0 <= S`` in the first case and ``|S| <= 0``
    in the second.
    """
    B0, *rest = _convex(B0, *others)
    n = _dims(B0, *rest)
    s = alternating_sum(B0, rest)
    m = len(rest)
    if m <= n:
        return _report("alternating-sum", n, [B0] + rest, Fraction(0), s, params={"m": m})
    return _report("alternating-sum", n, [B0] + rest, abs(s), Fraction(0), params={"m": m})


# ---------------------------------------------------------------------------
# Plunnecke-type inequalities

def plunnecke_ratio3(A, B, C, constant=None) -> InequalityReport:
    """|A||A+B+C| <= c_n |A+B||A+C| with the dimension's constant.

    ``ratio`` is |A||A+B+C| / (|A+B||A+C|); a zero denominator yields a
    degenerate report.
    """
    A, B, C = _convex(A, B, C)
    n = _dims(A, B, C)
    c = plunnecke_constant(n) if constant is None else Fraction(constant)
    a = volume(A)
    ab = sum_volume([1, 1], [A, B])
    ac = sum_volume([1, 1], [A, C])
    abc = sum_volume([1, 1, 1], [A, B, C])
    lhs = a * abc
    den = ab * ac
    ratio = lhs / den if den else None
    return _report("plunnecke3", n, [A, B, C], lhs, c * den, constant=c, ratio=ratio,
                   degenerate=den == 0)


def plunnecke_ratio_m(A, Bs: Sequence) -> tuple[InequalityReport, InequalityReport]:
    """Two m-body inequalities.

    * ``plunnecke-m``: |A|^(m-1) |A + sum B_i| <= (1+m)^n prod |A + B_i|;
    * ``weak-plunnecke-m``: |A|^(m-1) |sum B_i| <= prod |A + B_i|; equality
      forces |A| = 0 (and then holds iff some |A + B_i| vanishes).
    """
    polys = _convex(A, *Bs)
    A, Bs = polys[0], polys[1:]
    if not Bs:
        raise ValueError("need at least one body B_i")
    n = _dims(*polys)
    m = len(Bs)
    a = volume(A)
    prod_pairs = prod((sum_volume([1, 1], [A, B]) for B in Bs), start=Fraction(1))
    full = sum_volume([1] * (m + 1), [A] + list(Bs))
    only_b = sum_volume([1] * m, list(Bs))
    c = Fraction((1 + m) ** n)
    lhs1 = a ** (m - 1) * full
    lhs2 = a ** (m - 1) * only_b
    r1 = _report("plunnecke-m", n, polys, lhs1, c * prod_pairs, constant=c,
                 ratio=lhs1 / prod_pairs if prod_pairs else None,
                 degenerate=prod_pairs == 0, params={"m": m})
    r2 = _report("weak-plunnecke-m", n, polys, lhs2, prod_pairs, constant=Fraction(1),
                 ratio=lhs2 / prod_pairs if prod_pairs else None,
                 degenerate=prod_pairs == 0, params={"m": m})
    return r1, r2


def check_fractional_plunnecke(A, Bs: Sequence, k: int, cs_power: dict | None = None
                               ) -> InequalityReport:
    """Subset-family form of the m-body inequality with given constants c_s.

    The hypothesis is |A + sum_{i in s} B_i| <= c_s^n |A| for every s of size
    k; ``cs_power`` maps s (1-based) to c_s^n and defaults to the tight
    values |A + sum_s B_i| / |A|.  Raised to the power n * C(m-1, k-1) the
    conclusion reads

        |A + sum B_i|^C(m-1,k-1) <= (1+m)^(n C(m-1,k-1)) prod_s c_s^n |A|^C(m-1,k-1).
    """
    polys = _convex(A, *Bs)
    A, Bs = polys[0], polys[1:]
    m = len(Bs)
    if not 1 <= k <= m:
        raise ValueError("k must lie in 1..m")
    n = _dims(*polys)
    a = volume(A)
    if a == 0:
        raise ValueError("the subset-family form needs |A| > 0")
    e = comb(m - 1, k - 1)
    cpow = {}
    for s in combinations(range(1, m + 1), k):
        v = sum_volume([1] * (k + 1), [A] + [Bs[i - 1] for i in s])
        given = None if cs_power is None else cs_power.get(frozenset(s), cs_power.get(s))
        if given is None:
            given = v / a
        given = Fraction(given)
        if v > given * a:
            raise ValueError(f"hypothesis fails for s={s}: |A+B_s| > c_s^n |A|")
        cpow[s] = given
    full = sum_volume([1] * (m + 1), [A] + list(Bs))
    lhs = full ** e
    rhs = Fraction(1 + m) ** (n * e) * prod(cpow.values(), start=Fraction(1)) * a ** e
    return _report("fractional-plunnecke", n, polys, lhs, rhs,
                   constant=Fraction(1 + m) ** (n * e),
                   params={"k": k, "m": m, "cs_power": {",".join(map(str, s)): str(v)
                                                        for s, v in cpow.items()}})


# ---------------------------------------------------------------------------
# mixed-volume inequalities

def check_xiao(A, B, C, j: int, m: int) -> InequalityReport:
    """|A| V(A[n-j-m], B[j], C[m]) <= min(C(n,j), C(n,m)) V(A[n-j], B[j]) V(A[n-m], C[m])."""
    A, B, C = _convex(A, B, C)
    n = _dims(A, B, C)
    if j < 1 or m < 1 or j + m > n:
        raise ValueError(f"need j, m >= 1 and j + m <= n, got j={j}, m={m}, n={n}")
    const = Fraction(min(comb(n, j), comb(n, m)))
    lhs = volume(A) * mixed_volume([A, B, C], [n - j - m, j, m])
    rhs = const * mixed_volume([A, B], [n - j, j]) * mixed_volume([A, C], [n - m, m])
    return _report("xiao", n, [A, B, C], lhs, rhs, constant=const, params={"j": j, "m": m})


def _is_simplex(P: VPolytope) -> bool:
    P = canonicalize(P)
    return P.is_full_dimensional() and len(P.vertices) == P.dim + 1


def check_fenchel_local(A, B, C, constant=None) -> InequalityReport:
    """|A| V(A[n-2], B, C) <= c V(A[n-1], B) V(A[n-1], C).

    ``c`` defaults to 1 when A is a simplex and 2 otherwise.
    """
    A, B, C = _convex(A, B, C)
    n = _dims(A, B, C)
    if n < 2:
        raise ValueError("the local inequality needs dimension >= 2")
    if constant is None:
        constant = Fraction(1) if _is_simplex(A) else Fraction(2)
    c = Fraction(constant)
    lhs = volume(A) * mixed_volume([A, B, C], [n - 2, 1, 1])
    rhs = c * mixed_volume([A, B], [n - 1, 1]) * mixed_volume([A, C], [n - 1, 1])
    return _report("fenchel-local", n, [A, B, C], lhs, rhs, constant=c,
                   params={"simplex": _is_simplex(A)})


# ---------------------------------------------------------------------------
# difference bodies

def check_ruzsa_triangle(A, B, C) -> InequalityReport:
    """|A| |B - C| <= |A - C| |A - B| for compact A, B, C."""
    n = _dims(A, B, C)
    lhs = measure(A) * measure(msum(B, -C))
    rhs = measure(msum(A, -C)) * measure(msum(A, -B))
    return _report("ruzsa-triangle", n, [A, B, C], lhs, rhs)


def _litvak_constant(n: int) -> Fraction:
    return Fraction(comb(2 * n, n), 2 ** n)


def check_litvak(A, B) -> InequalityReport:
    """|A + B| <= 2^-n C(2n, n) |A - B|."""
    A, B = _convex(A, B)
    n = _dims(A, B)
    c = _litvak_constant(n)
    lhs = sum_volume([1, 1], [A, B])
    diff = sum_volume([1, 1], [A, -B])
    return _report("litvak", n, [A, B], lhs, c * diff, constant=c,
                   ratio=lhs / diff if diff else None, degenerate=diff == 0)


def check_triangle_variant(A, B, C) -> InequalityReport:
    """|A||A+B+C| <= 2^-n C(2n,n) c_n min(|A-B||A+C|, |A-B||A-C|)."""
    A, B, C = _convex(A, B, C)
    n = _dims(A, B, C)
    c = _litvak_constant(n) * plunnecke_constant(n)
    lhs = volume(A) * sum_volume([1, 1, 1], [A, B, C])
    amb = sum_volume([1, 1], [A, -B])
    m = min(amb * sum_volume([1, 1], [A, C]), amb * sum_volume([1, 1], [A, -C]))
    return _report("triangle-variant", n, [A, B, C], lhs, c * m, constant=c,
                   ratio=lhs / m if m else None, degenerate=m == 0)


def _planar(A, C):
    A, C = _convex(A, C)
    if _dims(A, C) != 2:
        raise ValueError("planar inequality needs dimension 2")
    a, c = volume(A), volume(C)
    plus = sum_volume([1, 1], [A, C])
    minus = sum_volume([1, 1], [A, -C])
    return A, C, a, c, plus, minus


def check_planar_difference(A, C) -> InequalityReport:
    """|A - C| <= |A + C| + 2 sqrt(|A||C|), decided in squared form.

    With x = |A-C| - |A+C| the report compares sign(x) x^2 against 4|A||C|,
    which is equivalent because the right side is non-negative.
    """
    A, C, a, c, plus, minus = _planar(A, C)
    x = minus - plus
    lhs = x * x if x >= 0 else -x * x
    rhs = 4 * a * c
    return _report("planar-difference", 2, [A, C], lhs, rhs,
                   params={"|A-C|": str(minus), "|A+C|": str(plus)})


def asymmetry(A, C) -> tuple[Fraction, Fraction]:
    """(asym(A,C), (2 e^{-d(A,C)})^2) where asym = | |A+C|/|A-C| - 1 |.

    The bound is returned squared, 4|A||C| / |A-C|^2, so both values are
    rational.
    """
    A, C, a, c, plus, minus = _planar(A, C)
    if minus == 0:
        raise ValueError("|A - C| = 0: asymmetry undefined")
    return abs(plus / minus - 1), 4 * a * c / (minus * minus)


def check_asymmetry(A, C) -> InequalityReport:
    """asym(A,C) |A-C| <= 2 sqrt(|A||C|), compared as squares."""
    A, C, a, c, plus, minus = _planar(A, C)
    lhs = (plus - minus) ** 2
    rhs = 4 * a * c
    return _report("asymmetry", 2, [A, C], lhs, rhs)


# ---------------------------------------------------------------------------
# increments of non-convex sets

def _as_boxunion(X) -> BoxUnion:
    if isinstance(X, BoxUnion):
        return X
    if isinstance(X, PointSet):
        return BoxUnion.from_points(X.points, X.dim)
    from .regions import _to_boxunion

    U = _to_boxunion(X)
    if U is None:
        raise ValueError("the increment check works with box unions only")
    return U


def check_delta_increment(A, B, C) -> InequalityReport:
    """|D_C D_B(A)| >= |A+B+C| - |A+C| - |A+B| + |A| where D_B(X) = (X+B) minus X.

    Requires 0 in B and 0 in C so that every increment is a superset
    difference.
    """
    A, B, C = _as_boxunion(A), _as_boxunion(B), _as_boxunion(C)
    n = _dims(A, B, C)
    if not contains_origin(B) or not contains_origin(C):
        raise ValueError("the increment check needs 0 in B and 0 in C")
    ab = boxunion_sum(A, B)
    ac = boxunion_sum(A, C)
    abc = boxunion_sum(ab, C)
    d1 = boxunion_difference(ab, A)
    if d1.boxes:
        d2 = boxunion_difference(boxunion_sum(d1, C), d1)
        lhs_region = boxunion_volume(d2)
    else:
        lhs_region = Fraction(0)
    alt = (boxunion_volume(abc) - boxunion_volume(ac) - boxunion_volume(ab)
           + boxunion_volume(A))
    return _report("delta-increment", n, [A, B, C], alt, lhs_region)


# ---------------------------------------------------------------------------
# checks involving the Euclidean ball

def _ball_data(n: int, level: int):
    P = ball_polytope(n, level)
    r0 = sqrt_lower(inradius_squared(P))
    return P, r0


def _axis_complement(n: int, axis: int) -> list[tuple[int, ...]]:
    if not 0 <= axis < n:
        raise ValueError(f"axis {axis} outside 0..{n - 1}")
    return [tuple(1 if k == j else 0 for k in range(n)) for j in range(n) if j != axis]


def check_projection_ball(K, axis: int = 0, level: int = 6) -> InequalityReport:
    """|P| |proj(K+P)| <= |K+P| |proj P| for the ball approximation P.

    ``proj`` is the orthogonal projection onto the hyperplane orthogonal to
    the coordinate axis ``axis``.  Since r B <= P <= B with r the inradius
    of P, the ball inequality implies this one up to
    ``delta = (1 - r^(2n-1)) * lhs``, which is the reported tolerance.
    """
    (K,) = _convex(K)
    n = K.dim
    if n not in (2, 3):
        raise ValueError("ball checks support dimensions 2 and 3")
    P, r0 = _ball_data(n, level)
    basis = _axis_complement(n, axis)
    KP = minkowski_sum(K, P)
    lhs = volume(P) * volume(project(KP, basis))
    rhs = volume(KP) * volume(project(P, basis))
    delta = (1 - r0 ** (2 * n - 1)) * lhs
    return _report("projection-ball", n, [K], lhs, rhs, tolerance=delta,
                   params={"axis": axis, "level": level, "inradius_lower": str(r0)})


def check_zonoid_ellipsoid(K, Z, level: int = 6) -> InequalityReport:
    """|P| |P+K+Z| <= |P+K| |P+Z| for the ball approximation P.

    Tolerance ``delta = (1 - r^(2n)) * lhs`` from r B <= P <= B.
    """
    if not isinstance(Z, Zonotope):
        raise ValueError("Z must be a zonotope")
    (K,) = _convex(K)
    n = _dims(K, Z)
    if n not in (2, 3):
        raise ValueError("ball checks support dimensions 2 and 3")
    P, r0 = _ball_data(n, level)
    Zp = Z.to_vpolytope()
    lhs = volume(P) * sum_volume([1, 1, 1], [P, K, Zp])
    rhs = sum_volume([1, 1], [P, K]) * sum_volume([1, 1], [P, Zp])
    delta = (1 - r0 ** (2 * n)) * lhs
    return _report("zonoid-ellipsoid", n, [K, Z], lhs, rhs, tolerance=delta,
                   params={"level": level, "inradius_lower": str(r0)})


# ---------------------------------------------------------------------------
# Brunn-Minkowski in exact form

def _is_nth_power(x: Fraction, n: int):
    from .constructions import _iroot

    p, q = x.numerator, x.denominator
    rp, rq = _iroot(p, n), _iroot(q, n)
    if rp ** n == p and rq ** n == q:
        return Fraction(rp, rq)
    return None


def _root_bounds(x: Fraction, n: int, bits: int) -> tuple[Fraction, Fraction]:
    from .constructions import _iroot

    scale = 1 << bits
    lo = Fraction(_iroot(int(x * scale ** n), n), scale)
    return lo, lo + Fraction(1, scale)


def brunn_minkowski_sign(a: Fraction, b: Fraction, c: Fraction, n: int) -> int:
    """Sign of c^(1/n) - a^(1/n) - b^(1/n) for non-negative rationals.

    Exact: equality is detected algebraically (it needs a/b to be an n-th
    power of a rational), otherwise interval bounds are refined until they
    separate.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if min(a, b, c) < 0:
        raise ValueError("volumes must be non-negative")
    if a == 0 or b == 0:
        d = c - (a + b)
        return (d > 0) - (d < 0)
    q = _is_nth_power(a / b, n)
    if q is not None:
        # a^(1/n) + b^(1/n) = b^(1/n) (1 + q), so compare c with b (1 + q)^n
        d = c - b * (1 + q) ** n
        return (d > 0) - (d < 0)
    bits = 32
    while True:
        clo, chi = _root_bounds(c, n, bits)
        alo, ahi = _root_bounds(a, n, bits)
        blo, bhi = _root_bounds(b, n, bits)
        if clo > ahi + bhi:
            return 1
        if chi < alo + blo:
            return -1
        bits *= 2
