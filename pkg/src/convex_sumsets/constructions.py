"""Extremal examples and lower-bound formulas.

* ``build_ruzsa_counterexample``: compact sets in R with
  |A| |A+B+B| > beta |A+B|^2, built by thickening finite sets from
  Z + Z sqrt2 + Z sqrt3;
* ``build_star_example``: a star-shaped symmetric body in R^3 whose ratio
  |A| |A+A+A| / |A+A|^2 grows linearly in the arm length;
* ``eval_lower_bound`` / ``max_lower_bound``: the projection-type constants
  C(i,k) C(j,k) / C(n,k);
* ``interval_case_check``: the three-body inequality when A and B are
  intervals and C is any finite union of intervals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .balls import sqrt_lower
from .bodies import BoxUnion, PointSet
from .inequalities import InequalityReport, _report
from .regions import boxunion_sum, boxunion_volume, discrete_sumset
from .scalar import Scalar

__all__ = [
    "RuzsaCounterexample",
    "LowerBoundFormula",
    "choose_ruzsa_parameters",
    "build_ruzsa_counterexample",
    "StarExample",
    "build_star_example",
    "eval_lower_bound",
    "max_lower_bound",
    "lower_bound_table",
    "check_lower_bound_growth",
    "interval_case_check",
]


def _iroot(x: int, n: int) -> int:
    """floor(x^(1/n)) for integers x >= 0."""
    if x < 0:
        raise ValueError("negative radicand")
    if x < 2 or n == 1:
        return x
    r = 1 << -(-x.bit_length() // n)
    while True:
        s = ((n - 1) * r + x // r ** (n - 1)) // n
        if s >= r:
            break
        r = s
    while r ** n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


# ---------------------------------------------------------------------------
# sets in Z + Z sqrt2 + Z sqrt3, stored as lattice boxes of coefficient vectors

def _lattice_sum(U: list, V: list) -> list:
    return boxunion_sum(BoxUnion(U, 3), BoxUnion(V, 3)).boxes


def _lattice_count(boxes) -> int:
    # integer points of a union of lattice boxes = volume of the unit-cell cover
    cells = BoxUnion([(lo, tuple(h + 1 for h in hi)) for lo, hi in boxes], 3)
    return int(boxunion_volume(cells))


def _lattice_points(boxes) -> PointSet:
    pts = set()
    for lo, hi in boxes:
        for x in range(int(lo[0]), int(hi[0]) + 1):
            for y in range(int(lo[1]), int(hi[1]) + 1):
                for z in range(int(lo[2]), int(hi[2]) + 1):
                    pts.add((Scalar(x, y, z),))
    return PointSet(pts, 1)


def _ruzsa_boxes(m: int, l: int):
    a = [((0, 0, 0), (m - 1, m - 1, 0)), ((0, 0, 1), (0, 0, m))]
    b = [((0, 0, 0), (l, 0, 0)), ((0, 1, 0), (0, l, 0))]
    return a, b


def _lattice_gap(xmax: int, ymax: int, zmax: int) -> Scalar:
    """min |x + y sqrt2 + z sqrt3| over nonzero integer vectors with |x|<=xmax etc.

    A float scan over (y, z) finds the candidates; the minimizers are then
    re-evaluated exactly.
    """
    y = np.arange(-ymax, ymax + 1, dtype=np.float64)[:, None]
    z = np.arange(0, zmax + 1, dtype=np.float64)[None, :]
    v = y * np.sqrt(2.0) + z * np.sqrt(3.0)
    x = np.clip(np.rint(-v), -xmax, xmax)
    val = np.abs(x + v)
    val[ymax, 0] = np.inf  # y = z = 0 is handled below
    best = float(val.min())
    iy, iz = np.nonzero(val <= 2 * best + 1e-9)
    exact = [abs(Scalar(int(x[i, j]), i - ymax, j)) for i, j in zip(iy.tolist(), iz.tolist())]
    exact.append(Scalar(1))
    return min(exact)


def choose_ruzsa_parameters(beta, limit: int = 500) -> tuple[int, int]:
    """(m, l) with m + 1 > 16 beta' and (m+1) l^2 >= beta' (m + 4l + 1)^2, beta' = 4 beta / 3.

    Among the admissible pairs with m, l <= limit, the one with the fewest
    points in A' + B' + B' (about m l^2) is returned; ties go to smaller m.
    """
    bp = Fraction(4, 3) * Fraction(beta)
    p, q = bp.numerator, bp.denominator
    best = None
    for m in range(1, limit + 1):
        if q * (m + 1) <= 16 * p:
            continue
        for l in range(1, limit + 1):
            if q * (m + 1) * l * l >= p * (m + 4 * l + 1) ** 2:
                key = (m * l * l, m)
                if best is None or key < best[0]:
                    best = (key, (m, l))
                break
    if best is None:
        raise ValueError(f"no admissible (m, l) <= {limit} for beta = {beta}")
    return best[1]


@dataclass(frozen=True)
class RuzsaCounterexample:
    """Finite sets A', B' and their thickenings A = A' + [-eps, eps], B = B' + [-eps, eps]."""

    m: int
    l: int
    beta: Fraction
    eps: Fraction
    gap: Scalar
    card_a: int
    card_b: int
    card_ab: int
    card_bb: int
    card_abb: int

    @property
    def volume_a(self) -> Fraction:
        return 2 * self.eps * self.card_a

    @property
    def volume_ab(self) -> Fraction:
        return 4 * self.eps * self.card_ab

    @property
    def volume_abb(self) -> Fraction:
        return 6 * self.eps * self.card_abb

    def a_points(self) -> PointSet:
        return _lattice_points(_ruzsa_boxes(self.m, self.l)[0])

    def b_points(self) -> PointSet:
        return _lattice_points(_ruzsa_boxes(self.m, self.l)[1])

    def thickened(self) -> tuple[BoxUnion, BoxUnion]:
        """A and B as one-dimensional box unions; sizes grow like m^2, keep m small."""
        e = self.eps
        A = BoxUnion([((p[0] - e,), (p[0] + e,)) for p in self.a_points().points], 1)
        B = BoxUnion([((p[0] - e,), (p[0] + e,)) for p in self.b_points().points], 1)
        return A, B

    def to_json(self) -> dict:
        from .serialize import encode_number

        return {"m": self.m, "l": self.l, "beta": encode_number(self.beta),
                "eps": encode_number(self.eps), "gap": encode_number(self.gap),
                "card_a": self.card_a, "card_b": self.card_b, "card_ab": self.card_ab,
                "card_bb": self.card_bb, "card_abb": self.card_abb}


def build_ruzsa_counterexample(beta, m: int | None = None, l: int | None = None,
                               eps=None) -> tuple[RuzsaCounterexample, InequalityReport]:
    """Counterexample to |A||A+B+B| <= beta |A+B|^2 among compact subsets of R.

    The report's inequality is exactly that bound, so a successful
    construction is a report that does not pass.
    """
    beta = Fraction(beta)
    if beta <= 0:
        raise ValueError("beta must be positive")
    if m is None or l is None:
        m, l = choose_ruzsa_parameters(beta)
    bp = Fraction(4, 3) * beta
    if m < 1 or l < 1:
        raise ValueError("m and l must be positive")
    if m + 1 <= 16 * bp:
        raise ValueError(f"m + 1 = {m + 1} must exceed 16 beta' = {16 * bp}")
    if (m + 1) * l * l < bp * (m + 4 * l + 1) ** 2:
        raise ValueError(f"l = {l} is too small for m = {m}")

    a, b = _ruzsa_boxes(m, l)
    ab = _lattice_sum(a, b)
    bb = _lattice_sum(b, b)
    abb = _lattice_sum(ab, b)
    span = m - 1 + 2 * l
    gap = _lattice_gap(span, span, m)
    if eps is None:
        # the largest power of two below gap / 6
        eps = Fraction(1)
        while 6 * eps >= gap:
            eps /= 2
    eps = Fraction(eps)
    if eps <= 0 or not 6 * eps < gap:
        raise ValueError(f"eps = {eps} is not below a sixth of the minimum gap")
    ex = RuzsaCounterexample(
        m=m, l=l, beta=beta, eps=eps, gap=gap,
        card_a=_lattice_count(a), card_b=_lattice_count(b), card_ab=_lattice_count(ab),
        card_bb=_lattice_count(bb), card_abb=_lattice_count(abb))
    lhs = ex.volume_a * ex.volume_abb
    rhs = beta * ex.volume_ab ** 2
    rep = _report("ruzsa-counterexample", 1, [], lhs, rhs, constant=beta,
                  ratio=lhs / ex.volume_ab ** 2, encode=False, params=ex.to_json())
    return ex, rep


# ---------------------------------------------------------------------------
# star-shaped body

@dataclass(frozen=True)
class StarExample:
    m: int
    width: Fraction
    body: BoxUnion
    volume: Fraction
    volume2: Fraction
    volume3: Fraction

    @property
    def ratio(self) -> Fraction:
        return self.volume * self.volume3 / self.volume2 ** 2


def build_star_example(m: int, width=0) -> tuple[StarExample, InequalityReport]:
    """[-1,1]^3 united with the arms m[-e_i, e_i] of half-width ``width``.

    With ``width = 0`` the arms are genuine segments: null sets whose sums
    still carry volume.  The report compares |A||A+A+A| with |A+A|^2, the
    three-body inequality with B = C = A and constant 1.
    """
    if int(m) != m or m < 1:
        raise ValueError("m must be a positive integer")
    w = Fraction(width)
    if w < 0 or w > 1:
        raise ValueError("width must lie in [0, 1]")
    boxes = [((-1, -1, -1), (1, 1, 1))]
    for axis in range(3):
        lo = tuple(-m if k == axis else -w for k in range(3))
        hi = tuple(m if k == axis else w for k in range(3))
        boxes.append((lo, hi))
    A = BoxUnion(boxes, 3)
    AA = boxunion_sum(A, A)
    AAA = boxunion_sum(AA, A)
    ex = StarExample(m, w, A, boxunion_volume(A), boxunion_volume(AA), boxunion_volume(AAA))
    rep = _report("star", 3, [A], ex.volume * ex.volume3, ex.volume2 ** 2,
                  constant=Fraction(1), ratio=ex.ratio, params={"m": m, "width": str(w)})
    return ex, rep


# ---------------------------------------------------------------------------
# lower-bound formulas

@dataclass(frozen=True)
class LowerBoundFormula:
    n: int
    i: int
    j: int
    k: int

    def __post_init__(self):
        n, i, j, k = self.n, self.i, self.j, self.k
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError("need 1 <= i, j <= n")
        if i + j < n + 1:
            raise ValueError("need i + j >= n + 1")
        if k != i + j - n:
            raise ValueError("need k = i + j - n")

    @property
    def value(self) -> Fraction:
        return Fraction(comb(self.i, self.k) * comb(self.j, self.k), comb(self.n, self.k))


def eval_lower_bound(n: int, i: int, j: int, k: int | None = None) -> Fraction:
    """C(i,k) C(j,k) / C(n,k) with k = i + j - n."""
    if k is None:
        k = i + j - n
    return LowerBoundFormula(n, i, j, k).value


def lower_bound_table(n: int) -> list[tuple[int, int, int, Fraction]]:
    return [(i, j, i + j - n, eval_lower_bound(n, i, j))
            for i in range(1, n + 1) for j in range(1, n + 1) if i + j >= n + 1]


def max_lower_bound(n: int) -> tuple[int, int, int, Fraction]:
    """Maximizer of the formula over the feasible grid; ties go to the smallest (i, j)."""
    if n < 1:
        raise ValueError("n must be positive")
    best = None
    for row in lower_bound_table(n):
        if best is None or row[3] > best[3]:
            best = row
    return best


# rational lower bound for pi (a continued-fraction convergent)
_PI_LOWER = Fraction(333, 106)


def check_lower_bound_growth(n: int) -> InequalityReport:
    """(2 / sqrt(pi n)) (4/3)^n <= C(2n/3, n/3)^2 / C(n, n/3), for n divisible by 3.

    The left side is replaced by a rational upper bound (pi from below,
    square root from below), so a pass is a proof at this n.
    """
    if n < 3 or n % 3:
        raise ValueError("n must be a positive multiple of 3")
    s = sqrt_lower(_PI_LOWER * n)
    bound = 2 / s * Fraction(4, 3) ** n
    value = eval_lower_bound(n, 2 * n // 3, 2 * n // 3)
    return _report("lower-bound-growth", n, [], bound, value, encode=False,
                   ratio=value / bound, params={"n": n, "i": 2 * n // 3, "k": n // 3})


# ---------------------------------------------------------------------------
# intervals

def interval_case_check(a, b, C: BoxUnion) -> InequalityReport:
    """|A||A+B+C| <= |A+B||A+C| for A = [0,a], B = [0,b] and C a union of intervals."""
    a, b = Fraction(a), Fraction(b)
    if a < 0 or b < 0:
        raise ValueError("a and b must be non-negative")
    if C.dim != 1:
        raise ValueError("C must be one-dimensional")
    A = BoxUnion.interval(0, a)
    B = BoxUnion.interval(0, b)
    lhs = a * boxunion_volume(boxunion_sum(boxunion_sum(A, B), C))
    rhs = (a + b) * boxunion_volume(boxunion_sum(A, C))
    return _report("interval-case", 1, [A, B, C], lhs, rhs)


def _check_against_points(ex: RuzsaCounterexample) -> dict:
    """Recount the sumsets from explicit points; for small parameters only."""
    A, B = ex.a_points(), ex.b_points()
    AB = discrete_sumset(A, B)
    return {"card_a": len(A), "card_b": len(B), "card_ab": len(AB),
            "card_bb": len(discrete_sumset(B, B)), "card_abb": len(discrete_sumset(AB, B))}
