"""Mixed volumes, volume polynomials and alternating sums of volumes.

Two independent routes to a mixed volume:

* ``mixed_volume`` uses the inclusion-exclusion identity
  ``n! V(B_1, ..., B_n) = sum_{s subset [n]} (-1)^(n-|s|) |sum_{i in s} B_i|``;
* ``volume_polynomial`` interpolates ``t -> |t_1 K_1 + ... + t_k K_k|`` on an
  integer lattice simplex and reads mixed volumes off the coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Callable, Iterable, Sequence

from .convex import as_polytope, scale_sum, volume

__all__ = [
    "MixedVolumeQuery",
    "VolumePolynomial",
    "mixed_volume",
    "mixed_volume_interpolated",
    "volume_polynomial",
    "steiner_coefficients",
    "alternating_sum",
    "compositions",
    "multinomial",
    "sum_volume",
]


@lru_cache(maxsize=8192)
def _sum_volume(coeffs: tuple, bodies: tuple) -> Fraction:
    # memoized |sum t_i K_i|; subset sums recur across queries on one family
    return volume(scale_sum(coeffs, bodies))


def sum_volume(coeffs: Sequence, bodies: Sequence) -> Fraction:
    """``|t_1 K_1 + ... + t_k K_k|`` with zero coefficients dropped."""
    pairs = [(Fraction(t), as_polytope(K)) for t, K in zip(coeffs, bodies) if t]
    if not pairs:
        return Fraction(0)
    return _sum_volume(tuple(t for t, _ in pairs), tuple(K for _, K in pairs))


def compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    """All non-negative integer vectors of length ``parts`` summing to ``total``."""
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def multinomial(alpha: Sequence[int]) -> int:
    return factorial(sum(alpha)) // prod(factorial(a) for a in alpha)


@dataclass(frozen=True)
class MixedVolumeQuery:
    """Bodies with multiplicities; ``V(K_1[m_1], ..., K_k[m_k])``."""

    bodies: tuple
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if len(self.bodies) != len(self.multiplicities):
            raise ValueError("one multiplicity per body required")
        if not self.bodies:
            raise ValueError("empty query")
        if any(m < 0 for m in self.multiplicities):
            raise ValueError("negative multiplicity")
        dim = self.bodies[0].dim
        if any(K.dim != dim for K in self.bodies):
            raise ValueError("dimension mismatch in query")
        if sum(self.multiplicities) != dim:
            raise ValueError(
                f"multiplicities sum to {sum(self.multiplicities)}, expected dimension {dim}")

    @property
    def dim(self) -> int:
        return self.bodies[0].dim


def _as_query(q, multiplicities=None) -> MixedVolumeQuery:
    if isinstance(q, MixedVolumeQuery):
        return q
    bodies = tuple(q)
    if multiplicities is None:
        multiplicities = (1,) * len(bodies)
    return MixedVolumeQuery(bodies, tuple(multiplicities))


def mixed_volume(q, multiplicities=None) -> Fraction:
    """Exact mixed volume by the alternating-sum identity.

    ``q`` is a ``MixedVolumeQuery`` or a list of bodies (multiplicities
    default to one each).  Repeated bodies are summed with integer weights,
    grouping identical subsets of the expanded list.
    """
    q = _as_query(q, multiplicities)
    n = q.dim
    live = [(as_polytope(K), m) for K, m in zip(q.bodies, q.multiplicities) if m]
    bodies = [K for K, _ in live]
    mults = [m for _, m in live]
    total = Fraction(0)
    for c in product(*[range(m + 1) for m in mults]):
        size = sum(c)
        if size == 0:
            continue
        weight = prod(comb(m, ci) for m, ci in zip(mults, c))
        v = sum_volume(c, bodies)
        total += weight * v if (n - size) % 2 == 0 else -weight * v
    return total / factorial(n)


@dataclass
class VolumePolynomial:
    """Homogeneous polynomial ``v(t) = |t_1 K_1 + ... + t_k K_k|`` of degree n."""

    variables: int
    degree: int
    coefficients: dict[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __call__(self, t: Sequence) -> Fraction:
        t = [Fraction(x) for x in t]
        if len(t) != self.variables:
            raise ValueError("wrong number of variables")
        return sum((c * prod(x ** a for x, a in zip(t, alpha))
                    for alpha, c in self.coefficients.items()), Fraction(0))

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        return self.coefficients.get(tuple(alpha), Fraction(0))

    def mixed_volume(self, alpha: Sequence[int]) -> Fraction:
        """V(K_1[a_1], ..., K_k[a_k]) read off the coefficient of t^alpha."""
        alpha = tuple(alpha)
        if sum(alpha) != self.degree or len(alpha) != self.variables:
            raise ValueError("exponent vector does not match the polynomial")
        return self.coefficient(alpha) / multinomial(alpha)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients.values())

    def partial(self, index: int) -> "VolumePolynomial":
        out: dict[tuple[int, ...], Fraction] = {}
        for alpha, c in self.coefficients.items():
            if alpha[index]:
                beta = alpha[:index] + (alpha[index] - 1,) + alpha[index + 1:]
                out[beta] = out.get(beta, Fraction(0)) + c * alpha[index]
        return VolumePolynomial(self.variables, max(self.degree - 1, 0), out)

    def mixed_partials_nonnegative(self, points: Iterable[Sequence]) -> bool:
        """Every mixed partial over distinct variables is >= 0 at the points.

        With non-negative coefficients this holds symbolically; evaluating
        at explicit non-negative points is a direct confirmation.
        """
        pts = [list(p) for p in points]
        for mask in range(1, 1 << self.variables):
            d = self
            for i in range(self.variables):
                if mask >> i & 1:
                    d = d.partial(i)
            if not d.is_nonnegative():
                return False
            if any(d(p) < 0 for p in pts):
                return False
        return True


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan elimination over the rationals."""
    n = len(matrix)
    a = [row[:] + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular interpolation system")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def volume_polynomial(bodies: Sequence, evaluate: Callable | None = None) -> VolumePolynomial:
    """Interpolate the volume polynomial of ``bodies``.

    Evaluation nodes are ``t = alpha + (1, ..., 1)`` for every exponent vector
    ``alpha`` of total degree n; these form a lattice simplex, on which
    homogeneous polynomials of degree n are uniquely determined.
    """
    polys = [as_polytope(K) for K in bodies]
    if not polys:
        raise ValueError("no bodies given")
    n = polys[0].dim
    if any(K.dim != n for K in polys):
        raise ValueError("dimension mismatch")
    k = len(polys)
    if evaluate is None:
        def evaluate(t):
            return sum_volume(t, polys)
    monos = compositions(n, k)
    nodes = [tuple(a + 1 for a in alpha) for alpha in monos]
    values = [Fraction(evaluate(t)) for t in nodes]
    matrix = [[Fraction(prod(x ** a for x, a in zip(t, alpha))) for alpha in monos]
              for t in nodes]
    coeffs = _solve(matrix, values)
    return VolumePolynomial(k, n, {alpha: c for alpha, c in zip(monos, coeffs) if c != 0})


def mixed_volume_interpolated(q, multiplicities=None) -> Fraction:
    """Mixed volume via the interpolated volume polynomial of the distinct bodies."""
    q = _as_query(q, multiplicities)
    return volume_polynomial(q.bodies).mixed_volume(q.multiplicities)


def steiner_coefficients(A, B) -> list[Fraction]:
    """``[V(A[n-k], B[k]) for k = 0..n]``; ``|A + tB| = sum C(n,k) t^k coeff[k]``."""
    A, B = as_polytope(A), as_polytope(B)
    if A.dim != B.dim:
        raise ValueError("dimension mismatch")
    n = A.dim
    return [mixed_volume([A, B], (n - k, k)) if 0 < k < n
            else volume(A if k == 0 else B) for k in range(n + 1)]


def alternating_sum(B0, others: Sequence) -> Fraction:
    """``sum_{s subset [m]} (-1)^(m-|s|) |B_0 + sum_{i in s} B_i|``."""
    B0 = as_polytope(B0)
    bodies = [as_polytope(K) for K in others]
    if not bodies:
        raise ValueError("need at least one increment body")
    if any(K.dim != B0.dim for K in bodies):
        raise ValueError("dimension mismatch")
    m = len(bodies)
    total = Fraction(0)
    for mask in range(1 << m):
        picked = [bodies[i] for i in range(m) if mask >> i & 1]
        v = sum_volume([1] * (len(picked) + 1), [B0] + picked)
        total += v if (m - len(picked)) % 2 == 0 else -v
    return total
