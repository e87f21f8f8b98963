from fractions import Fraction
from itertools import combinations
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from convex_sumsets import (VPolytope, Zonotope, direct_product, minkowski_sum, project, support,
                            triangulate, volume)
from convex_sumsets.convex import scale_sum
from convex_sumsets.hull import det
from convex_sumsets.inequalities import brunn_minkowski_sign

from strategies import coord, polytopes, zonotopes


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_standard_bodies(n):
    assert volume(VPolytope.simplex(n)) == Fraction(1, factorial(n))
    assert volume(VPolytope.cube(n, -1, 1)) == 2 ** n
    assert volume(VPolytope.origin(n)) == 0


def test_hexagon_from_triangle_difference():
    T = VPolytope([(0, 0), (1, 0), (0, 1)])
    assert volume(minkowski_sum(T, -T)) == 3
    assert len(minkowski_sum(T, -T).vertices) == 6


def zonotope_volume(Z: Zonotope) -> Fraction:
    # sum over n-subsets of generators of |det|
    n = Z.dim
    total = Fraction(0)
    for gs in combinations(Z.generators, n):
        den = 1
        for g in gs:
            for x in g:
                den = den * x.denominator
        total += Fraction(abs(det([[int(x * den) for x in g] for g in gs])), den ** n)
    return total


@given(st.integers(2, 3).flatmap(lambda n: zonotopes(n, 4)))
def test_zonotope_volume_formula(Z):
    assert volume(Z) == zonotope_volume(Z)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(polytopes(n), polytopes(n))))
def test_minkowski_sum_vertices(pair):
    P, Q = pair
    S = minkowski_sum(P, Q)
    brute = VPolytope([tuple(a + b for a, b in zip(p, q)) for p in P.vertices for q in Q.vertices],
                      P.dim).canonicalize()
    assert S == brute
    assert S.vertices == brute.vertices


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(polytopes(n), polytopes(n), st.tuples(*[coord] * n))))
def test_support_is_additive(args):
    P, Q, u = args
    if not any(u):
        return
    assert support(minkowski_sum(P, Q), u) == support(P, u) + support(Q, u)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(polytopes(n), st.tuples(*[coord] * n),
                                                     st.fractions(0, 3, max_denominator=5))))
def test_translation_and_homogeneity(args):
    P, shift, t = args
    n = P.dim
    assert volume(P.translate(shift)) == volume(P)
    assert volume(P.scale(t)) == t ** n * volume(P)


@given(st.integers(2, 3).flatmap(lambda n: st.tuples(polytopes(n), polytopes(n))))
def test_brunn_minkowski(pair):
    P, Q = pair
    n = P.dim
    assert brunn_minkowski_sign(volume(P), volume(Q), volume(minkowski_sum(P, Q)), n) >= 0


def test_brunn_minkowski_equality_for_homothets():
    P = VPolytope([(0, 0), (3, 0), (1, 2)])
    Q = P.scale(Fraction(5, 3)).translate((7, -1))
    assert brunn_minkowski_sign(volume(P), volume(Q), volume(minkowski_sum(P, Q)), 2) == 0
    # a strict case with irrational roots: areas 1 and 2 of non-homothetic squares/rectangles
    R = VPolytope.box((0, 0), (1, 2))
    S = VPolytope.cube(2)
    assert brunn_minkowski_sign(volume(R), volume(S), volume(minkowski_sum(R, S)), 2) == 1


@given(st.integers(2, 4).flatmap(lambda n: polytopes(n)))
def test_triangulation_sums_to_volume(P):
    T = triangulate(P)
    assert sum(T.simplex_volumes(), Fraction(0)) == volume(P)


def test_projection():
    C = VPolytope.cube(3)
    assert volume(project(C, [(1, 0, 0), (0, 1, 0)])) == 1
    # the diagonal direction (3,4,0)/5 and e_3 span a plane with rational metric
    shadow = project(C, [(3, 4, 0), (0, 0, 1)])
    assert volume(shadow) == Fraction(7, 5)
    with pytest.raises(ValueError):
        project(C, [(1, 1, 0)])
    with pytest.raises(ValueError):
        project(C, [(1, 0, 0), (1, 1, 0)])


def test_scale_sum_and_direct_product():
    A, B = VPolytope.cube(2), VPolytope.segment((0, 0), (1, 1))
    # |A + tB| = 1 + 2t, so |2A + 3B| = 4 |A + (3/2)B| = 16
    assert volume(scale_sum([2, 3], [A, B])) == 16
    P = direct_product(VPolytope.simplex(2), VPolytope.cube(2, 0, 2))
    assert P.dim == 4 and volume(P) == Fraction(1, 2) * 4
    with pytest.raises(ValueError):
        direct_product(VPolytope.cube(3), VPolytope.cube(2))


def test_zonotope_negation_is_reflection():
    Z = Zonotope((1, 2), [(1, 0), (1, 1)])
    assert (-Z).to_vpolytope() == -(Z.to_vpolytope())
