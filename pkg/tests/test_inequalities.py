from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from convex_sumsets import BoxUnion, PointSet, VPolytope, Zonotope
from convex_sumsets import inequalities as ineq
from convex_sumsets.inequalities import InequalityReport, Multiset
from convex_sumsets.random_bodies import random_polytope, random_triangle, sample_rng
from convex_sumsets.serialize import dumps

from strategies import box_unions, polytopes

TRI = VPolytope([(0, 0), (2, 0), (1, 3)])
SQ = VPolytope.cube(2)
ORIGIN2 = VPolytope.origin(2)


def rand3(dim, seed=0):
    rng = sample_rng(seed, dim)
    return [random_polytope(rng, dim)[0] for _ in range(3)]


def triples(n):
    return st.tuples(polytopes(n), polytopes(n), polytopes(n))


# -- supermodularity ---------------------------------------------------------

@given(st.integers(1, 3).flatmap(triples))
def test_supermodular_convex_never_fails(t):
    assert ineq.check_supermodular3(*t).passed


def test_supermodular_random_3d():
    assert ineq.check_supermodular3(*rand3(3)).passed


def test_supermodular_discrete_counterexample():
    A = PointSet([(0,), (1,)])
    I = BoxUnion.interval(0, 1)
    rep = ineq.check_supermodular3(A, I, I)
    assert rep.lhs == 4 and rep.rhs == 3
    assert rep.slack == -1 and not rep.passed


def test_supermodular_zonotope_with_compact_set():
    C = PointSet([(0, 0), (3, 1), (Fraction(1, 2), 2)])
    Z = Zonotope((0, 0), [(1, 0), (Fraction(1, 3), 1)])
    assert ineq.check_supermodular3(TRI, Z, C).passed


def test_supermodular_box_unions_in_3d_and_errors():
    U = BoxUnion([((0, 0, 0), (1, 1, 1)), ((2, 0, 0), (3, 1, 1))])
    assert ineq.check_supermodular3(VPolytope.cube(3), U, VPolytope.cube(3)).dimension == 3
    with pytest.raises(ValueError, match="unsupported non-convex"):
        ineq.check_supermodular3(VPolytope.simplex(3), PointSet([(0, 0, 0), (1, 2, 3)]),
                                 VPolytope.simplex(3))


def test_m_supermodular_small_cases():
    A, B, C = rand3(2, 4)
    one = ineq.check_m_supermodular([A, B], [1], [[2]])
    assert one.passed and one.rhs == ineq._vol_sum([A, B]) and one.lhs == ineq._vol_sum([A])
    two = ineq.check_m_supermodular([B, C, A], [3], [[1], [2]])
    three = ineq.check_supermodular3(A, B, C)
    assert two.slack == three.slack


def test_m_supermodular_three_increments_3d():
    rng = sample_rng(11, 0)
    bodies = [random_polytope(rng, 3)[0] for _ in range(4)]
    rep = ineq.check_m_supermodular(bodies, [4], [[1], [2], [3]])
    assert rep.passed and rep.params["m"] == 3


def test_m_supermodular_mixed_volume_variant():
    rng = sample_rng(12, 0)
    bodies = [random_polytope(rng, 3)[0] for _ in range(4)]
    rep = ineq.check_m_supermodular(bodies[:3], [3], [[1], [2]], mixed_with=bodies[3:])
    assert rep.passed


def test_m_supermodular_rejects_overlap():
    with pytest.raises(ValueError):
        ineq.check_m_supermodular([SQ, TRI, SQ], [], [[1, 2], [2, 3]])


# -- compressions ------------------------------------------------------------

def test_compression_examples():
    bodies = [TRI, SQ, VPolytope.segment((0, 0), (1, 2))]
    rep = ineq.check_compression(bodies[:2], [{1}, {2}])
    assert rep.params["B"] == [[1, 2]] and rep.passed
    rep = ineq.check_compression(bodies, [{1, 2}, {2, 3}], [{2}, {1, 2, 3}])
    assert rep.passed and rep.rhs >= rep.lhs
    with pytest.raises(ValueError):
        ineq.check_compression(bodies, [{1, 2}, {2, 3}], [{1}, {2, 3}])


multisets = st.lists(st.sets(st.integers(1, 4), min_size=1, max_size=4), min_size=1, max_size=4)


@given(multisets)
def test_compression_chain_increases_square_weight(sets):
    chain = ineq.compression_chain(Multiset(sets))
    weights = [M.square_weight() for M in chain]
    assert all(a < b for a, b in zip(weights, weights[1:]))
    final = chain[-1]
    assert final == ineq.minimal_multiset(Multiset(sets))
    assert not final.non_nested_pairs()
    assert ineq.is_compression(Multiset(sets), final)


@given(multisets)
def test_minimal_multiset_is_a_chain(sets):
    M = ineq.minimal_multiset(sets)
    for a, b in zip(M.sets, M.sets[1:]):
        assert b <= a or a <= b
    # element multiplicities are preserved
    count = lambda ms: sorted(x for s in ms for x in s)
    assert count(M.sets) == count(Multiset(sets).sets)


# -- fractional superadditivity ----------------------------------------------

def test_fractional_superadditivity():
    A, B, C = rand3(2, 5)
    singles = ineq.FractionalPartition(2, {frozenset({1}): 1, frozenset({2}): 1})
    assert ineq.check_fractional_superadditivity([A, B], singles).passed
    pairs = ineq.FractionalPartition.all_subsets_of_size(3, 2)
    assert all(w == Fraction(1, 2) for _, w in pairs.weights)
    assert ineq.check_fractional_superadditivity([A, B, C], pairs).passed
    seg = VPolytope([(0,), (1,)])
    eq = ineq.check_fractional_superadditivity([seg, seg, seg], pairs)
    assert eq.slack == 0
    with pytest.raises(ValueError):
        ineq.FractionalPartition(2, {frozenset({1}): Fraction(1, 2), frozenset({2}): 1})
    with pytest.raises(ValueError):
        ineq.FractionalPartition(2, {frozenset({1}): 2, frozenset({1, 2}): -1, frozenset({2}): 2})


# -- three-body ratios ---------------------------------------------------------

def test_plunnecke_examples():
    rep = ineq.plunnecke_ratio3(TRI, ORIGIN2, ORIGIN2)
    assert rep.ratio == 1 and rep.passed
    rep = ineq.plunnecke_ratio3(SQ, SQ, SQ)
    assert rep.ratio == Fraction(9, 16)
    rep = ineq.plunnecke_ratio3(ORIGIN2, VPolytope.segment((0, 0), (1, 0)),
                                VPolytope.segment((0, 0), (2, 0)))
    assert rep.degenerate and rep.status == "degenerate"


@given(st.integers(2, 3).flatmap(lambda n: st.tuples(polytopes(n), polytopes(n))))
def test_plunnecke_equal_bodies_ratio_at_most_one(pair):
    A, B = pair
    rep = ineq.plunnecke_ratio3(A, B, B)
    assert rep.degenerate or rep.ratio <= 1


def test_plunnecke_constants():
    assert [ineq.plunnecke_constant(n) for n in (1, 2, 3, 4)] == [1, 1, Fraction(4, 3), 2]
    phi = (1 + 5 ** 0.5) / 2
    for n in range(2, 30):
        assert float(ineq.binomial_constant_bound(n)) <= phi ** n
    assert ineq.binomial_constant_bound(2) == 1 and ineq.binomial_constant_bound(3) == 2


def test_plunnecke_m_variants():
    r1, r2 = ineq.plunnecke_ratio_m(SQ, [SQ, SQ])
    assert (r2.lhs, r2.rhs) == (4, 16)
    assert r1.constant == 9 and r1.passed
    # A a point: the weak form is 0 <= prod |B_i|, tight once some B_i is flat
    seg = VPolytope.segment((0, 0), (1, 1))
    _, eq = ineq.plunnecke_ratio_m(ORIGIN2, [TRI, seg])
    assert eq.lhs == 0 and eq.rhs == 0
    _, strict = ineq.plunnecke_ratio_m(ORIGIN2, [TRI, SQ])
    assert strict.lhs == 0 and strict.slack > 0
    A, B, C = rand3(3, 6)
    r1, r2 = ineq.plunnecke_ratio_m(A, [B, C])
    assert r1.passed and r2.passed and r1.constant == 27
    assert r1.ratio <= Fraction(4, 3) * 1  # the sharper three-body constant also holds


def test_fractional_plunnecke():
    rng = sample_rng(3, 3)
    A, B1, B2, B3 = [random_polytope(rng, 2)[0] for _ in range(4)]
    for k in (1, 2, 3):
        assert ineq.check_fractional_plunnecke(A, [B1, B2, B3], k).passed
    with pytest.raises(ValueError, match="hypothesis fails"):
        ineq.check_fractional_plunnecke(A, [B1, B2], 1, {frozenset({1}): Fraction(1, 100)})


# -- mixed-volume inequalities ---------------------------------------------------

def test_xiao_and_fenchel():
    rng = sample_rng(9, 2)
    A, B, C = [random_triangle(rng)[0] for _ in range(3)]
    rep = ineq.check_xiao(A, B, C, 1, 1)
    assert rep.passed and rep.constant == 2
    S = VPolytope.simplex(3)
    _, B3, C3 = rand3(3, 7)
    rep = ineq.check_fenchel_local(S, B3, C3)
    assert rep.constant == 1 and rep.passed
    rep = ineq.check_fenchel_local(S, S, S)
    assert rep.slack == 0 and rep.lhs == Fraction(1, 36)
    assert ineq.check_fenchel_local(VPolytope.cube(3), B3, C3).constant == 2
    with pytest.raises(ValueError):
        ineq.check_xiao(A, B, C, 1, 2)


@given(triples(3), st.sampled_from([(1, 1), (1, 2), (2, 1)]))
def test_xiao_property(t, jm):
    assert ineq.check_xiao(*t, *jm).passed


# -- difference bodies -------------------------------------------------------------

def test_ruzsa_triangle_examples():
    I = VPolytope([(0,), (1,)])
    rep = ineq.check_ruzsa_triangle(I, I, I)
    assert (rep.lhs, rep.rhs) == (2, 4)
    assert ineq.check_ruzsa_triangle(*rand3(2, 8)).passed


@given(st.tuples(box_unions(2), box_unions(2), box_unions(2)))
def test_ruzsa_triangle_box_unions(t):
    assert ineq.check_ruzsa_triangle(*t).passed


def test_litvak_sharp_for_triangles():
    rep = ineq.check_litvak(TRI, -TRI)
    assert rep.constant == Fraction(3, 2) and rep.slack == 0 and rep.ratio == Fraction(3, 2)
    rep = ineq.check_triangle_variant(TRI, -TRI, ORIGIN2)
    assert rep.slack == 0
    assert ineq.check_triangle_variant(*rand3(2, 9)).constant == Fraction(3, 2)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(polytopes(n), polytopes(n))))
def test_litvak_property(pair):
    rep = ineq.check_litvak(*pair)
    assert rep.degenerate or rep.passed


def test_planar_difference_equality_cases():
    rep = ineq.check_planar_difference(TRI, TRI)
    assert rep.slack == 0
    hom = TRI.scale(Fraction(2, 3)).translate((5, 1))
    assert ineq.check_planar_difference(TRI, hom).slack == 0
    seg = VPolytope.segment((0, 0), (3, 1))
    rep = ineq.check_planar_difference(TRI, seg)
    assert rep.slack == 0 and rep.lhs == 0
    assert ineq.check_planar_difference(SQ, TRI).slack > 0
    with pytest.raises(ValueError):
        ineq.check_planar_difference(VPolytope.cube(3), VPolytope.cube(3))


@given(st.tuples(polytopes(2), polytopes(2)))
def test_asymmetry_bound(pair):
    A, C = pair
    assert ineq.check_asymmetry(A, C).passed
    assert ineq.check_planar_difference(A, C).passed
    try:
        asym, bound_sq = ineq.asymmetry(A, C)
    except ValueError:
        return
    assert asym ** 2 <= bound_sq


# -- increments -----------------------------------------------------------------

def test_delta_increment_examples():
    zero = BoxUnion([((0,), (0,))])
    A = BoxUnion.interval(0, 1)
    rep = ineq.check_delta_increment(A, zero, zero)
    assert rep.lhs == 0 and rep.rhs == 0
    rep = ineq.check_delta_increment(A, A, A)
    assert rep.lhs == 0 and rep.rhs == 1
    with pytest.raises(ValueError):
        ineq.check_delta_increment(A, BoxUnion.interval(1, 2), A)


@given(st.tuples(box_unions(2), box_unions(2), box_unions(2)))
def test_delta_increment_property(t):
    A, B, C = t
    zero = ((Fraction(0), Fraction(0)), (Fraction(0), Fraction(0)))
    B = BoxUnion(list(B.boxes) + [zero], 2)
    C = BoxUnion(list(C.boxes) + [zero], 2)
    assert ineq.check_delta_increment(A, B, C).passed


# -- ball checks -------------------------------------------------------------------

def test_projection_ball_point_is_exact():
    rep = ineq.check_projection_ball(ORIGIN2, 0, 6)
    assert rep.slack == 0 and rep.passed
    seg = VPolytope.segment((0, -1), (0, 2))
    rep = ineq.check_projection_ball(seg, 0, 6)
    assert rep.slack >= -rep.tolerance
    assert rep.tolerance < Fraction(1, 100) * rep.lhs


def test_zonoid_ellipsoid_within_tolerance():
    Z = Zonotope((0, 0), [(1, 0), (Fraction(1, 2), 1)])
    rep = ineq.check_zonoid_ellipsoid(TRI, Z, 6)
    assert rep.passed and rep.tolerance > 0
    with pytest.raises(ValueError):
        ineq.check_zonoid_ellipsoid(VPolytope.cube(4), Zonotope((0,) * 4, [(1, 0, 0, 0)]), 6)


# -- reports ---------------------------------------------------------------------------

def test_report_roundtrip():
    rep = ineq.plunnecke_ratio3(*rand3(2, 10))
    obj = rep.to_json()
    assert set(obj) >= {"id", "dim", "bodies", "lhs", "rhs", "slack", "pass", "constant"}
    back = InequalityReport.from_json(obj)
    assert back == rep
    assert dumps(back.to_json()) == dumps(obj)
    assert rep.passed == (rep.slack >= 0)
