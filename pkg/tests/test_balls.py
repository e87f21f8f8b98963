from fractions import Fraction
import math

import pytest

from convex_sumsets import VPolytope
from convex_sumsets.balls import ball_polytope, inradius_squared, sqrt_lower
from convex_sumsets.convex import volume


@pytest.mark.parametrize("dim,level", [(2, 4), (2, 6), (3, 3)])
def test_ball_polytope_sandwiched(dim, level):
    P = ball_polytope(dim, level)
    assert all(sum(x * x for x in v) <= 1 for v in P.vertices)
    r2 = inradius_squared(P)
    assert 0 < r2 < 1
    unit = math.pi if dim == 2 else 4 * math.pi / 3
    r = math.sqrt(r2)
    assert unit * r ** dim <= float(volume(P)) <= unit


def test_inradius_of_square():
    sq = VPolytope.cube(2, -1, 1)
    assert inradius_squared(sq) == 1
    with pytest.raises(ValueError):
        inradius_squared(VPolytope.cube(2))


def test_sqrt_lower():
    for x in (Fraction(2), Fraction(1, 3), Fraction(10 ** 6 + 1)):
        s = sqrt_lower(x)
        assert s * s <= x < (s + Fraction(1, 2 ** 60)) ** 2
