"""Hypothesis strategies for small rational bodies."""
from fractions import Fraction

from hypothesis import strategies as st

from convex_sumsets import BoxUnion, VPolytope, Zonotope

coord = st.integers(-8, 8).map(lambda k: Fraction(k, 4))


def points(dim, min_size, max_size):
    return st.lists(st.tuples(*[coord] * dim), min_size=min_size, max_size=max_size)


def polytopes(dim, min_size=1, max_size=None):
    return points(dim, min_size, max_size or 2 * dim + 2).map(lambda pts: VPolytope(pts, dim))


def full_polytopes(dim):
    return polytopes(dim, dim + 1).filter(lambda P: P.is_full_dimensional())


def zonotopes(dim, max_gens=3):
    return st.builds(Zonotope, st.tuples(*[coord] * dim),
                     st.lists(st.tuples(*[coord] * dim), max_size=max_gens))


def boxes(dim):
    def make(pair):
        a, b = pair
        return tuple(min(x, y) for x, y in zip(a, b)), tuple(max(x, y) for x, y in zip(a, b))

    return st.tuples(st.tuples(*[coord] * dim), st.tuples(*[coord] * dim)).map(make)


def box_unions(dim, max_boxes=3):
    return st.lists(boxes(dim), min_size=1, max_size=max_boxes).map(lambda bs: BoxUnion(bs, dim))
