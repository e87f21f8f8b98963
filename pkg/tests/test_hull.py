import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.spatial import ConvexHull

from convex_sumsets.hull import affine_rank, convex_hull, det, fan_volume

ints = st.integers(-6, 6)


def qhull_volume(points):
    return ConvexHull(np.array(points, dtype=float)).volume


@pytest.mark.parametrize("d", [2, 3, 4])
def test_volume_matches_qhull(d):
    rng = random.Random(d)
    for _ in range(30):
        pts = [tuple(rng.randint(-50, 50) for _ in range(d)) for _ in range(3 * d + 4)]
        hull = convex_hull(pts)
        if hull.rank < d:
            continue
        assert float(fan_volume(pts, hull)) == pytest.approx(qhull_volume(pts), rel=1e-9)
        assert sorted(hull.vertices) == sorted(ConvexHull(np.array(pts, float)).vertices.tolist())


@given(st.lists(st.tuples(ints, ints, ints), min_size=1, max_size=12))
def test_vertices_are_extreme(points):
    hull = convex_hull(points)
    verts = {points[i] for i in hull.vertices}
    # every input point is a vertex or is dropped; vertices are distinct points
    assert len(verts) == len(hull.vertices)
    # removing a non-vertex never changes the vertex set
    rest = list(verts)
    again = convex_hull(rest)
    assert {rest[i] for i in again.vertices} == verts


def test_cube_with_face_and_edge_points():
    # points on faces and edges are not vertices
    pts = [(x, y, z) for x in (0, 1, 2) for y in (0, 1, 2) for z in (0, 1, 2)]
    hull = convex_hull(pts)
    assert sorted(pts[i] for i in hull.vertices) == sorted(
        (x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2))
    assert fan_volume(pts, hull) == 8


def test_tesseract():
    pts = [tuple((k >> i) & 1 for i in range(4)) for k in range(16)]
    pts += [(Fraction(1, 2),) * 4]
    pts = [tuple(int(2 * x) for x in p) for p in pts]
    hull = convex_hull(pts)
    assert len(hull.vertices) == 16
    assert fan_volume(pts, hull) == 16


def test_lower_dimensional_input():
    pts = [(0, 0, 0), (1, 1, 0), (2, 2, 0), (0, 1, 0)]
    hull = convex_hull(pts)
    assert hull.rank == 2
    assert sorted(hull.vertices) == [0, 2, 3]
    assert fan_volume(pts, hull) == 0
    assert convex_hull([(3, 3)] * 4).rank == 0


def test_huge_coordinates_use_exact_path():
    base = [(0, 0, 0), (3, 0, 0), (0, 5, 0), (0, 0, 7), (1, 1, 1), (2, 2, 2)]
    scale = 1 << 300
    big = [tuple(scale * x for x in p) for p in base]
    small_hull, big_hull = convex_hull(base), convex_hull(big)
    assert sorted(small_hull.vertices) == sorted(big_hull.vertices)
    assert fan_volume(big, big_hull) == fan_volume(base, small_hull) * scale ** 3


def test_affine_rank_and_det():
    assert affine_rank([(0, 0), (1, 1), (2, 2)])[0] == 1
    assert det([[2, 0, 0], [0, 3, 0], [1, 1, 4]]) == 24
    assert det([[1, 2], [2, 4]]) == 0
