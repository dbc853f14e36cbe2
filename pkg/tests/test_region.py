from fractions import Fraction as F

import pytest
import shapely.geometry as sg
from hypothesis import given, settings
from hypothesis import strategies as st

from multitile.corpus import E, FF, H, K_PRIME, ex33_region
from multitile.lattice import IntMatrix, det
from multitile.region import (
    Region,
    affine_image,
    bounding_box,
    convex_cell,
    convex_hull,
    essentially_equal,
    intersect,
    polygon_area2,
    split_at_chord,
    subtract,
    union,
)

B33 = IntMatrix(((-1, 1), (-3, 1)))


def iv(a, b):
    return Region.interval(F(a), F(b))


def poly(points):
    return Region(2, [convex_hull(points)])


def neg(points):
    return [(-x, -y) for x, y in points]


# ---------------------------------------------------------------- examples


def test_measure_examples():
    assert iv(F(-3, 4), F(1, 4)).measure == 1
    assert Region.empty(1).measure == 0
    assert Region.empty(2).measure == 0
    # H is a parallelogram: horizontal sides of length 1/3, height 1/2
    assert poly(H).measure == F(1, 3) * F(1, 2)


def test_affine_image_examples():
    K = iv(F(-3, 4), F(1, 4))
    assert affine_image(K, 2, 1) == iv(F(-3, 2), F(1, 2))
    assert affine_image(K, -3, 1) == iv(F(-3, 4), F(9, 4))
    assert affine_image(K, 2, 0) == K
    assert affine_image(K, 2, 1, (1,)) == iv(F(-1, 2), F(3, 2))
    K33 = ex33_region()
    assert affine_image(K33, B33, 0) == K33


def test_intersect_examples():
    assert intersect(iv(0, 1), iv(1, 2)).is_empty()
    BK1 = affine_image(iv(F(-3, 4), F(1, 4)), 2, 1, (1,))
    assert intersect(BK1, iv(F(-3, 4), F(1, 4))) == iv(F(-1, 2), F(1, 4))


def test_intersect_ex33_upper_part():
    K = ex33_region()
    upper = intersect(K, affine_image(K, B33, 1, (0, 1)))
    expected = Region(2, [convex_hull(H), convex_hull(E), convex_hull(FF)])
    assert essentially_equal(upper, expected)
    assert upper == expected
    assert upper.measure == F(1, 2)


def test_subtract_examples():
    assert subtract(iv(0, 1), iv(0, 1)).is_empty()
    assert subtract(iv(F(-3, 4), F(1, 4)), iv(F(-1, 2), F(1, 4))) == iv(F(-3, 4), F(-1, 2))
    A = poly(K_PRIME)
    assert subtract(A, Region.empty(2)) == A
    assert subtract(iv(0, 3), iv(1, 2)) == Region(1, [(F(0), F(1)), (F(2), F(3))])


def test_essentially_equal_examples():
    assert essentially_equal(iv(0, 1), Region(1, [(F(0), F(1, 2)), (F(1, 2), F(1))]))
    assert not essentially_equal(iv(0, 1), iv(0, 1 - F(1, 10**9)))
    HE = union(poly(H), poly(E))
    from multitile.corpus import paper_example
    fx = paper_example("ex33_6piece")
    assert essentially_equal(HE, union(fx.atoms[0], fx.atoms[1]))


def test_bounding_box_examples():
    assert bounding_box(iv(F(-3, 4), F(1, 4))) == ((F(-3, 4),), (F(1, 4),))
    assert bounding_box(ex33_region()) == ((F(-2, 3), -1), (F(2, 3), 1))
    sq = poly([(0, 0), (1, 0), (1, 1), (0, 1)])
    assert bounding_box(sq) == ((0, 0), (1, 1))
    with pytest.raises(ValueError):
        bounding_box(Region.empty(2))


def test_polygon_validation():
    with pytest.raises(ValueError):
        Region.polygon([(0, 0), (2, 0), (1, F(1, 2)), (2, 2), (0, 2)])  # reflex vertex
    with pytest.raises(ValueError):
        Region.polygon([(0, 0), (1, 0), (2, 0)])
    # clockwise input is reoriented, collinear vertex dropped
    cell = convex_cell([(0, 0), (0, 1), (1, 1), (1, F(1, 2)), (1, 0)])
    assert cell == ((0, 0), (1, 0), (1, 1), (0, 1))
    with pytest.raises(ValueError):
        Region.from_cells(1, [(0, 2), (1, 3)])
    with pytest.raises(TypeError):
        Region.interval(0.5, 1)


def test_canonical_form_ignores_interior_chords():
    sq = poly([(0, 0), (2, 0), (2, 2), (0, 2)])
    tri_split = Region(2, [convex_hull([(0, 0), (2, 0), (2, 2)]), convex_hull([(0, 0), (2, 2), (0, 2)])])
    assert tri_split == sq
    assert sq.cells == (((0, 0), (2, 0), (2, 2), (0, 2)),)


# ---------------------------------------------------------------- properties

coord = st.fractions(min_value=-2, max_value=2, max_denominator=6)
points = st.lists(st.tuples(coord, coord), min_size=3, max_size=7)


@st.composite
def convex_regions(draw):
    cell = convex_hull(draw(points))
    if cell is None:
        cell = ((F(0), F(0)), (F(1), F(0)), (F(0), F(1)))
    return Region(2, [cell])


@st.composite
def regions2(draw):
    """Union of up to three random convex polygons (overlaps resolved by union)."""
    out = draw(convex_regions())
    for _ in range(draw(st.integers(0, 2))):
        out = union(out, draw(convex_regions()))
    return out


@st.composite
def regions1(draw):
    ends = draw(st.lists(coord, min_size=2, max_size=8, unique=True))
    ends.sort()
    cells = [(ends[i], ends[i + 1]) for i in range(0, len(ends) - 1, 2)]
    return Region(1, cells)


def to_shapely(R):
    return sg.MultiPolygon([sg.Polygon([(float(x), float(y)) for x, y in c]) for c in R.cells]).buffer(0)


@settings(max_examples=60, deadline=None)
@given(regions2(), regions2())
def test_boolean_ops_match_shapely(A, B):
    assert abs(float(intersect(A, B).measure) - to_shapely(A).intersection(to_shapely(B)).area) < 1e-9
    assert abs(float(subtract(A, B).measure) - to_shapely(A).difference(to_shapely(B)).area) < 1e-9
    assert abs(float(union(A, B).measure) - to_shapely(A).union(to_shapely(B)).area) < 1e-9


@settings(max_examples=60, deadline=None)
@given(regions2(), regions2())
def test_measure_additivity_2d(A, B):
    assert A.measure == intersect(A, B).measure + subtract(A, B).measure


@given(regions1(), regions1())
def test_measure_additivity_1d(A, B):
    assert A.measure == intersect(A, B).measure + subtract(A, B).measure


@settings(max_examples=40, deadline=None)
@given(regions2(), st.integers(0, 3),
       st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
       st.sampled_from([((-1, 1), (-3, 1)), ((2, 0), (0, 2)), ((1, -1), (1, 1)), ((0, 2), (-1, 0))]))
def test_affine_image_scales_measure(R, k, shift, rows):
    B = IntMatrix(rows)
    assert affine_image(R, B, k, shift).measure == abs(det(B)) ** k * R.measure


@given(regions1(), st.integers(0, 3), st.sampled_from([2, -2, 3, -3]))
def test_affine_image_scales_measure_1d(R, k, b):
    assert affine_image(R, b, k).measure == abs(b) ** k * R.measure


@settings(max_examples=60, deadline=None)
@given(regions2(), st.lists(st.tuples(coord, coord, st.integers(-3, 3), st.integers(-3, 3)), max_size=4))
def test_canonical_form_presentation_independent(R, chords):
    cells = list(R.cells)
    for x, y, nx, ny in chords:
        if (nx, ny) == (0, 0):
            continue
        cells = split_at_chord(Region(2, cells, _canonical=True), (x, y), (nx, ny))
    again = Region(2, cells)
    assert again == R
    assert Region(2, again.cells) == again  # idempotent
    assert essentially_equal(again, R)


@settings(max_examples=60, deadline=None)
@given(regions2(), regions2())
def test_no_degenerate_cells(A, B):
    for R in (intersect(A, B), subtract(A, B), union(A, B)):
        for c in R.cells:
            assert polygon_area2(c) > 0
            assert c[0] == min(c)


@given(regions1(), regions1())
def test_essential_equality_is_reflexive_and_detects_difference(A, B):
    assert essentially_equal(A, A)
    assert essentially_equal(A, B) == (A == B)
