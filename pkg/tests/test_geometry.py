from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from scripts.errors import GeneralPositionError, InputError
from scripts.geometry.boxes import (
    Box,
    Interval,
    OverlapType,
    Pattern,
    all_patterns,
    boxes_intersect,
    classify_overlap,
    intersection_pattern,
    make_box,
    mirror,
    normalize,
)


def iv(lo, hi):
    return Interval(Fraction(lo), Fraction(hi))


@st.composite
def box_sets(draw, max_n=12, max_d=3, span=8):
    d = draw(st.integers(1, max_d))
    n = draw(st.integers(1, max_n))
    boxes = []
    for i in range(n):
        bounds = []
        for _ in range(d):
            a, b = draw(st.integers(0, span)), draw(st.integers(0, span))
            bounds.append((min(a, b), max(a, b)))
        boxes.append(make_box(i, bounds))
    return boxes


def test_classify_overlap_examples():
    assert classify_overlap(iv(0, 3), iv(1, 2)) == OverlapType.CONTAINS
    assert classify_overlap(iv(1, 2), iv(0, 3)) == OverlapType.CONTAINED
    assert classify_overlap(iv(0, 2), iv(1, 3)) == OverlapType.LEFT
    assert classify_overlap(iv(1, 3), iv(0, 2)) == OverlapType.RIGHT
    assert classify_overlap(iv(0, 1), iv(2, 3)) == OverlapType.DISJOINT


def test_classify_overlap_rejects_shared_endpoint():
    with pytest.raises(GeneralPositionError):
        classify_overlap(iv(0, 1), iv(1, 2))


def test_interval_rejects_reversed_endpoints():
    with pytest.raises(InputError):
        iv(2, 1)


def test_intersection_pattern_examples():
    outer = make_box(0, [(0, 3), (0, 3)])
    inner = make_box(1, [(1, 2), (1, 2)])
    assert intersection_pattern(outer, inner) == Pattern((OverlapType.CONTAINS, OverlapType.CONTAINS))

    b1 = make_box(0, [(0, 2), (1, 3)])
    b2 = make_box(1, [(1, 3), (0, 2)])
    assert intersection_pattern(b1, b2) == Pattern((OverlapType.LEFT, OverlapType.RIGHT))

    far = make_box(2, [(5, 6), (0, 3)])
    assert intersection_pattern(outer, far) is None


def test_mirror_examples():
    assert mirror(Pattern((OverlapType.CONTAINS,))) == Pattern((OverlapType.CONTAINED,))
    assert mirror(Pattern((OverlapType.LEFT, OverlapType.RIGHT))) == Pattern((OverlapType.RIGHT, OverlapType.LEFT))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_all_patterns_count_and_involution(d):
    patterns = all_patterns(d)
    assert len(patterns) == 4 ** d
    assert len(set(patterns)) == 4 ** d
    assert patterns == sorted(patterns)
    for p in patterns:
        assert mirror(mirror(p)) == p
        assert all(a != b for a, b in zip(p.coords, mirror(p).coords))


def test_pattern_label_roundtrip_and_rejects_disjoint():
    p = Pattern((OverlapType.CONTAINS, OverlapType.CONTAINED, OverlapType.LEFT, OverlapType.RIGHT))
    assert p.label == "CcLR"
    assert Pattern.from_label("CcLR") == p
    with pytest.raises(InputError):
        Pattern((OverlapType.DISJOINT,))
    with pytest.raises(InputError):
        Pattern.from_label("CX")


def test_normalize_shared_endpoint_earlier_id_closes_first():
    a, b = normalize([make_box(0, [(0, 1)]), make_box(1, [(1, 2)])])
    assert a.sides[0].hi < b.sides[0].lo
    assert not boxes_intersect(a, b)


def test_normalize_general_position_preserves_order():
    boxes = [make_box(0, [(0, 5), (2, 9)]), make_box(1, [(1, 3), (4, 7)]), make_box(2, [(6, 8), (1, 10)])]
    result = normalize(boxes)
    for axis in range(2):
        before = sorted((v, i, kind) for i, box in enumerate(boxes)
                        for kind, v in enumerate((box.sides[axis].lo, box.sides[axis].hi)))
        after = sorted((v, i, kind) for i, box in enumerate(result)
                       for kind, v in enumerate((box.sides[axis].lo, box.sides[axis].hi)))
        assert [(i, kind) for _, i, kind in before] == [(i, kind) for _, i, kind in after]


def test_normalize_widens_degenerate_sides():
    (box,) = normalize([make_box(0, [(3, 3), (1, 1)])])
    assert all(side.lo < side.hi for side in box.sides)


def test_normalize_rejects_bad_collections():
    with pytest.raises(InputError):
        normalize([])
    with pytest.raises(InputError):
        normalize([make_box(0, [(0, 1)]), make_box(1, [(0, 1), (0, 1)])])
    with pytest.raises(InputError):
        normalize([make_box(0, [(0, 1)]), make_box(0, [(2, 3)])])


def test_box_requires_dimension():
    with pytest.raises(InputError):
        Box(0, ())


@settings(max_examples=100, deadline=None)
@given(box_sets())
def test_normalize_distinct_ranks_and_idempotent(boxes):
    once = normalize(boxes)
    n = len(boxes)
    for axis in range(once[0].d):
        ranks = sorted(v for box in once for v in (box.sides[axis].lo, box.sides[axis].hi))
        assert ranks == list(range(2 * n))
    assert normalize(once) == once


@settings(max_examples=100, deadline=None)
@given(box_sets())
def test_mirror_symmetry_and_intersection_agreement(boxes):
    boxes = normalize(boxes)
    for i, b1 in enumerate(boxes):
        for b2 in boxes[i + 1:]:
            p = intersection_pattern(b1, b2)
            q = intersection_pattern(b2, b1)
            assert (p is None) == (q is None) == (not boxes_intersect(b1, b2))
            if p is not None:
                assert q == mirror(p)
