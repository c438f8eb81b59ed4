"""Randomised properties of the constructors, driven by hypothesis."""

from hypothesis import given, settings, strategies as st

from hilbsmooth.cotangent import class_report, condition_a, cotangent_dimension, is_smooth
from hilbsmooth.oracle import distraction_points, tangent_dimension
from hilbsmooth.staircase import (add_box, box, enumerate_basis_sets, hypothesis81,
                                  thicken, truncate, two_box_union)

SMALL3 = [b for n in range(1, 6) for b in enumerate_basis_sets(3, n)]
SMALL2 = [b for n in range(1, 7) for b in enumerate_basis_sets(2, n)]

widths = st.lists(st.integers(1, 3), min_size=1, max_size=4)


@given(widths)
def test_boxes_smooth(w):
    b = box(w)
    assert b.n == _prod(w)
    assert cotangent_dimension(b) == b.rn == tangent_dimension(b)


@settings(max_examples=60)
@given(st.sampled_from(SMALL3), st.integers(1, 2))
def test_thickening(beta, w):
    t = thicken(beta, w)
    assert t.n == beta.n * w
    assert is_smooth(t) == is_smooth(beta)


@settings(max_examples=60)
@given(st.sampled_from(SMALL3 + SMALL2), st.data())
def test_box_addition(beta, data):
    j = data.draw(st.integers(0, beta.r - 1))
    h = data.draw(st.integers(1, 2))
    w = tuple(h if k == j else beta.widths[k] + data.draw(st.integers(0, 1))
              for k in range(beta.r))
    bigger = add_box(beta, j, h, w)
    assert hypothesis81(bigger, j, h)
    assert truncate(bigger, j, h) == beta
    assert is_smooth(bigger) == is_smooth(beta)


@settings(max_examples=60)
@given(st.sampled_from([b for b in SMALL3 if is_smooth(b)]), st.data())
def test_truncation(beta, data):
    j = data.draw(st.integers(0, beta.r - 1))
    if beta.widths[j] < 2:
        return
    h = data.draw(st.integers(1, beta.widths[j] - 1))
    t = truncate(beta, j, h)
    assert condition_a(t)
    if hypothesis81(beta, j, h):
        assert is_smooth(t)


@settings(max_examples=40)
@given(st.integers(2, 4).flatmap(
    lambda r: st.tuples(st.lists(st.integers(1, 3), min_size=r, max_size=r),
                        st.lists(st.integers(1, 3), min_size=r, max_size=r))))
def test_two_box_unions(pair):
    u = two_box_union(*pair)
    rep = class_report(u)
    assert rep.smooth and rep.dim == u.rn


@settings(max_examples=40)
@given(st.sampled_from(SMALL3 + SMALL2), st.integers(1, 5))
def test_distraction_scales(beta, w1):
    a = list(range(beta.n))
    pts = distraction_points(beta, a, w1)
    assert len(set(pts)) == beta.n
    assert pts == [tuple(w1 * x for x in p) for p in distraction_points(beta, a, 1)]


def _prod(xs):
    p = 1
    for x in xs:
        p *= x
    return p
