import itertools
from fractions import Fraction

import pytest
import sympy

from _oracles import dense_rank, tangent_by_hom
from hilbsmooth.oracle import (NonInjectiveSequence, ZeroParameter, cross_check,
                               distraction_points, exact_rank, hom_system, tangent_dimension)
from hilbsmooth.staircase import box, enumerate_basis_sets, two_box_union


def test_known_dimensions(tetra, cbox):
    assert tangent_dimension(tetra) == 18
    assert tangent_dimension(cbox) == 15
    assert tangent_dimension(box((2, 3))) == 12


def test_cross_check(tetra):
    assert cross_check(two_box_union((2, 2, 1, 1), (1, 1, 2, 2))) == (True, 28, 28)
    assert cross_check(box((1, 1, 1, 1))) == (True, 4, 4)
    assert cross_check(tetra).agree


def test_system_shape(tetra):
    system = hom_system(tetra)
    assert len(system.unknowns) == 24
    for row in system.rows:
        assert 1 <= len(row) <= 2 and set(row.values()) <= {1, -1}


def test_dump_format(fig2):
    system = hom_system(fig2)
    lines = system.dump().splitlines()
    assert lines[0].startswith("#")
    m, c = system.shape
    assert lines[1] == f"rows={m} cols={c} nnz={system.nnz()}"
    assert len(lines) == 2 + system.nnz()
    r0, c0, v0 = map(int, lines[2].split())
    assert system.rows[r0][c0] == v0


def test_rank_against_sympy():
    for beta in itertools.chain(enumerate_basis_sets(3, 4), enumerate_basis_sets(2, 5)):
        system = hom_system(beta)
        m, c = system.shape
        dense = sympy.Matrix(m, c, lambda i, j: system.rows[i].get(j, 0)) if m else None
        expected = dense.rank() if m else 0
        assert exact_rank(system.rows) == expected == dense_rank(system.rows, c)


def test_rank_general():
    rows = [{0: 2, 1: 4}, {0: 1, 1: 2}, {1: 3, 2: -6}, {0: 1, 2: 5}]
    assert exact_rank(rows) == dense_rank(rows, 3)
    assert exact_rank([]) == 0


@pytest.mark.parametrize("r,n", [(3, 5), (2, 6), (4, 3)])
def test_matches_definition(r, n):
    for beta in enumerate_basis_sets(r, n):
        assert tangent_dimension(beta) == tangent_by_hom(beta)


def test_boxes_are_smooth():
    for widths in [(3,), (2, 2), (1, 3, 2), (2, 1, 2, 2)]:
        b = box(widths)
        assert tangent_dimension(b) == b.rn


def test_distraction(fig2, tetra):
    pts = distraction_points(fig2, (0, 1, 2, 3), 1)
    assert pts == [(0, 0), (0, 1), (0, 2), (1, 0)]
    assert distraction_points(fig2, (0, 1, 2), 2) == [tuple(2 * x for x in p) for p in pts]
    assert set(distraction_points(tetra, (0, 1))) == {(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert distraction_points(tetra, (Fraction(1, 2), 3), Fraction(-1, 3))[0] == (
        Fraction(-1, 6),) * 3
    with pytest.raises(NonInjectiveSequence):
        distraction_points(fig2, (0, 1, 1))
    with pytest.raises(ZeroParameter):
        distraction_points(fig2, (0, 1, 2), 0)
    with pytest.raises(ValueError):
        distraction_points(fig2, (0, 1))
