import pytest

from genpos.arrangement import cell_hypergraph, enumerate_cells, is_simple_arrangement
from genpos.datasets import grid_point_set, parallel_hyperplanes
from genpos.geometry import Hyperplane, PointSet, dualize
from genpos.perturb import concurrent_tuples, perturb_arrangement


def concurrent_lines():
    return [
        Hyperplane.from_coeffs((1, 0), 0),
        Hyperplane.from_coeffs((0, 1), 0),
        Hyperplane.from_coeffs((1, -1), 0),
    ]


def test_concurrent_tuples_detection():
    assert concurrent_tuples(concurrent_lines()) == [(0, 1, 2)]
    simple = [
        Hyperplane.from_coeffs((1, 0), 0),
        Hyperplane.from_coeffs((0, 1), 0),
        Hyperplane.from_coeffs((1, 1), 2),
    ]
    assert concurrent_tuples(simple) == []


def test_three_concurrent_lines_become_triangle():
    out = perturb_arrangement(concurrent_lines(), seed=3)
    arr = enumerate_cells(out)
    assert is_simple_arrangement(out)
    bounded = [c for c in arr.cells if c.bounded]
    assert len(bounded) == 1 and bounded[0].simplicial
    assert bounded[0].facet_support == frozenset({0, 1, 2})


def test_already_simple_returned_unchanged():
    simple = [
        Hyperplane.from_coeffs((1, 0), 0),
        Hyperplane.from_coeffs((0, 1), 0),
        Hyperplane.from_coeffs((1, 1), 2),
    ]
    out = perturb_arrangement(simple, seed=1)
    assert out == simple
    before = sorted(tuple(sorted(e)) for e in cell_hypergraph(enumerate_cells(simple)).edges)
    after = sorted(tuple(sorted(e)) for e in cell_hypergraph(enumerate_cells(out)).edges)
    assert before == after


def test_dual_of_coplanar_quad_bounds_tetrahedron():
    pts = PointSet.of([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])
    out = perturb_arrangement(dualize(pts), seed=5)
    arr = enumerate_cells(out)
    supports = {c.facet_support for c in arr.cells if c.simplicial}
    assert frozenset({0, 1, 2, 3}) in supports


def test_parallels_become_simple():
    out = perturb_arrangement(parallel_hyperplanes(3, 2), seed=7)
    assert is_simple_arrangement(out)
    assert len(enumerate_cells(out).cells) == 7


def test_precondition_more_than_d_plus_1_concurrent():
    four_through_origin = [
        Hyperplane.from_coeffs((1, 0), 0),
        Hyperplane.from_coeffs((0, 1), 0),
        Hyperplane.from_coeffs((1, 1), 0),
        Hyperplane.from_coeffs((1, -1), 0),
    ]
    with pytest.raises(ValueError):
        perturb_arrangement(four_through_origin, seed=0)


def test_dual_of_grid_fixes_all_collinear_triples():
    # 3x3 grid duals: the 3 vertical column triples map to parallel lines
    # (no common point), the other 5 collinear triples to concurrences,
    # each of which must end bounding a simplicial cell
    duals = dualize(grid_point_set(3, 2))
    targets = concurrent_tuples(duals)
    assert len(targets) == 5
    out = perturb_arrangement(duals, seed=11)
    arr = enumerate_cells(out)
    supports = {c.facet_support for c in arr.cells if c.simplicial}
    for t in targets:
        assert frozenset(t) in supports
