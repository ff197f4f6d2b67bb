import itertools

import pytest

from genpos.arrangement import cell_hypergraph, enumerate_cells, is_independent_set
from genpos.datasets import (
    parallel_hyperplanes,
    random_simple_arrangement,
    simplex_hyperplanes,
)
from genpos.geometry import Hyperplane
from genpos.hypergraphs import exact_max_independent, greedy_max_independent
from genpos.independence import (
    BetaRunReport,
    ColoringInfeasibleError,
    coloring_is_proper,
    greedy_coloring,
    randomized_beta_procedure,
    sampling_probability,
    simplicial_cell_hypergraph,
)


def three_generic_lines():
    return [
        Hyperplane.from_coeffs((1, 0), 0),
        Hyperplane.from_coeffs((0, 1), 0),
        Hyperplane.from_coeffs((1, 1), 2),
    ]


def min_proper_colors(arr):
    """Exhaustive chromatic oracle over all colorings."""
    n = len(arr.hyperplanes)
    sups = [c.facet_support for c in arr.cells]
    for k in range(1, n + 1):
        for colors in itertools.product(range(k), repeat=n):
            if all(len({colors[i] for i in s}) >= 2 for s in sups):
                return k
    return None


def test_sampling_probability_clamps():
    # n=4, d=2: p*n = (4/4)^(3/5) = 1 so p = 1/4
    assert sampling_probability(4, 2) == 0.25
    for n in (2, 3, 5, 16, 100):
        for d in (2, 3, 4):
            p = sampling_probability(n, d)
            assert 0 < p <= 1


def test_simplicial_cell_hypergraph_uniform():
    arr = enumerate_cells(random_simple_arrangement(7, 2, seed=3))
    hg = simplicial_cell_hypergraph(arr)
    assert all(len(e) == 3 for e in hg.edges)
    assert len(hg.edges) == sum(c.simplicial for c in arr.cells)


def test_beta_procedure_soundness_random():
    for seed in range(12):
        d = 2 + seed % 2
        n = 4 + seed % 5
        arr = enumerate_cells(random_simple_arrangement(n, d, seed=seed))
        selected, report = randomized_beta_procedure(arr, seed=seed)
        assert is_independent_set(arr, selected)
        assert report.size_sample >= report.size_cleaned >= report.size_independent
        assert report.size_final == len(selected)
        again, report2 = randomized_beta_procedure(arr, seed=seed)
        assert again == selected and report2 == report


def test_beta_procedure_exhaustive_beta_tiny():
    tri = enumerate_cells(three_generic_lines())
    par = enumerate_cells(parallel_hyperplanes(4, 2))
    assert exact_max_independent(cell_hypergraph(tri))[0] == 1
    assert exact_max_independent(cell_hypergraph(par))[0] == 1
    for seed in range(50):
        s_tri, _ = randomized_beta_procedure(tri, seed=seed)
        s_par, _ = randomized_beta_procedure(par, seed=seed)
        assert len(s_tri) == 1
        assert len(s_par) == 1 and set(s_par) <= {1, 2}


def test_beta_procedure_needs_two_hyperplanes():
    arr = enumerate_cells([Hyperplane.from_coeffs((1, 0), 0)])
    with pytest.raises(ValueError):
        randomized_beta_procedure(arr, seed=0)


def test_beta_report_validation():
    with pytest.raises(ValueError):
        BetaRunReport(
            seed=0,
            p_used=0.5,
            size_sample=2,
            size_cleaned=3,
            size_independent=1,
            size_final=1,
            cleanup_removals=0,
        )


def test_coloring_three_lines_exhaustive():
    arr = enumerate_cells(three_generic_lines())
    # oracle: one color infeasible, two infeasible, three feasible
    assert min_proper_colors(arr) == 3
    colors = greedy_coloring(arr)
    assert coloring_is_proper(arr, colors)
    assert len(set(colors)) == 3


def test_coloring_two_generic_lines():
    arr = enumerate_cells(
        [Hyperplane.from_coeffs((1, 0), 0), Hyperplane.from_coeffs((0, 1), 0)]
    )
    assert min_proper_colors(arr) == 2
    colors = greedy_coloring(arr)
    assert coloring_is_proper(arr, colors) and len(set(colors)) == 2


def test_coloring_simplex_arrangement():
    for d in (2, 3):
        arr = enumerate_cells(simplex_hyperplanes(d))
        colors = greedy_coloring(arr)
        assert coloring_is_proper(arr, colors)
        assert len(set(colors)) <= d + 1


def test_coloring_random_soundness():
    for seed in range(15):
        d = 2 + seed % 2
        n = 3 + seed % 6
        arr = enumerate_cells(random_simple_arrangement(n, d, seed=seed + 100))
        colors = greedy_coloring(arr)
        assert coloring_is_proper(arr, colors)


def test_coloring_singleton_support_rejected():
    arr = enumerate_cells(parallel_hyperplanes(3, 2))
    with pytest.raises(ColoringInfeasibleError):
        greedy_coloring(arr)


def test_beta_vs_greedy_paired_runs_logged():
    # paired comparison on one n=10, d=2 arrangement across 50 seeds:
    # the extraction pipeline should match or beat the plain greedy
    # baseline on at least half the seeds (logged, sanity-asserted)
    arr = enumerate_cells(random_simple_arrangement(10, 2, seed=42))
    wins = 0
    for seed in range(50):
        pipeline, _ = randomized_beta_procedure(arr, seed=seed)
        baseline = greedy_max_independent(cell_hypergraph(arr), order_seed=seed)
        if len(pipeline) >= len(baseline):
            wins += 1
    print(f"beta pipeline >= greedy baseline in {wins}/50 paired seeds")
    assert wins >= 25


def test_coloring_vs_sequential_greedy_logged():
    """Color-count comparison against a plain sequential greedy (logged
    only; the iterated-extraction scheme pays one fresh color per round
    and is usually behind at desk scale)."""

    def sequential(arr):
        n = len(arr.hyperplanes)
        sups = [c.facet_support for c in arr.cells]
        colors = {}
        for h in range(n):
            c = 0
            while True:
                colors[h] = c
                if not any(
                    h in s and all(colors.get(i) == c for i in s) for s in sups
                ):
                    break
                c += 1
        return [colors[i] for i in range(n)]

    rows = []
    for seed in range(8):
        arr = enumerate_cells(random_simple_arrangement(5 + seed % 3, 2, seed=seed))
        ours = len(set(greedy_coloring(arr)))
        seq_colors = sequential(arr)
        assert coloring_is_proper(arr, seq_colors)
        rows.append((ours, len(set(seq_colors))))
    print("iterated-IS vs sequential greedy color counts:", rows)
