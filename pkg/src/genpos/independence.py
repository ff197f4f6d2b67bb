"""Independent hyperplane sets and proper colorings of arrangements.

The randomized extraction pipeline: sample hyperplanes at rate p with
p*n = (n / (2^d * logloglog n))^(3/(3d-1)) (clamped at small n), clean the
sampled simplicial-cell hypergraph to a triangle-free linear one, take a
greedy independent set there, then repair against every cell of the full
arrangement and extend to a maximal independent set.  Every returned set
satisfies is_independent_set by construction and is re-asserted.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .arrangement import Arrangement, cell_hypergraph, enumerate_cells, is_independent_set
from .hypergraphs import (
    Hypergraph,
    greedy_max_independent,
    make_linear_trianglefree,
)


@dataclass(frozen=True)
class BetaRunReport:
    """Stage sizes of one seeded extraction run."""

    seed: object
    p_used: float
    size_sample: int
    size_cleaned: int
    size_independent: int
    size_final: int
    cleanup_removals: int

    def __post_init__(self):
        if not (
            self.size_sample >= self.size_cleaned >= self.size_independent >= 0
        ):
            raise ValueError("stage sizes must be nonincreasing")
        if self.size_final < 0:
            raise ValueError("final size must be nonnegative")


def _logloglog2(n: int) -> float:
    if n <= 4:
        return 1.0
    return max(1.0, math.log2(math.log2(math.log2(n))))


def sampling_probability(n: int, d: int) -> float:
    """p with p*n = (n / (2^d * logloglog2 n))^(3/(3d-1)), clamped to (0, 1]."""
    t = 2**d
    pn = (n / (t * _logloglog2(n))) ** (3 / (3 * d - 1))
    return min(1.0, pn / n)


def simplicial_cell_hypergraph(arr: Arrangement) -> Hypergraph:
    """(d+1)-uniform hypergraph: one vertex per hyperplane, one edge per
    simplicial cell's facet support."""
    return Hypergraph.of(
        len(arr.hyperplanes),
        [c.facet_support for c in arr.cells if c.simplicial],
    )


def randomized_beta_procedure(arr: Arrangement, seed) -> tuple[list[int], BetaRunReport]:
    """Extract an independent set of hyperplanes; returns (set, report)."""
    n = len(arr.hyperplanes)
    if n < 2:
        raise ValueError("need at least 2 hyperplanes")
    d = arr.dim
    rng = random.Random(seed)
    p = sampling_probability(n, d)

    sampled = [v for v in range(n) if rng.random() < p]
    simplicial = simplicial_cell_hypergraph(arr)
    induced = simplicial.induced(sampled)
    cleaned_all, _ = make_linear_trianglefree(induced, seed=rng.randrange(2**30))
    cleaned = sorted(set(cleaned_all) & set(sampled))
    cleaned_edges = induced.induced(cleaned)
    independent = greedy_max_independent(
        cleaned_edges, order_seed=rng.randrange(2**30), candidates=cleaned
    )

    chosen = set(independent)
    removals = 0
    for cell in arr.cells:
        if cell.facet_support <= chosen:
            chosen.discard(rng.choice(sorted(cell.facet_support)))
            removals += 1

    supports = [c.facet_support for c in arr.cells]
    order = list(range(n))
    rng.shuffle(order)
    for v in order:
        if v in chosen:
            continue
        if not any(sup - chosen <= {v} for sup in supports):
            chosen.add(v)

    assert is_independent_set(arr, chosen)
    report = BetaRunReport(
        seed=seed,
        p_used=p,
        size_sample=len(sampled),
        size_cleaned=len(cleaned),
        size_independent=len(independent),
        size_final=len(chosen),
        cleanup_removals=removals,
    )
    return sorted(chosen), report


class ColoringInfeasibleError(ValueError):
    """Some cell is bounded by a single hyperplane; no coloring can work."""


def greedy_coloring(arr: Arrangement) -> list[int]:
    """Color hyperplanes so that no cell's facet support is monochromatic.

    Iteratively extracts greedy maximal independent sets of the current
    sub-arrangement until at most half the hyperplanes remain, assigns one
    color per set, then recurses on the rest; at most two remaining
    hyperplanes get fresh distinct colors.
    """
    supports = [c.facet_support for c in arr.cells]
    bad = next((s for s in supports if len(s) == 1), None)
    if bad is not None:
        raise ColoringInfeasibleError(
            f"cell bounded by hyperplane {min(bad)} alone"
        )
    n = len(arr.hyperplanes)
    colors: dict[int, int] = {}
    next_color = 0

    def assign(group):
        nonlocal next_color
        for h in group:
            colors[h] = next_color
        next_color += 1

    def color_block(indices: list[int]):
        nonlocal next_color
        remaining = list(indices)
        if len(remaining) <= 2:
            for h in remaining:
                assign([h])
            return
        start = len(remaining)
        while len(remaining) > start // 2 and len(remaining) > 2:
            sub = enumerate_cells([arr.hyperplanes[i] for i in remaining])
            local = greedy_max_independent(cell_hypergraph(sub))
            if not local:
                for h in remaining:
                    assign([h])
                return
            picked = {remaining[i] for i in local}
            assign(sorted(picked))
            remaining = [i for i in remaining if i not in picked]
        color_block(remaining)

    color_block(list(range(n)))
    return [colors[i] for i in range(n)]


def coloring_is_proper(arr: Arrangement, colors) -> bool:
    """No cell sees a single color on its facet support."""
    return all(
        len({colors[i] for i in c.facet_support}) >= 2 for c in arr.cells
    )
