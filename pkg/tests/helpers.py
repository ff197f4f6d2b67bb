"""Shared brute-force oracles, kept independent of the library paths they
check: ranks and counts here are recomputed from scratch via determinants
or exhaustive scans."""

import itertools
import random
from fractions import Fraction as F

from genpos.geometry import PointSet


def rank_of(points) -> int:
    """Affine rank by Gaussian elimination on difference vectors, written
    out locally so census checks do not reuse library code paths."""
    pts = [tuple(F(c) for c in p) for p in points]
    rows = [[b - a for a, b in zip(pts[0], p)] for p in pts[1:]]
    rank = 0
    cols = len(pts[0])
    r = 0
    for col in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        rank += 1
        if r == len(rows):
            break
    return rank


def brute_cohyperplanar_count(ps: PointSet) -> int:
    d = ps.dim
    return sum(
        1
        for idx in itertools.combinations(range(len(ps)), d + 1)
        if rank_of([ps.points[i] for i in idx]) <= d - 1
    )


def brute_is_general_position(ps: PointSet) -> bool:
    return brute_cohyperplanar_count(ps) == 0


def brute_max_independent(n_vertices: int, edges) -> int:
    """Exhaustive subset scan; fine up to ~16 vertices."""
    edge_sets = [frozenset(e) for e in edges]
    best = 0
    for mask in range(2**n_vertices):
        size = mask.bit_count()
        if size <= best:
            continue
        chosen = {v for v in range(n_vertices) if mask >> v & 1}
        if not any(e <= chosen for e in edge_sets):
            best = size
    return best


def random_point_set(n: int, d: int, seed, span: int = 20, max_denom: int = 3) -> PointSet:
    rng = random.Random(seed)
    pts = set()
    while len(pts) < n:
        pts.add(
            tuple(
                F(rng.randint(-span, span), rng.randint(1, max_denom))
                for _ in range(d)
            )
        )
    return PointSet.of(sorted(pts))
