"""Seeded dataset families: grids, random rational sets, simplexes,
parallel and random simple arrangements, and perturbed duals.

Generators reject and resample until exact validity checks pass, so the
returned objects satisfy their advertised degeneracy constraints by
construction, not by chance.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .arrangement import is_simple_arrangement
from .census import max_hyperplane_richness
from .linalg import matrix_rank
from .geometry import (
    Hyperplane,
    PointSet,
    affine_rank,
    dualize,
    hyperplane_through,
)
from .perturb import perturb_arrangement


def grid_point_set(side: int, d: int) -> PointSet:
    """The integer grid [1..side]^d."""
    pts = itertools.product(range(1, side + 1), repeat=d)
    return PointSet.of([tuple(Fraction(c) for c in p) for p in pts])


def square_grid(n: int, d: int) -> PointSet:
    """Grid with n = side^d total points; n must be a perfect d-th power."""
    side = round(n ** (1 / d))
    if side**d != n:
        raise ValueError(f"{n} is not a d-th power for d={d}")
    return grid_point_set(side, d)


def random_rational_points(
    n: int, d: int, seed, span: int = 30, max_denom: int = 4
) -> PointSet:
    """n distinct random points with small rational coordinates."""
    rng = random.Random(seed)
    pts: set[tuple] = set()
    while len(pts) < n:
        pts.add(
            tuple(
                Fraction(rng.randint(-span, span), rng.randint(1, max_denom))
                for _ in range(d)
            )
        )
    return PointSet.of(sorted(pts))


def simplex_points(d: int) -> PointSet:
    """Vertices of the standard simplex: origin plus unit vectors."""
    pts = [tuple(Fraction(0) for _ in range(d))]
    for i in range(d):
        pts.append(tuple(Fraction(int(i == j)) for j in range(d)))
    return PointSet.of(pts)


def parallel_hyperplanes(n: int, d: int) -> list[Hyperplane]:
    """n parallel hyperplanes x_1 = 1 .. n."""
    normal = tuple(1 if i == 0 else 0 for i in range(d))
    return [Hyperplane(normal=normal, offset=i) for i in range(1, n + 1)]


def simplex_hyperplanes(d: int) -> list[Hyperplane]:
    """d+1 generic hyperplanes: the coordinate hyperplanes plus sum = 1."""
    out = [
        Hyperplane(normal=tuple(int(i == j) for j in range(d)), offset=0)
        for i in range(d)
    ]
    out.append(Hyperplane(normal=tuple(1 for _ in range(d)), offset=1))
    return out


def random_simple_arrangement(
    n: int, d: int, seed, span: int = 60, max_tries: int = 200
) -> list[Hyperplane]:
    """n random integer hyperplanes forming a verified simple arrangement.

    For n < d simplicity is vacuous, so linear independence of the
    normals is required instead (the generic case the cell-count formula
    assumes)."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        hps = []
        for _ in range(n):
            normal = [rng.randint(-span, span) for _ in range(d)]
            if all(x == 0 for x in normal):
                normal[0] = 1
            hps.append(Hyperplane.from_coeffs(normal, rng.randint(-span, span)))
        if len(set(hps)) != n:
            continue
        if matrix_rank([h.normal for h in hps]) != min(n, d):
            continue
        if is_simple_arrangement(hps):
            return hps
    raise RuntimeError(f"no simple arrangement found in {max_tries} tries")


def dual_arrangement_of_points(n: int, d: int, seed) -> list[Hyperplane]:
    """Perturbed dual arrangement of a random point set with at most d+1
    points on any hyperplane."""
    ps = bounded_degeneracy_points(n, d, seed)
    rng = random.Random(seed)
    return perturb_arrangement(dualize(ps), seed=rng.randrange(2**30))


def bounded_degeneracy_points(
    n: int, d: int, seed, planted: int = 1, max_tries: int = 400
) -> PointSet:
    """Random points with at most d+1 on any hyperplane, where every
    cohyperplanar (d+1)-tuple spans a hyperplane whose last normal
    coordinate is nonzero (so its dual concurrency is an honest point).

    ``planted`` full (d+1)-tuples are placed on random such hyperplanes so
    the degenerate branch actually occurs.
    """
    rng = random.Random(seed)
    span = 25
    for _ in range(max_tries):
        pts: list[tuple] = []
        for _ in range(planted):
            normal = [rng.randint(-6, 6) for _ in range(d)]
            normal[-1] = rng.choice([1, 2, -1, -2, 3])
            offset = rng.randint(-12, 12)
            for _ in range(d + 1):
                head = [Fraction(rng.randint(-span, span)) for _ in range(d - 1)]
                last = Fraction(
                    offset - sum(a * x for a, x in zip(normal[:-1], head)),
                    normal[-1],
                )
                pts.append(tuple(head) + (last,))
        while len(pts) < n:
            pts.append(tuple(Fraction(rng.randint(-span, span)) for _ in range(d)))
        pts = pts[:n]
        if len(set(pts)) != n:
            continue
        ps = PointSet.of(sorted(pts))
        if affine_rank(ps.points) < d:
            continue
        if max_hyperplane_richness(ps) > d + 1:
            continue
        ok = True
        for subset in itertools.combinations(range(n), d + 1):
            sel = [ps.points[i] for i in subset]
            rank = affine_rank(sel)
            if rank == d:
                continue
            if rank <= d - 2:
                ok = False
                break
            h = hyperplane_through(sel)
            if h.normal[-1] == 0:
                ok = False
                break
        if ok:
            return ps
    raise RuntimeError("no point set met the degeneracy constraints")
