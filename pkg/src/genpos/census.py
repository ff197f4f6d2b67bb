"""Exact censuses of spanned flats, rich-flat profiles, cohyperplanar
tuples, degeneracy ratios, and the three-way tuple classification.

Everything is computed by exhaustive enumeration over exact rational
coordinates and deduplicated through canonical forms, so counts are exact
at desk scale (n up to a few dozen, d <= 4 or so).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .geometry import Flat, Hyperplane, PointSet, affine_rank, hyperplane_through
from .linalg import dot, nullspace, vec_sub


def spanned_hyperplanes(ps: PointSet) -> list[tuple[Hyperplane, frozenset[int]]]:
    """Every hyperplane containing >= d points of affine rank d-1, with its
    full incident point-index set; each hyperplane listed once."""
    d = ps.dim
    if len(ps) < d:
        return []
    seen: dict[Hyperplane, frozenset[int]] = {}
    for subset in itertools.combinations(range(len(ps)), d):
        pts = [ps.points[i] for i in subset]
        if affine_rank(pts) != d - 1:
            continue
        h = hyperplane_through(pts)
        if h not in seen:
            seen[h] = frozenset(
                i for i, p in enumerate(ps.points) if h.contains(p)
            )
    return sorted(seen.items(), key=lambda kv: (kv[0].normal, kv[0].offset))


def spanned_flats(ps: PointSet, flat_dim: int) -> list[tuple[Flat, frozenset[int]]]:
    """All flats of the given dimension that are affine hulls of points of
    the set, each with its incident point indices."""
    if not (0 <= flat_dim <= ps.dim - 1):
        raise ValueError("flat dimension out of range")
    seen: dict[Flat, frozenset[int]] = {}
    for subset in itertools.combinations(range(len(ps)), flat_dim + 1):
        pts = [ps.points[i] for i in subset]
        if affine_rank(pts) != flat_dim:
            continue
        flat = Flat.through(pts)
        if flat not in seen:
            seen[flat] = frozenset(
                i for i, p in enumerate(ps.points) if flat.contains_point(p)
            )
    return sorted(
        seen.items(),
        key=lambda kv: (kv[0].basepoint, kv[0].directions),
    )


def count_cohyperplanar_tuples(ps: PointSet) -> int:
    """Number of (d+1)-subsets of affine rank <= d-1, computed from spanned
    flats: each flat with k incident points contributes C(k, d+1) tuples
    whose hull is that exact flat (inclusion of nested flats subtracted)."""
    d = ps.dim
    n = len(ps)
    if n < d + 1:
        return 0
    rich: list[tuple[Flat, frozenset[int]]] = []
    for f in range(1, d):
        for flat, inc in spanned_flats(ps, f):
            if len(inc) >= d + 1:
                rich.append((flat, inc))
    rich.sort(key=lambda kv: kv[0].dim_flat)
    exact_counts: list[int] = []
    total = 0
    for idx, (flat, inc) in enumerate(rich):
        cnt = comb(len(inc), d + 1)
        for j in range(idx):
            sub_flat, sub_inc = rich[j]
            if (
                exact_counts[j]
                and sub_flat.dim_flat < flat.dim_flat
                and sub_inc <= inc
                and flat.contains_flat(sub_flat)
            ):
                cnt -= exact_counts[j]
        exact_counts.append(cnt)
        total += cnt
    return total


def naive_cohyperplanar_count(ps: PointSet) -> int:
    """Direct scan over all (d+1)-subsets; the independent slow route used
    for verification."""
    d = ps.dim
    if len(ps) < d + 1:
        return 0
    return sum(
        1
        for subset in itertools.combinations(range(len(ps)), d + 1)
        if affine_rank([ps.points[i] for i in subset]) <= d - 1
    )


def rich_flat_profile(ps: PointSet, flat_dim: int) -> dict[int, int]:
    """Map k -> number of spanned flats of the given dimension containing
    exactly k points (h_k for hyperplanes, s_k for (d-2)-flats)."""
    d = ps.dim
    if flat_dim not in (d - 2, d - 1):
        raise ValueError("profile defined for flat dimensions d-2 and d-1")
    if flat_dim == d - 1:
        counts = Counter(len(inc) for _h, inc in spanned_hyperplanes(ps))
    else:
        counts = Counter(len(inc) for _f, inc in spanned_flats(ps, flat_dim))
    return dict(sorted(counts.items()))


def degeneracy_ratio(ps: PointSet, h: Hyperplane) -> Fraction:
    """Largest fraction of the points on h that lie on a single (d-2)-flat.

    h is gamma-degenerate iff this ratio is at most gamma.
    """
    d = ps.dim
    if d < 3:
        raise ValueError("degeneracy only defined for d >= 3")
    incident = [p for p in ps.points if h.contains(p)]
    k = len(incident)
    if k == 0:
        raise ValueError("hyperplane contains no point of the set")
    if k <= d - 1:
        return Fraction(1)
    best = 0
    for subset in itertools.combinations(range(k), d - 1):
        flat = Flat.through([incident[i] for i in subset])
        count = sum(1 for p in incident if flat.contains_point(p))
        if count > best:
            best = count
    return Fraction(best, k)


def pencil_profile(ps: PointSet, flat: Flat) -> dict[int, int]:
    """For a (d-2)-flat: map r -> number of hyperplanes through the flat
    containing exactly r points of the set outside it.  The hyperplanes
    through the flat partition the points off the flat, so sum(n_r * r)
    <= n."""
    d = ps.dim
    if flat.dim_flat != d - 2:
        raise ValueError("pencil profiles are defined for (d-2)-flats")
    groups: Counter[Hyperplane] = Counter()
    base = flat.basepoint
    for p in ps.points:
        if flat.contains_point(p):
            continue
        rows = list(flat.directions) + [vec_sub(p, base)]
        normal = nullspace(rows)[0]
        h = Hyperplane.from_coeffs(normal, dot(normal, base))
        groups[h] += 1
    return dict(sorted(Counter(groups.values()).items()))


@dataclass(frozen=True)
class TupleCounts:
    type1: int
    type2: int
    type3: int
    total: int


@dataclass(frozen=True)
class CensusProfile:
    """Rich-flat profiles (h_k, s_k), per-subflat pencil profiles, and the
    cohyperplanar tuple counts split by type."""

    hyperplane_rich: dict[int, int]
    subflat_rich: dict[int, int]
    pencils: tuple[tuple[Flat, dict[int, int]], ...]
    tuple_counts: TupleCounts


def classify_tuples(ps: PointSet, gamma) -> CensusProfile:
    """Assign every cohyperplanar (d+1)-tuple exactly one type: tuples of
    rank <= d-2 are type 1; the rest span a hyperplane, type 2 when it is
    gamma-degenerate and type 3 otherwise."""
    d = ps.dim
    if d < 3:
        raise ValueError(
            "tuple types are defined for d >= 3; for d = 2 count collinear "
            "triples directly"
        )
    gamma = Fraction(gamma)
    if not (0 < gamma < 1):
        raise ValueError("gamma must be strictly between 0 and 1")
    ratios: dict[Hyperplane, Fraction] = {}
    t1 = t2 = t3 = 0
    for subset in itertools.combinations(range(len(ps)), d + 1):
        pts = [ps.points[i] for i in subset]
        rank = affine_rank(pts)
        if rank == d:
            continue
        if rank <= d - 2:
            t1 += 1
            continue
        h = hyperplane_through(pts)
        if h not in ratios:
            ratios[h] = degeneracy_ratio(ps, h)
        if ratios[h] <= gamma:
            t2 += 1
        else:
            t3 += 1
    pencils = tuple(
        (flat, pencil_profile(ps, flat)) for flat, _inc in spanned_flats(ps, d - 2)
    )
    return CensusProfile(
        hyperplane_rich=rich_flat_profile(ps, d - 1),
        subflat_rich=rich_flat_profile(ps, d - 2),
        pencils=pencils,
        tuple_counts=TupleCounts(t1, t2, t3, t1 + t2 + t3),
    )


def max_hyperplane_richness(ps: PointSet) -> int:
    """Largest number of points on any single hyperplane."""
    d = ps.dim
    if len(ps) == 1:
        return 1
    if affine_rank(ps.points) <= d - 1:
        return len(ps)
    spanned = spanned_hyperplanes(ps)
    best = max((len(inc) for _h, inc in spanned), default=0)
    return max(best, d)


def respects_declared_bound(ps: PointSet) -> bool:
    """Check the optional declared bound: no hyperplane holds more than
    ps.ell points."""
    if ps.ell is None:
        return True
    return max_hyperplane_richness(ps) <= ps.ell
