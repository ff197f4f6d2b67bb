"""End-to-end constructions: extracting large general-position subsets,
the general-position-or-rich-hyperplane dichotomy, and the exact alpha
oracle for small instances."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .census import count_cohyperplanar_tuples, spanned_hyperplanes
from .geometry import (
    Flat,
    Hyperplane,
    PointSet,
    affine_rank,
    extend_flat_to_hyperplane,
    hyperplane_through,
    is_general_position,
)
from .hypergraphs import Hypergraph, exact_max_independent, spencer_deletion


def cohyperplanar_hypergraph(ps: PointSet) -> Hypergraph:
    """(d+1)-uniform hypergraph on point indices whose edges are the
    cohyperplanar (d+1)-subsets (affine rank <= d-1)."""
    d = ps.dim
    n = len(ps)
    edges = [
        frozenset(subset)
        for subset in itertools.combinations(range(n), d + 1)
        if affine_rank([ps.points[i] for i in subset]) <= d - 1
    ]
    return Hypergraph.of(n, edges)


def large_genpos_subset(ps: PointSet, seed, retries: int = 100) -> list[int]:
    """Subset in general position of size at least ceil of the deletion
    bound with r = d+1 and m the exact cohyperplanar-tuple count."""
    d = ps.dim
    if len(ps) < d + 1:
        return list(range(len(ps)))
    m = count_cohyperplanar_tuples(ps)
    if m == 0:
        return list(range(len(ps)))
    hg = cohyperplanar_hypergraph(ps)
    selected = spencer_deletion(hg, seed=seed, retries=retries)
    if not is_general_position(ps.subset(selected)):
        raise AssertionError("deletion returned a non-general-position set")
    return selected


def exact_alpha(ps: PointSet, limit: int = 24) -> tuple[int, list[int]]:
    """Size and witness of a largest general-position subset, by branch
    and bound over the cohyperplanar-tuple hypergraph."""
    if len(ps) > limit:
        raise ValueError(
            f"instance has {len(ps)} points, above exhaustive limit {limit}"
        )
    return exact_max_independent(cohyperplanar_hypergraph(ps), limit=limit)


@dataclass(frozen=True)
class DichotomyWitness:
    """Either q points in general position or q points on one hyperplane.

    ``guaranteed`` is False only when the input was below the size
    threshold and neither witness could be completed.
    """

    kind: str  # "general_position" | "cohyperplanar"
    indices: tuple[int, ...]
    hyperplane: Hyperplane | None = None
    guaranteed: bool = True


def validate_witness(ps: PointSet, q: int, witness: DichotomyWitness) -> bool:
    pts = [ps.points[i] for i in witness.indices]
    if len(witness.indices) < q:
        return False
    if witness.kind == "general_position":
        return is_general_position(ps.subset(witness.indices))
    if witness.kind == "cohyperplanar":
        if affine_rank(pts) > ps.dim - 1:
            return False
        if witness.hyperplane is not None:
            return all(witness.hyperplane.contains(p) for p in pts)
        return True
    return False


def genpos_or_hyperplane(ps: PointSet, q: int, seed=None) -> DichotomyWitness:
    """Grow a maximal general-position subset S; return it when |S| >= q,
    otherwise return a hyperplane spanned by d points of S holding >= q
    points (the pigeonhole guarantees one when n >= q * C(q, d))."""
    d = ps.dim
    n = len(ps)
    if q < d + 1:
        raise ValueError("need q >= d + 1")

    order = list(range(n))
    if seed is not None:
        random.Random(seed).shuffle(order)
    chosen: list[int] = []
    for i in order:
        if len(chosen) >= q:
            break
        candidate = chosen + [i]
        if len(candidate) <= d:
            chosen = candidate
            continue
        ok = all(
            affine_rank([ps.points[j] for j in subset] + [ps.points[i]]) == d
            for subset in itertools.combinations(chosen, d)
        )
        if ok:
            chosen = candidate
    if len(chosen) >= q:
        return DichotomyWitness(kind="general_position", indices=tuple(chosen))

    # Pigeonhole branch: hyperplanes spanned by d-subsets of the stuck S.
    for subset in itertools.combinations(chosen, d):
        pts = [ps.points[j] for j in subset]
        if affine_rank(pts) != d - 1:
            continue
        h = hyperplane_through(pts)
        incident = tuple(i for i, p in enumerate(ps.points) if h.contains(p))
        if len(incident) >= q:
            return DichotomyWitness(
                kind="cohyperplanar", indices=incident, hyperplane=h
            )
    # Degenerate growth orders can stall S below q without making its
    # spanned hyperplanes rich; any rich hyperplane of P still witnesses.
    for h, incident in spanned_hyperplanes(ps):
        if len(incident) >= q:
            return DichotomyWitness(
                kind="cohyperplanar", indices=tuple(sorted(incident)), hyperplane=h
            )
    if affine_rank(ps.points) <= d - 1 and n >= q:
        flat = Flat.through(ps.points)
        h = extend_flat_to_hyperplane(flat, d)
        return DichotomyWitness(
            kind="cohyperplanar", indices=tuple(range(n)), hyperplane=h
        )
    return DichotomyWitness(
        kind="general_position", indices=tuple(chosen), guaranteed=False
    )
