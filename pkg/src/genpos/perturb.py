"""Verified random perturbation of hyperplane arrangements.

Degenerate arrangements (concurrences, parallels) are nudged by small
random rationals until an exact verifier accepts the result: the output
must be simple, and every input (d+1)-tuple that met in a common point
must bound a simplicial cell of the perturbed arrangement.  Nothing about
the perturbation is assumed; failed draws halve the magnitude and retry.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .arrangement import enumerate_cells, is_simple_arrangement
from .geometry import Hyperplane
from .linalg import solve_consistent


class PerturbationError(RuntimeError):
    """No verified perturbation found within the retry budget."""


def concurrent_tuples(hyperplanes) -> list[tuple[int, ...]]:
    """All (d+1)-subsets of hyperplanes sharing at least one common point."""
    hp = list(hyperplanes)
    d = hp[0].dim
    out = []
    for subset in itertools.combinations(range(len(hp)), d + 1):
        sol = solve_consistent(
            [hp[i].normal for i in subset], [hp[i].offset for i in subset]
        )
        if sol is not None:
            out.append(subset)
    return out


def perturb_arrangement(hyperplanes, seed, max_rounds: int = 40) -> list[Hyperplane]:
    """Perturb into a simple arrangement in which every formerly
    concurrent (d+1)-set of hyperplanes bounds a simplicial cell.

    An already-simple arrangement is returned unchanged.  Raises
    ValueError when more than d+1 input hyperplanes are concurrent, and
    PerturbationError when no draw verifies within ``max_rounds``.
    """
    hp = list(hyperplanes)
    if not hp:
        raise ValueError("empty arrangement")
    d = hp[0].dim
    n = len(hp)
    for subset in itertools.combinations(range(n), d + 2):
        sol = solve_consistent(
            [hp[i].normal for i in subset], [hp[i].offset for i in subset]
        )
        if sol is not None:
            raise ValueError(
                f"more than {d + 1} hyperplanes concurrent: {subset}"
            )
    if is_simple_arrangement(hp):
        return hp

    targets = [frozenset(t) for t in concurrent_tuples(hp)]
    rng = random.Random(seed)
    eps = Fraction(1, 16)
    denom = 997
    for _ in range(max_rounds):
        candidate = []
        for h in hp:
            normal = [
                c + eps * Fraction(rng.randint(-denom, denom), denom)
                for c in h.normal
            ]
            offset = h.offset + eps * Fraction(rng.randint(-denom, denom), denom)
            candidate.append(Hyperplane.from_coeffs(normal, offset))
        if len(set(candidate)) == n and is_simple_arrangement(candidate):
            arr = enumerate_cells(candidate)
            simplicial_supports = {
                c.facet_support for c in arr.cells if c.simplicial
            }
            if all(t in simplicial_supports for t in targets):
                return candidate
        eps /= 2
    raise PerturbationError(
        f"no verified perturbation in {max_rounds} rounds "
        f"({len(targets)} concurrent tuples to fix)"
    )
