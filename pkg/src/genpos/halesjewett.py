"""Combinatorial lines and subspaces of the grid [k]^m, exact line-free
subset search, and certified-generic projections of grids into low
dimension.

Words use symbols 1..k; coordinates are 0-based.  Combinatorial lines
(wildcard classes moving in unison) are a strict subset of the grid's
geometrically collinear k-tuples, which are measured separately through
the census machinery on projected point sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .geometry import PointSet, generic_projection
from .hypergraphs import _branch_and_bound_mis

Word = tuple[int, ...]


@dataclass(frozen=True)
class SubspaceTemplate:
    """t wildcard coordinate classes plus fixed coordinates with symbols.

    Canonical: classes ordered by smallest member, fixed pairs ordered by
    coordinate, so equal subspaces compare equal structurally.
    """

    m: int
    classes: tuple[frozenset[int], ...]
    fixed: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, m, classes, fixed) -> "SubspaceTemplate":
        classes = tuple(sorted((frozenset(c) for c in classes), key=min))
        fixed = tuple(sorted((int(c), int(s)) for c, s in fixed))
        tpl = cls(m=m, classes=classes, fixed=fixed)
        if not classes or any(not c for c in classes):
            raise ValueError("need at least one nonempty wildcard class")
        covered: set[int] = set()
        for c in classes:
            if covered & c:
                raise ValueError("wildcard classes overlap")
            covered |= c
        fixed_coords = {c for c, _s in fixed}
        if covered & fixed_coords or covered | fixed_coords != set(range(m)):
            raise ValueError("classes and fixed coordinates must partition [m]")
        return tpl

    @property
    def t(self) -> int:
        return len(self.classes)


def expand_template(tpl: SubspaceTemplate, k: int) -> list[Word]:
    """The k^t words of the subspace, sorted."""
    words = []
    for symbols in itertools.product(range(1, k + 1), repeat=tpl.t):
        w = [0] * tpl.m
        for cls, s in zip(tpl.classes, symbols):
            for c in cls:
                w[c] = s
        for c, s in tpl.fixed:
            w[c] = s
        words.append(tuple(w))
    return sorted(words)


def enumerate_lines(k: int, m: int) -> list[SubspaceTemplate]:
    """All (k+1)^m - k^m one-dimensional subspace templates, each once."""
    if k < 2 or m < 1:
        raise ValueError("need k >= 2 and m >= 1")
    out = []
    coords = list(range(m))
    for size in range(1, m + 1):
        for wild in itertools.combinations(coords, size):
            rest = [c for c in coords if c not in wild]
            for symbols in itertools.product(range(1, k + 1), repeat=len(rest)):
                out.append(
                    SubspaceTemplate.of(
                        m, [frozenset(wild)], list(zip(rest, symbols))
                    )
                )
    return out


def grid_words(k: int, m: int) -> list[Word]:
    return list(itertools.product(range(1, k + 1), repeat=m))


def grid_point_set(k: int, m: int) -> PointSet:
    """The grid [k]^m as exact points, in lexicographic word order."""
    return PointSet.of([tuple(Fraction(s) for s in w) for w in grid_words(k, m)])


class LineFreeResult(NamedTuple):
    size: int
    witness: list[Word]
    exact: bool


def max_linefree_subset(k: int, m: int, budget: int | None = None) -> LineFreeResult:
    """Largest subset of [k]^m containing no combinatorial line, by branch
    and bound over line hyperedges.  With a node budget, the best subset
    found is returned flagged inexact when the budget runs out."""
    words = grid_words(k, m)
    index = {w: i for i, w in enumerate(words)}
    masks = []
    for tpl in enumerate_lines(k, m):
        masks.append(sum(1 << index[w] for w in expand_template(tpl, k)))
    size, mask, exact = _branch_and_bound_mis(len(words), masks, node_budget=budget)
    witness = [words[i] for i in range(len(words)) if mask >> i & 1]
    return LineFreeResult(size=size, witness=witness, exact=exact)


def contains_line(k: int, m: int, selected) -> bool:
    """Whether the selected set of words contains a full combinatorial line."""
    chosen = set(selected)
    return any(
        set(expand_template(tpl, k)) <= chosen for tpl in enumerate_lines(k, m)
    )


def build_projected_grid(k: int, m: int, target_dim: int, seed) -> PointSet:
    """Image of [k]^m under a certified generic projection to target_dim;
    points appear in lexicographic word order, so index i is the image of
    grid_words(k, m)[i]."""
    return generic_projection(grid_point_set(k, m), target_dim, seed=seed)
