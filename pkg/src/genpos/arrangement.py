"""Exact cell enumeration for hyperplane arrangements.

Cells are the full-dimensional open regions of R^d minus the hyperplanes,
identified by their sign vectors.  Two enumeration paths produce the same
cells:

* simple arrangements with n >= d: every cell closure contains a vertex,
  and the 2^d sign patterns around each vertex enumerate all cells with
  pure integer arithmetic (no LP);
* anything else (parallels, concurrences, n < d): breadth-first closure
  over facet flips, with strict feasibility decided by exact rational LP.

Both paths rely on the flip fact: for cells sigma and sigma-with-sign-j
flipped, both are nonempty iff hyperplane j supports a facet of both (the
segment between witnesses crosses j inside the shared face).
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .geometry import Hyperplane, Point
from .hypergraphs import Hypergraph
from .linalg import (
    common_denominator,
    int_dot,
    integerize,
    matrix_rank,
    nullspace,
    rref,
    solve_square,
)
from .lp import strict_feasible_point


@dataclass(frozen=True)
class Cell:
    """One full-dimensional cell: its sign vector, the hyperplanes
    supporting its facets, boundedness/simpliciality flags, and an exact
    interior witness point."""

    sign_vector: tuple[int, ...]
    facet_support: frozenset[int]
    bounded: bool
    simplicial: bool
    witness: Point

    @property
    def size(self) -> int:
        return len(self.facet_support)


@dataclass(frozen=True)
class Arrangement:
    dim: int
    hyperplanes: tuple[Hyperplane, ...]
    cells: tuple[Cell, ...]


def _validate_hyperplanes(hyperplanes) -> tuple[list[Hyperplane], int]:
    hp = list(hyperplanes)
    if not hp:
        raise ValueError("arrangement needs at least one hyperplane")
    d = hp[0].dim
    if any(h.dim != d for h in hp):
        raise ValueError("hyperplanes have mixed dimensions")
    if len(set(hp)) != len(hp):
        raise ValueError("duplicate hyperplanes")
    return hp, d


def arrangement_vertices(hyperplanes) -> dict[Point, frozenset[int]]:
    """All points where d hyperplanes with independent normals meet,
    mapped to the full set of incident hyperplane indices."""
    hp, d = _validate_hyperplanes(hyperplanes)
    verts: dict[Point, frozenset[int]] = {}
    for subset in itertools.combinations(range(len(hp)), d):
        sol = solve_square([hp[i].normal for i in subset], [hp[i].offset for i in subset])
        if sol is not None and sol not in verts:
            verts[sol] = frozenset(i for i, h in enumerate(hp) if h.contains(sol))
    return verts


def is_simple_arrangement(hyperplanes) -> bool:
    """Every d hyperplanes meet in exactly one point and no d+1 share one."""
    hp, d = _validate_hyperplanes(hyperplanes)
    n = len(hp)
    if n < d:
        return True
    seen: set[Point] = set()
    for subset in itertools.combinations(range(n), d):
        sol = solve_square(
            [hp[i].normal for i in subset], [hp[i].offset for i in subset]
        )
        if sol is None or sol in seen:
            return False
        seen.add(sol)
    return True


def _ray_sign_vectors(normals: list[tuple[int, ...]], d: int) -> list[tuple[int, ...]]:
    """Sign vectors of candidate extreme-ray directions: nullspace vectors
    of (d-1)-subsets of the normals (both orientations).  Complete for
    pointed recession cones, since an extreme ray has d-1 linearly
    independent active constraints."""
    n = len(normals)
    dirs: set[tuple[int, ...]] = set()
    if d == 1:
        dirs = {(1,), (-1,)}
    else:
        for subset in itertools.combinations(range(n), d - 1):
            rows = [normals[i] for i in subset]
            kernel = nullspace(rows)
            if len(kernel) != 1:
                continue
            r = integerize(kernel[0])
            dirs.add(r)
            dirs.add(tuple(-x for x in r))
    out = []
    for r in dirs:
        out.append(tuple((v > 0) - (v < 0) for v in (int_dot(nm, r) for nm in normals)))
    return out


def _bounded_flags(normals, d, sign_vectors) -> dict[tuple[int, ...], bool]:
    """Cell is bounded iff its recession cone {x : sign_i * n_i . x >= 0}
    is {0}."""
    flags: dict[tuple[int, ...], bool] = {}
    if matrix_rank(normals) < d:
        return {sv: False for sv in sign_vectors}
    ray_signs = _ray_sign_vectors(list(normals), d)
    for sv in sign_vectors:
        unbounded = any(
            all(rs == 0 or rs == s for rs, s in zip(ray, sv)) for ray in ray_signs
        )
        flags[sv] = not unbounded
    return flags


def _flip(sv: tuple[int, ...], j: int) -> tuple[int, ...]:
    return sv[:j] + (-sv[j],) + sv[j + 1 :]


def _enumerate_simple(hp: list[Hyperplane], d: int):
    """Vertex-anchored enumeration.  Returns None when the arrangement
    turns out not to be simple (singular d-subset or shared vertex);
    assumes n >= d."""
    n = len(hp)
    normals = [h.normal for h in hp]
    offsets = [h.offset for h in hp]

    witnesses: dict[tuple[int, ...], Point] = {}
    cell_verts: dict[tuple[int, ...], set[Point]] = {}
    seen_verts: set[Point] = set()
    for subset in itertools.combinations(range(n), d):
        # One elimination yields both the vertex and the inverse columns.
        aug = [
            list(normals[i]) + [offsets[i]] + [int(r == pos) for r in range(d)]
            for pos, i in enumerate(subset)
        ]
        red, pivots = rref(aug)
        if pivots != list(range(d)):
            return None
        vtx = tuple(red[r][d] for r in range(d))
        if vtx in seen_verts:
            return None
        seen_verts.add(vtx)
        # Column k of the inverse, scaled to integers: a direction whose
        # sign on through-hyperplane subset[k] is +1 and 0 on the others.
        int_cols = [
            integerize([red[r][d + 1 + k] for r in range(d)]) for k in range(d)
        ]
        nums, den = common_denominator(vtx)
        evals = [int_dot(normals[i], nums) - offsets[i] * den for i in range(n)]
        base = [(e > 0) - (e < 0) for e in evals]
        outside = [i for i in range(n) if i not in subset]
        for eps in itertools.product((1, -1), repeat=d):
            sv = list(base)
            for pos, i in enumerate(subset):
                sv[i] = eps[pos]
            sv = tuple(sv)
            cell_verts.setdefault(sv, set()).add(vtx)
            if sv in witnesses:
                continue
            y = tuple(
                sum(eps[k] * int_cols[k][r] for k in range(d)) for r in range(d)
            )
            step = None
            for i in outside:
                move = int_dot(normals[i], y)
                if move != 0:
                    bound = Fraction(abs(evals[i]), den * abs(move))
                    if step is None or bound < step:
                        step = bound
            step = (step / 2) if step is not None else Fraction(1)
            witnesses[sv] = tuple(v + step * c for v, c in zip(vtx, y))

    cell_set = set(witnesses)
    supports = {
        sv: frozenset(j for j in range(n) if _flip(sv, j) in cell_set)
        for sv in cell_set
    }
    bounded = _bounded_flags(normals, d, cell_set)
    cells = []
    for sv in cell_set:
        simplicial = (
            bounded[sv]
            and len(supports[sv]) == d + 1
            and len(cell_verts[sv]) == d + 1
        )
        cells.append(
            Cell(
                sign_vector=sv,
                facet_support=supports[sv],
                bounded=bounded[sv],
                simplicial=simplicial,
                witness=witnesses[sv],
            )
        )
    return cells


def _enumerate_bfs(hp: list[Hyperplane], d: int):
    """Breadth-first enumeration via facet flips with exact LP feasibility;
    handles parallels, concurrences and n < d."""
    n = len(hp)
    normals = [h.normal for h in hp]
    offsets = [h.offset for h in hp]

    rng = random.Random(0)
    span = 8
    while True:
        p = tuple(
            Fraction(rng.randint(-span, span), rng.randint(1, span))
            for _ in range(d)
        )
        signs = tuple(h.side(p) for h in hp)
        if 0 not in signs:
            break
        span *= 2

    memo: dict[tuple[int, ...], Point | None] = {signs: p}

    def probe(sv):
        if sv not in memo:
            memo[sv] = strict_feasible_point(
                d,
                [
                    (tuple(s * x for x in nm), s * off)
                    for s, nm, off in zip(sv, normals, offsets)
                ],
            )
        return memo[sv]

    queue = deque([signs])
    supports: dict[tuple[int, ...], frozenset[int]] = {}
    while queue:
        sv = queue.popleft()
        if sv in supports:
            continue
        facets = []
        for j in range(n):
            other = _flip(sv, j)
            if probe(other) is not None:
                facets.append(j)
                if other not in supports:
                    queue.append(other)
        supports[sv] = frozenset(facets)

    cell_set = set(supports)
    bounded = _bounded_flags(normals, d, cell_set)
    verts = arrangement_vertices(hp)
    int_verts = [(common_denominator(v), v) for v in verts]
    cells = []
    for sv in cell_set:
        simplicial = False
        if bounded[sv] and len(supports[sv]) == d + 1:
            count = 0
            for (nums, den), _v in int_verts:
                ok = True
                for i in range(n):
                    e = int_dot(normals[i], nums) - offsets[i] * den
                    s = (e > 0) - (e < 0)
                    if s != 0 and s != sv[i]:
                        ok = False
                        break
                if ok:
                    count += 1
            simplicial = count == d + 1
        cells.append(
            Cell(
                sign_vector=sv,
                facet_support=supports[sv],
                bounded=bounded[sv],
                simplicial=simplicial,
                witness=memo[sv],
            )
        )
    return cells


def enumerate_cells(hyperplanes) -> Arrangement:
    """All full-dimensional cells, with sign vectors, facet supports,
    boundedness and simpliciality flags, and interior witness points.
    Deterministic output order (lexicographic sign vectors)."""
    hp, d = _validate_hyperplanes(hyperplanes)
    cells = _enumerate_simple(hp, d) if len(hp) >= d else None
    if cells is None:
        cells = _enumerate_bfs(hp, d)
    cells.sort(key=lambda c: c.sign_vector)
    return Arrangement(dim=d, hyperplanes=tuple(hp), cells=tuple(cells))


def simplicial_cells(arr: Arrangement) -> list[Cell]:
    """Bounded cells with exactly d+1 facets and d+1 vertices."""
    return [c for c in arr.cells if c.simplicial]


def cell_hypergraph(arr: Arrangement) -> Hypergraph:
    """One vertex per hyperplane, one hyperedge per cell (its facet
    support); duplicate edges are kept with multiplicity."""
    return Hypergraph.of(
        len(arr.hyperplanes), [c.facet_support for c in arr.cells]
    )


def is_independent_set(arr: Arrangement, indices) -> bool:
    """True iff no cell of the arrangement is bounded by hyperplanes of
    the given subset only."""
    s = set(indices)
    if s and (min(s) < 0 or max(s) >= len(arr.hyperplanes)):
        raise IndexError("hyperplane index out of range")
    return not any(c.facet_support <= s for c in arr.cells)
