"""Hypergraph independent-set machinery.

Spencer's deletion-method bound and the matching randomized extraction,
greedy and exact (branch-and-bound) maximum independent sets, and the
cleanup step that makes an induced sub-hypergraph linear and
triangle-free.  A hypergraph triangle here is three distinct edges
pairwise sharing exactly one vertex, with the three shared vertices
distinct (hence no common vertex).
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Hypergraph:
    n_vertices: int
    edges: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, n_vertices: int, edges) -> "Hypergraph":
        out = tuple(frozenset(e) for e in edges)
        hg = cls(n_vertices=n_vertices, edges=out)
        for e in out:
            if not e:
                raise ValueError("empty edge")
            if min(e) < 0 or max(e) >= n_vertices:
                raise ValueError("edge vertex out of range")
        return hg

    def uniform_size(self) -> int | None:
        sizes = {len(e) for e in self.edges}
        if len(sizes) == 1:
            return sizes.pop()
        return None if sizes else 0

    def is_independent(self, vertices) -> bool:
        s = set(vertices)
        return not any(e <= s for e in self.edges)

    def induced(self, vertices) -> "Hypergraph":
        s = set(vertices)
        return Hypergraph(
            n_vertices=self.n_vertices,
            edges=tuple(e for e in self.edges if e <= s),
        )


class SpencerRetriesExhausted(RuntimeError):
    """The sampled deletion runs never met the guaranteed bound.

    Carries the best independent set found; hitting this signals an
    implementation bug, since sets of the guaranteed size exist.
    """

    def __init__(self, best: list[int], target: int):
        super().__init__(
            f"deletion method returned at most {len(best)} vertices in all "
            f"retries; guaranteed bound is {target}"
        )
        self.best = best
        self.target = target


def spencer_bound(n: int, m: int, r: int) -> float:
    """Deletion-method lower bound ((r-1)/r^(r/(r-1))) * n / (m/n)^(1/(r-1))
    on the independence number of an r-uniform hypergraph with n vertices
    and m edges; returns n for the edgeless case m = 0."""
    if n < 1 or m < 0 or r < 2:
        raise ValueError("need n >= 1, m >= 0, r >= 2")
    if m == 0:
        return float(n)
    return (r - 1) / r ** (r / (r - 1)) * n / (m / n) ** (1 / (r - 1))


def spencer_bound_ceil(n: int, m: int, r: int) -> int:
    """Exact ceiling of spencer_bound, via integer comparison of
    K^(r-1) against (r-1)^(r-1) n^r / (r^r m)."""
    if m == 0:
        return n
    q = Fraction((r - 1) ** (r - 1) * n**r, r**r * m)
    k = max(0, math.floor(spencer_bound(n, m, r)))
    while Fraction(k ** (r - 1)) < q:
        k += 1
    while k >= 1 and Fraction((k - 1) ** (r - 1)) >= q:
        k -= 1
    return k


def deletion_target(n: int, m: int, r: int) -> int:
    """Size the deletion method is guaranteed to reach.

    ceil(spencer_bound) inside the bound's validity region n <= r*m
    (where the optimal sampling probability is <= 1); in the sparse
    regime n > r*m the method keeps every vertex and deletes one per
    edge, guaranteeing n - m (and the closed-form value can then exceed
    the true independence number, e.g. n=4, m=1, r=3)."""
    if m == 0:
        return n
    if n > r * m:
        return n - m
    return spencer_bound_ceil(n, m, r)


def spencer_deletion(hg: Hypergraph, seed, retries: int = 100) -> list[int]:
    """Random sample with the bound-optimal probability, then delete one
    vertex from every surviving edge; retries until the returned
    independent set meets the guaranteed deletion_target."""
    n = hg.n_vertices
    m = len(hg.edges)
    if m == 0:
        return list(range(n))
    r = hg.uniform_size()
    if r is None:
        raise ValueError("deletion method needs a uniform hypergraph")
    target = deletion_target(n, m, r)
    p = min(1.0, (n / (r * m)) ** (1 / (r - 1)))
    rng = random.Random(seed)
    best: list[int] = []
    for _ in range(retries):
        chosen = {v for v in range(n) if rng.random() < p}
        for e in hg.edges:
            if e <= chosen:
                chosen.discard(rng.choice(sorted(e)))
        if len(chosen) > len(best):
            best = sorted(chosen)
        if len(best) >= target:
            return best
    raise SpencerRetriesExhausted(best, target)


def greedy_max_independent(
    hg: Hypergraph, order_seed=None, candidates=None
) -> list[int]:
    """Maximal (non-extendable) independent set by a single greedy pass,
    deterministic given order_seed.  ``candidates`` restricts the vertex
    pool (used when working inside an induced sub-hypergraph)."""
    pool = list(range(hg.n_vertices)) if candidates is None else sorted(candidates)
    if order_seed is not None:
        random.Random(order_seed).shuffle(pool)
    by_vertex: dict[int, list[frozenset[int]]] = {}
    for e in hg.edges:
        for v in e:
            by_vertex.setdefault(v, []).append(e)
    chosen: set[int] = set()
    for v in pool:
        if not any(e - chosen <= {v} for e in by_vertex.get(v, ())):
            chosen.add(v)
    return sorted(chosen)


def extend_to_maximal(hg: Hypergraph, start, order_seed=None) -> list[int]:
    """Greedily extend an independent set to a maximal one."""
    chosen = set(start)
    if not hg.is_independent(chosen):
        raise ValueError("starting set is not independent")
    pool = [v for v in range(hg.n_vertices) if v not in chosen]
    if order_seed is not None:
        random.Random(order_seed).shuffle(pool)
    for v in pool:
        if not any(e - chosen <= {v} for e in hg.edges):
            chosen.add(v)
    return sorted(chosen)


def _branch_and_bound_mis(
    n: int, edge_masks: list[int], node_budget: int | None = None
) -> tuple[int, int, bool]:
    """Maximum independent vertex set over bitmask edges.

    Returns (size, mask, exact); exact is False when the node budget ran
    out, in which case the best set found so far is reported.
    """
    degree = [0] * n
    for em in edge_masks:
        for v in range(n):
            if em >> v & 1:
                degree[v] += 1
    order = sorted(range(n), key=lambda v: -degree[v])
    by_vertex: list[list[int]] = [[] for _ in range(n)]
    for em in edge_masks:
        for v in range(n):
            if em >> v & 1:
                by_vertex[v].append(em)

    # Greedy warm start in branching order primes the pruning bound.
    warm_mask = 0
    warm_size = 0
    for v in order:
        bit = 1 << v
        if all((em & ~warm_mask) != bit for em in by_vertex[v]):
            warm_mask |= bit
            warm_size += 1

    best = [warm_size, warm_mask]
    nodes = [0]
    exact = [True]

    def dfs(i: int, chosen_mask: int, count: int):
        if not exact[0]:
            return
        if node_budget is not None:
            nodes[0] += 1
            if nodes[0] > node_budget:
                exact[0] = False
                return
        if count + (n - i) <= best[0]:
            return
        if i == n:
            best[0], best[1] = count, chosen_mask
            return
        v = order[i]
        bit = 1 << v
        if all((em & ~chosen_mask) != bit for em in by_vertex[v]):
            dfs(i + 1, chosen_mask | bit, count + 1)
        dfs(i + 1, chosen_mask, count)

    dfs(0, 0, 0)
    return best[0], best[1], exact[0]


def exact_max_independent(hg: Hypergraph, limit: int = 24) -> tuple[int, list[int]]:
    """True maximum independent set by branch and bound; refuses instances
    above the exhaustive limit."""
    n = hg.n_vertices
    if n > limit:
        raise ValueError(f"instance has {n} vertices, above exhaustive limit {limit}")
    masks = [sum(1 << v for v in e) for e in hg.edges]
    size, mask, exact = _branch_and_bound_mis(n, masks)
    assert exact
    return size, [v for v in range(n) if mask >> v & 1]


def is_linear(hg: Hypergraph) -> bool:
    """No two distinct edges share two or more vertices."""
    return _linearity_violation(list(hg.edges)) is None


def _linearity_violation(edges) -> tuple[int, int] | None:
    for i, j in itertools.combinations(range(len(edges)), 2):
        if len(edges[i] & edges[j]) >= 2:
            return i, j
    return None


def find_triangle(hg: Hypergraph) -> tuple[int, int, int] | None:
    return _triangle(list(hg.edges))


def _triangle(edges) -> tuple[int, int, int] | None:
    m = len(edges)
    share: dict[tuple[int, int], int] = {}
    for i, j in itertools.combinations(range(m), 2):
        common = edges[i] & edges[j]
        if len(common) == 1:
            share[(i, j)] = next(iter(common))
    for i, j in share:
        for k in range(j + 1, m):
            a = share.get((i, j))
            b = share.get((i, k))
            c = share.get((j, k))
            if b is None or c is None:
                continue
            if a != b and a != c and b != c:
                return i, j, k
    return None


def is_trianglefree(hg: Hypergraph) -> bool:
    return find_triangle(hg) is None


def make_linear_trianglefree(hg: Hypergraph, seed) -> tuple[list[int], Hypergraph]:
    """Greedy vertex deletion until the induced hypergraph is linear and
    triangle-free.  Not a minimum deletion; each round removes one vertex
    hitting a violation, chosen by the seeded rng."""
    rng = random.Random(seed)
    alive = set(range(hg.n_vertices))
    while True:
        edges = [e for e in hg.edges if e <= alive]
        pair = _linearity_violation(edges)
        if pair is not None:
            i, j = pair
            alive.discard(rng.choice(sorted(edges[i] & edges[j])))
            continue
        tri = _triangle(edges)
        if tri is not None:
            i, j, k = tri
            shared = (
                (edges[i] & edges[j]) | (edges[i] & edges[k]) | (edges[j] & edges[k])
            )
            alive.discard(rng.choice(sorted(shared)))
            continue
        break
    return sorted(alive), hg.induced(alive)
