"""Exact dense linear algebra over the rationals.

Everything here works on tuples/lists of fractions.Fraction and is sized
for dimensions up to ~6 and a few dozen rows, where exactness matters and
asymptotics do not.  No floating point anywhere: a rank, determinant or
solution returned by this module is a theorem, not an estimate.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Vector = tuple[Fraction, ...]


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vector(xs) -> Vector:
    return tuple(frac(x) for x in xs)


def vec_sub(a, b) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_add(a, b) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_scale(c, a) -> Vector:
    c = frac(c)
    return tuple(c * x for x in a)


def dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def int_dot(a, b) -> int:
    """Dot product of integer sequences, staying in int arithmetic."""
    return sum(x * y for x, y in zip(a, b))


def _eliminate(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Forward elimination to row echelon form (in place); returns pivots."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][col]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                factor = rows[i][col] / pv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def matrix_rank(rows) -> int:
    work = [[frac(x) for x in row] for row in rows]
    _, pivots = _eliminate(work)
    return len(pivots)


def determinant(rows) -> Fraction:
    n = len(rows)
    work = [[frac(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if work[i][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            det = -det
        pv = work[col][col]
        det *= pv
        for i in range(col + 1, n):
            if work[i][col] != 0:
                factor = work[i][col] / pv
                work[i] = [a - factor * b for a, b in zip(work[i], work[col])]
    return det


def rref(rows) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns).

    The output is canonical: leading entries are 1 and pivot columns are
    cleared above and below, so two row spaces are equal iff their rref
    rows are equal.
    """
    work = [[frac(x) for x in row] for row in rows]
    work, pivots = _eliminate(work)
    work = work[: len(pivots)]
    for r in range(len(pivots) - 1, -1, -1):
        col = pivots[r]
        pv = work[r][col]
        work[r] = [x / pv for x in work[r]]
        for i in range(r):
            if work[i][col] != 0:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
    return [tuple(row) for row in work], pivots


def matrix_inverse(rows) -> list[list[Fraction]] | None:
    """Inverse of a square matrix, or None when singular."""
    n = len(rows)
    aug = [
        [frac(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [list(row[n:]) for row in red]


def solve_square(A, b) -> Vector | None:
    """Unique solution of a square system, or None when singular."""
    n = len(A)
    aug = [[frac(x) for x in row] + [frac(rhs)] for row, rhs in zip(A, b)]
    rows, pivots = rref(aug)
    if len(pivots) != n or any(p >= n for p in pivots):
        return None
    sol = [Fraction(0)] * n
    for row, p in zip(rows, pivots):
        sol[p] = row[-1]
    return tuple(sol)


def solve_consistent(A, b) -> Vector | None:
    """Any solution of A x = b (possibly underdetermined), or None.

    Free variables are set to zero.
    """
    if not A:
        return ()
    ncols = len(A[0])
    aug = [[frac(x) for x in row] + [frac(rhs)] for row, rhs in zip(A, b)]
    rows, pivots = rref(aug)
    if any(p == ncols for p in pivots):
        return None
    sol = [Fraction(0)] * ncols
    for row, p in zip(rows, pivots):
        sol[p] = row[-1]
    return tuple(sol)


def nullspace(rows) -> list[Vector]:
    """Basis of the right nullspace, one vector per free column."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def integerize(v) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (gcd 1).

    The zero vector maps to itself; the sign is preserved.
    """
    v = vector(v)
    if all(x == 0 for x in v):
        return tuple(0 for _ in v)
    denom = lcm(*(x.denominator for x in v))
    ints = [int(x * denom) for x in v]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def common_denominator(v) -> tuple[tuple[int, ...], int]:
    """Rewrite a rational vector as (integer numerators, positive denominator)."""
    v = vector(v)
    denom = lcm(*(x.denominator for x in v)) if v else 1
    return tuple(int(x * denom) for x in v), denom
