"""Exact rational linear feasibility via phase-1 simplex.

Only feasibility is ever needed here: strict systems are homogenized to
closed ones (A x > b is solvable iff A x - b*mu >= 1, mu >= 1 is), so a
single phase with Bland's rule decides everything and returns an exact
witness.  Sized for a dozen constraints in dimension <= 6.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import frac


def feasible_point(n_vars: int, ge=(), eq=()) -> tuple[Fraction, ...] | None:
    """A solution x (free variables) of {a.x >= b for (a,b) in ge} and
    {a.x = b for (a,b) in eq}, or None when the system is infeasible."""
    ge = [([frac(x) for x in a], frac(b)) for a, b in ge]
    eq = [([frac(x) for x in a], frac(b)) for a, b in eq]
    n_ge = len(ge)
    n_struct = 2 * n_vars + n_ge  # x split into u - v, plus one surplus per >=

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    needs_artificial: list[bool] = []
    basis: list[int] = []

    def structural_row(a, surplus_idx):
        row = list(a) + [-x for x in a] + [Fraction(0)] * n_ge
        if surplus_idx is not None:
            row[2 * n_vars + surplus_idx] = Fraction(-1)
        return row

    for k, (a, b) in enumerate(ge):
        row = structural_row(a, k)
        if b > 0:
            rows.append(row)
            rhs.append(b)
            needs_artificial.append(True)
        else:
            rows.append([-x for x in row])
            rhs.append(-b)
            needs_artificial.append(False)
            basis.append(2 * n_vars + k)  # surplus column, coefficient +1
    for a, b in eq:
        row = structural_row(a, None)
        if b < 0:
            row, b = [-x for x in row], -b
        rows.append(row)
        rhs.append(b)
        needs_artificial.append(True)

    m = len(rows)
    art_cols: list[int] = []
    col = n_struct
    basis_full: list[int] = []
    surplus_iter = iter(basis)
    for i in range(m):
        if needs_artificial[i]:
            art_cols.append(col)
            basis_full.append(col)
            col += 1
        else:
            basis_full.append(next(surplus_iter))
    n_cols = col
    art_set = set(art_cols)
    for i in range(m):
        rows[i] = rows[i] + [Fraction(0)] * (n_cols - n_struct)
        if needs_artificial[i]:
            rows[i][basis_full[i]] = Fraction(1)
    basis = basis_full

    # Reduced costs for maximize z = -sum(artificials): r[j] = cB.B^-1 A_j - c_j
    cost = [Fraction(-1) if j in art_set else Fraction(0) for j in range(n_cols)]
    red = [Fraction(0)] * n_cols
    z = Fraction(0)
    for i in range(m):
        cb = cost[basis[i]]
        if cb != 0:
            for j in range(n_cols):
                red[j] += cb * rows[i][j]
            z += cb * rhs[i]
    for j in range(n_cols):
        red[j] -= cost[j]

    while True:
        enter = next(
            (j for j in range(n_struct) if red[j] < 0 and j not in art_set), None
        )
        if enter is None:
            break
        # Bland ratio test: min rhs/coeff over positive coefficients,
        # ties broken by smallest basis index.
        best = None
        for i in range(m):
            coeff = rows[i][enter]
            if coeff > 0:
                ratio = rhs[i] / coeff
                if best is None or ratio < best[0] or (
                    ratio == best[0] and basis[i] < basis[best[1]]
                ):
                    best = (ratio, i)
        if best is None:
            raise AssertionError("phase-1 objective cannot be unbounded")
        _, piv = best
        pr = rows[piv]
        pc = pr[enter]
        rows[piv] = [x / pc for x in pr]
        rhs[piv] /= pc
        pr = rows[piv]
        for i in range(m):
            if i != piv and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
                rhs[i] -= f * rhs[piv]
        if red[enter] != 0:
            f = red[enter]
            red = [a - f * b for a, b in zip(red, pr)]
            z -= f * rhs[piv]
        basis[piv] = enter

    if z != 0:
        return None
    values = [Fraction(0)] * n_cols
    for i in range(m):
        values[basis[i]] = rhs[i]
    return tuple(values[k] - values[n_vars + k] for k in range(n_vars))


def strict_feasible_point(n_vars: int, strict_ge=(), eq=()) -> tuple[Fraction, ...] | None:
    """A point with a.x > b strictly for every (a, b) in strict_ge and
    a.x = b for every (a, b) in eq, or None.

    Uses the homogenization {A x - b mu >= 1, C x - e mu = 0, mu >= 1},
    which is solvable iff the strict system is; the witness is x/mu.
    """
    ge = [(list(a) + [-frac(b)], Fraction(1)) for a, b in strict_ge]
    ge.append(([Fraction(0)] * n_vars + [Fraction(1)], Fraction(1)))
    eqs = [(list(a) + [-frac(b)], Fraction(0)) for a, b in eq]
    sol = feasible_point(n_vars + 1, ge, eqs)
    if sol is None:
        return None
    mu = sol[-1]
    return tuple(x / mu for x in sol[:-1])
