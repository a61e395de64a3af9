"""Small self-contained simplex over exact rationals with Bland's rule.

Solves  max c.x  subject to  A x (<=|=|>=) b,  x >= 0  on a dense tableau.
Intended for desk-scale certified computations (oracles, restricted masters);
no attempt at large-scale performance beyond skipping zero columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class LpInfeasible(Exception):
    pass


class LpUnbounded(Exception):
    pass


@dataclass
class LpResult:
    value: Fraction
    x: list[Fraction]
    duals: list[Fraction]  # one multiplier per constraint row


def solve_lp(c, rows, senses, rhs, maximize=True) -> LpResult:
    """Solve max (or min) c.x s.t. rows[i] . x  senses[i]  rhs[i], x >= 0.

    ``rows`` are dense coefficient lists, ``senses`` entries are "<=", "=",
    or ">=".  Bland's rule guarantees termination.  Duals are recovered from
    the optimal basis by an exact linear solve; for a maximization, a "<="
    row has dual >= 0 and a ">=" row has dual <= 0.
    """
    nvar = len(c)
    m = len(rows)
    obj = [Fraction(x) for x in c]
    if not maximize:
        obj = [-x for x in obj]

    # Normalize to b >= 0, flipping senses as needed.
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    sense: list[str] = []
    flipped: list[bool] = []
    for i in range(m):
        row = [Fraction(x) for x in rows[i]]
        bi = Fraction(rhs[i])
        si = senses[i]
        if si not in ("<=", "=", ">="):
            raise ValueError(f"bad sense {si!r}")
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
            si = {"<=": ">=", ">=": "<=", "=": "="}[si]
            flipped.append(True)
        else:
            flipped.append(False)
        A.append(row)
        b.append(bi)
        sense.append(si)

    # Column layout: structural | slack/surplus | artificial.
    slack_col: list[int | None] = [None] * m
    art_col: list[int | None] = [None] * m
    ncols = nvar
    for i in range(m):
        if sense[i] in ("<=", ">="):
            slack_col[i] = ncols
            ncols += 1
    for i in range(m):
        if sense[i] in ("=", ">="):
            art_col[i] = ncols
            ncols += 1

    tab = [row + [ZERO] * (ncols - nvar) + [b[i]] for i, row in enumerate(A)]
    for i in range(m):
        if slack_col[i] is not None:
            tab[i][slack_col[i]] = ONE if sense[i] == "<=" else -ONE
        if art_col[i] is not None:
            tab[i][art_col[i]] = ONE

    basis = [0] * m
    for i in range(m):
        basis[i] = art_col[i] if art_col[i] is not None else slack_col[i]

    needs_phase1 = any(a is not None for a in art_col)
    if needs_phase1:
        cost1 = [ZERO] * ncols
        for a in art_col:
            if a is not None:
                cost1[a] = -ONE  # maximize -(sum of artificials)
        z = _run_simplex(tab, basis, cost1, ncols)
        if z != 0:
            raise LpInfeasible()
        _expel_artificials(tab, basis, art_col, nvar, slack_col)

    cost2 = obj + [ZERO] * (ncols - nvar)
    artificial = {a for a in art_col if a is not None}
    value = _run_simplex(tab, basis, cost2, ncols, banned=artificial)

    x = [ZERO] * nvar
    for i, bi in enumerate(basis):
        if bi < nvar:
            x[bi] = tab[i][ncols]

    duals = _recover_duals(A, sense, slack_col, art_col, basis, cost2, m, ncols)
    for i in range(m):
        if flipped[i]:
            duals[i] = -duals[i]
    if not maximize:
        value = -value
        duals = [-d for d in duals]
    return LpResult(value, x, duals)


def _run_simplex(tab, basis, cost, ncols, banned=frozenset()):
    """Primal simplex on a tableau already in basic feasible form."""
    m = len(tab)
    rhs_col = ncols
    # Reduced costs: r_j = cost_j - cB . (tableau column j).
    while True:
        red = _reduced_costs(tab, basis, cost, ncols)
        enter = -1
        for j in range(ncols):
            if j in banned or j in basis:
                continue
            if red[j] > 0:  # Bland: first improving column
                enter = j
                break
        if enter < 0:
            return sum((cost[basis[i]] * tab[i][rhs_col] for i in range(m)), ZERO)
        leave = -1
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][rhs_col] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            raise LpUnbounded()
        _pivot(tab, basis, leave, enter, ncols)


def _reduced_costs(tab, basis, cost, ncols):
    m = len(tab)
    red = list(cost)
    for i in range(m):
        cb = cost[basis[i]]
        if cb != 0:
            row = tab[i]
            for j in range(ncols):
                if row[j] != 0:
                    red[j] -= cb * row[j]
    return red


def _pivot(tab, basis, row, col, ncols):
    piv = tab[row][col]
    prow = tab[row]
    if piv != 1:
        inv = ONE / piv
        for j in range(ncols + 1):
            if prow[j] != 0:
                prow[j] *= inv
    for i in range(len(tab)):
        if i == row:
            continue
        f = tab[i][col]
        if f != 0:
            trow = tab[i]
            for j in range(ncols + 1):
                if prow[j] != 0:
                    trow[j] -= f * prow[j]
    basis[row] = col


def _expel_artificials(tab, basis, art_col, nvar, slack_col):
    """Pivot basic artificials (at value 0) out wherever possible."""
    artificial = {a for a in art_col if a is not None}
    for i in range(len(tab)):
        if basis[i] in artificial:
            for j in range(len(tab[0]) - 1):
                if j in artificial or j in basis:
                    continue
                if tab[i][j] != 0:
                    _pivot(tab, basis, i, j, len(tab[0]) - 1)
                    break
            # If no pivot exists the row is redundant; the artificial stays
            # basic at value zero, which is harmless with its column banned.


def _recover_duals(A, sense, slack_col, art_col, basis, cost, m, ncols):
    """Solve y . B = c_B for the basis B of the final tableau (exact)."""
    # Build the basis matrix column by column against the ORIGINAL rows.
    cols = []
    cb = []
    for i in range(m):
        j = basis[i]
        col = [ZERO] * m
        if j < len(A[0]):
            for r in range(m):
                col[r] = A[r][j]
        else:
            for r in range(m):
                if slack_col[r] == j:
                    col[r] = ONE if sense[r] == "<=" else -ONE
                if art_col[r] == j:
                    col[r] = ONE
        cols.append(col)
        cb.append(cost[j] if j < ncols else ZERO)
    # Solve y^T B = cb, i.e. B^T y = cb with (B^T)[r][c] = B[c][r] = cols[r][c].
    bt = [cols[r][:] for r in range(m)]
    return _solve_linear(bt, cb)


def _solve_linear(a, b):
    """Gaussian elimination over Fractions; singular rows resolve to 0."""
    n = len(a)
    mat = [row[:] + [b[i]] for i, row in enumerate(a)]
    piv_cols = []
    r = 0
    for c in range(n):
        sel = -1
        for i in range(r, n):
            if mat[i][c] != 0:
                sel = i
                break
        if sel < 0:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = ONE / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(n):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
        if r == n:
            break
    x = [ZERO] * n
    for i, c in enumerate(piv_cols):
        x[c] = mat[i][n]
    return x
