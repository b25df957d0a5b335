"""Exact rational linear algebra on small dense matrices.

Everything here works on tuples or lists of ``int``/``Fraction`` and returns
``Fraction`` results, so callers never see floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Matrix = Sequence[Sequence[int | Fraction]]


def _as_fraction_rows(matrix: Matrix) -> list[list[Fraction]]:
    return [[Fraction(v) for v in row] for row in matrix]


def rref(matrix: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form by Gauss-Jordan elimination.

    Args:
        matrix: Rows of rationals. May be empty.

    Returns:
        The reduced matrix and the list of pivot column indices.
    """
    rows = _as_fraction_rows(matrix)
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _integer_rank(rows: list[list[int]]) -> int:
    # Fraction-free elimination: every intermediate entry stays an integer.
    r = 0
    ncols = len(rows[0])
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            a = rows[i][c]
            rows[i] = [(p * x - a * y) // prev for x, y in zip(rows[i], rows[r])]
        prev = p
        r += 1
        if r == len(rows):
            break
    return r


def rank(matrix: Matrix) -> int:
    """Rank over the rationals."""
    if matrix and len(matrix[0]) and all(type(v) is int for row in matrix for v in row):
        return _integer_rank([list(row) for row in matrix])
    return len(rref(matrix)[1])


def nullspace(matrix: Matrix, ncols: Optional[int] = None) -> list[list[Fraction]]:
    """Basis of the right null space ``{v : M v = 0}``.

    Args:
        matrix: Rows of rationals.
        ncols: Column count, required only when ``matrix`` has no rows.
    """
    if not matrix:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    reduced, pivots = rref(matrix)
    n = len(reduced[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row_idx, p in enumerate(pivots):
            v[p] = -reduced[row_idx][f]
        basis.append(v)
    return basis


def transpose(matrix: Matrix) -> list[list[int | Fraction]]:
    return [list(col) for col in zip(*matrix)]


def feasible_nonnegative(a: Matrix, b: Sequence[int | Fraction]) -> Optional[list[Fraction]]:
    """Find ``x >= 0`` with ``A x = b`` by a phase-one simplex in exact arithmetic.

    Bland's rule guarantees termination. Redundant equality rows are harmless:
    their artificial variables simply stay basic at zero.

    Args:
        a: Constraint matrix with ``m`` rows and ``n`` columns.
        b: Right-hand side of length ``m``.

    Returns:
        A feasible ``x`` or ``None`` when the system has no nonnegative solution.
    """
    rows = _as_fraction_rows(a)
    rhs = [Fraction(v) for v in b]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if m == 0:
        return [Fraction(0)] * n
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
    # Tableau columns: n originals then m artificials.
    tableau = [rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    width = n + m
    # Phase-one objective: minimise the sum of artificials. Reduced costs
    # for the originals are minus the column sums.
    cost = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(width + 1):
            if j < n or j == width:
                cost[j] -= tableau[i][j]
    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        best = None
        leave = None
        for i in range(m):
            coef = tableau[i][entering]
            if coef > 0:
                ratio = tableau[i][width] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # Unbounded direction cannot occur in phase one (objective >= 0).
            break
        pivot = tableau[leave][entering]
        tableau[leave] = [v / pivot for v in tableau[leave]]
        for i in range(m):
            if i != leave and tableau[i][entering] != 0:
                factor = tableau[i][entering]
                tableau[i] = [x - factor * y for x, y in zip(tableau[i], tableau[leave])]
        if cost[entering] != 0:
            factor = cost[entering]
            cost = [x - factor * y for x, y in zip(cost, tableau[leave])]
        basis[leave] = entering
    if cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = tableau[i][width]
    return x
