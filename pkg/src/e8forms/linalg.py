"""Exact linear algebra over the rationals.

Matrices are lists of lists of Fractions (or ints, which mix freely).
Everything here is small and dense; no attempt is made to be clever.
"""
from __future__ import annotations

from fractions import Fraction

Matrix = list  # list[list[Fraction | int]]


def mat(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(n: int, m: int) -> Matrix:
    return [[Fraction(0)] * m for _ in range(n)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    m = len(b[0])
    out = [[Fraction(0)] * m for _ in range(len(a))]
    for i, row in enumerate(a):
        orow = out[i]
        for t, v in enumerate(row):
            if v:
                brow = b[t]
                for j in range(m):
                    w = brow[j]
                    if w:
                        orow[j] += v * w
    return out


def mat_vec(a: Matrix, v) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    if len(a) != len(b):
        return False
    return all(len(r) == len(s) and all(x == y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    return [[c * x for x in row] for row in a]


def mat_inv(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises ValueError on a singular matrix."""
    n = len(a)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        work[col], work[pivot] = work[pivot], work[col]
        pv = work[col][col]
        work[col] = [x / pv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def solve(a: Matrix, b: list) -> list:
    """Solve a x = b for square invertible a."""
    inv = mat_inv(a)
    return mat_vec(inv, b)


def kernel_basis(a: Matrix) -> list:
    """Basis of the right kernel of a, via reduced row echelon form."""
    if not a:
        return []
    rows = [[Fraction(x) for x in row] for row in a]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def diagonalize_symmetric(g: Matrix) -> list:
    """Diagonal of a congruent diagonal matrix (symmetric Gram-Schmidt).

    Returns the diagonal entries q(e_i) for some basis change; zero entries
    correspond to the radical.  Input must be symmetric.
    """
    n = len(g)
    a = [[Fraction(x) for x in row] for row in g]
    diag = []
    for i in range(n):
        if a[i][i] == 0:
            j = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if j is not None:
                # Swap basis vectors i and j.
                a[i], a[j] = a[j], a[i]
                for row in a:
                    row[i], row[j] = row[j], row[i]
            else:
                j = next((j for j in range(i + 1, n) if a[i][j] != 0), None)
                if j is None:
                    diag.append(Fraction(0))
                    continue
                # All remaining diagonal entries vanish: e_i += e_j makes
                # q(e_i) = 2 b(e_i, e_j) != 0.
                for k in range(n):
                    a[i][k] += a[j][k]
                for k in range(n):
                    a[k][i] += a[k][j]
        d = a[i][i]
        # Schur complement on the trailing block clears row and column i.
        touched = [j for j in range(i + 1, n) if a[j][i] != 0]
        for j in touched:
            f = a[j][i] / d
            row_i = a[i]
            row_j = a[j]
            for k in range(i + 1, n):
                if row_i[k] != 0:
                    row_j[k] -= f * row_i[k]
        for j in touched:
            a[j][i] = Fraction(0)
            a[i][j] = Fraction(0)
        diag.append(d)
    return diag
