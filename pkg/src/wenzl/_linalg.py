"""Exact linear algebra over Fraction: just enough for small dense matrices.

Matrices are lists of row lists.  Nothing here is meant to scale; the
exact paths in this package stay at desk-size dimensions.
"""

from __future__ import annotations

from fractions import Fraction


def zeros(m: int, n: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * n for _ in range(m)]


def identity(n: int) -> list[list[Fraction]]:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    c = Fraction(c)
    return [[x * c for x in row] for row in a]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    assert all(len(row) == k for row in a)
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += c * bt[j]
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]


def is_zero(a) -> bool:
    return all(x == 0 for row in a for x in row)


def _eliminate(a):
    """Row-reduce a copy; returns (echelon rows, pivot columns, det factor)."""
    rows = [list(r) for r in a]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    pivots = []
    det_sign = 1
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            det_sign = -det_sign
        pivots.append(c)
        inv = 1 / rows[r][c]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == m:
            break
    return rows, pivots, det_sign


def rank(a) -> int:
    if not a:
        return 0
    return len(_eliminate(a)[1])


def det(a) -> Fraction:
    n = len(a)
    assert all(len(row) == n for row in a), "determinant needs a square matrix"
    if n == 0:
        return Fraction(1)
    rows, pivots, sign = _eliminate(a)
    if len(pivots) < n:
        return Fraction(0)
    out = Fraction(sign)
    for i, c in enumerate(pivots):
        out *= rows[i][c]
    return out


def inverse(a) -> list[list[Fraction]]:
    n = len(a)
    assert all(len(row) == n for row in a), "inverse needs a square matrix"
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    rows, pivots, _ = _eliminate(aug)
    assert pivots == list(range(n)), "matrix is singular"
    return [[rows[i][n + j] / rows[i][i] for j in range(n)] for i in range(n)]


def solve(a, rhs) -> list[Fraction] | None:
    """One solution x of a x = rhs, or None when the system is inconsistent.
    Free variables are set to zero."""
    m = len(a)
    n = len(a[0]) if a else 0
    assert m == len(rhs)
    aug = [list(row) + [Fraction(v)] for row, v in zip(a, rhs)]
    rows, pivots, _ = _eliminate(aug)
    if any(c == n for c in pivots):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = rows[i][n] / rows[i][c]
    return x
