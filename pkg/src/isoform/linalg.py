"""Exact dense linear algebra over a field.

Entries may be Fractions, ints or Cyclotomic values; the only requirements
are the field operations and truthiness meaning nonzero.  Matrices are
lists of row lists.
"""
from __future__ import annotations

from typing import Any, Sequence

Matrix = list[list[Any]]


def identity(n: int, one=1, zero=0) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in cols:
            acc = None
            for x, y in zip(row, col):
                if x and y:
                    acc = x * y if acc is None else acc + x * y
            out_row.append(acc if acc is not None else row[0] * 0)
        out.append(out_row)
    return out


def matvec(a: Matrix, v: Sequence) -> list:
    out = []
    for row in a:
        acc = v[0] * 0
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def kron(a: Matrix, b: Matrix) -> Matrix:
    zero = a[0][0] * 0
    out = []
    for ra in a:
        for rb in b:
            row = []
            for x in ra:
                if x:
                    row.extend(x * y if y else zero for y in rb)
                else:
                    row.extend(zero for _ in rb)
            out.append(row)
    return out


def transpose(a: Matrix) -> Matrix:
    return [list(r) for r in zip(*a)]


def trace(a: Matrix):
    acc = a[0][0]
    for i in range(1, len(a)):
        acc = acc + a[i][i]
    return acc


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Rows are added one at a time; each new row is reduced against the
    existing pivots and, if nonzero, becomes a new pivot row (normalized,
    and eliminated from the older rows).
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, list] = {}  # pivot column -> row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Sequence) -> list:
        row = list(row)
        for p, prow in self.rows.items():
            c = row[p]
            if c:
                for j in range(self.ncols):
                    if prow[j]:
                        row[j] = row[j] - c * prow[j]
        return row

    def add(self, row: Sequence) -> bool:
        row = self.reduce(row)
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is None:
            return False
        inv = 1 / row[piv]
        row = [x * inv if x else x for x in row]
        for p, prow in self.rows.items():
            c = prow[piv]
            if c:
                for j in range(self.ncols):
                    if row[j]:
                        prow[j] = prow[j] - c * row[j]
        self.rows[piv] = row
        return True

    def contains(self, row: Sequence) -> bool:
        return not any(self.reduce(row))

    def nullspace(self, zero=0, one=1) -> list[list]:
        pivots = self.rows
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        for f in free:
            v = [zero] * self.ncols
            v[f] = one
            for p, prow in pivots.items():
                if prow[f]:
                    v[p] = -prow[f]
            basis.append(v)
        return basis


def rank(rows: Matrix) -> int:
    if not rows:
        return 0
    ech = Echelon(len(rows[0]))
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace(rows: Matrix, ncols: int, zero=0, one=1) -> list[list]:
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r)
    return ech.nullspace(zero, one)


def solve(a: Matrix, b: Sequence, zero=0, one=1):
    """Return one x with a x = b, or None if the system is inconsistent."""
    n = len(a[0])
    ech = Echelon(n + 1)
    for row, rhs in zip(a, b):
        ech.add(list(row) + [rhs])
    if n in ech.rows:
        return None
    x = [zero] * n
    for p, prow in ech.rows.items():
        x[p] = prow[n]
    return x


def det(a: Matrix):
    """Determinant by fraction-style Gaussian elimination (field entries)."""
    n = len(a)
    m = [list(r) for r in a]
    sign = 1
    acc = None
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return m[0][0] * 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        p = m[c][c]
        acc = p if acc is None else acc * p
        inv = 1 / p
        for r in range(c + 1, n):
            f = m[r][c]
            if f:
                f = f * inv
                for j in range(c, n):
                    if m[c][j]:
                        m[r][j] = m[r][j] - f * m[c][j]
    return acc if sign > 0 else -acc
