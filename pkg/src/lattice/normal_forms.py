"""
DGKIT NORMAL FORMS

Smith normal form with transforms, and row-style Hermite reduction used to
store sublattices canonically.

Pivot rule (deterministic for golden tests): the nonzero entry of minimal
absolute value, ties broken by (row, col) order.
"""

from __future__ import annotations

import logging
from typing import Sequence

from src.lattice.intmatrix import IntMatrix

logger = logging.getLogger(__name__)


# ═══════════════════════════════════════════════════════════════════════════
# SMITH NORMAL FORM
# ═══════════════════════════════════════════════════════════════════════════

class _Workspace:
    """Mutable A together with U (row ops) and V (column ops), D = U·M·V."""

    def __init__(self, m: IntMatrix):
        self.m, self.n = m.rows, m.cols
        self.a = m.to_rows()
        self.u = IntMatrix.identity(self.m).to_rows()
        self.v = IntMatrix.identity(self.n).to_rows()

    def swap_rows(self, i: int, j: int) -> None:
        if i != j:
            self.a[i], self.a[j] = self.a[j], self.a[i]
            self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i != j:
            for row in self.a:
                row[i], row[j] = row[j], row[i]
            for row in self.v:
                row[i], row[j] = row[j], row[i]

    def add_row(self, target: int, source: int, q: int) -> None:
        """row[target] += q * row[source]"""
        if q:
            for k in range(self.n):
                self.a[target][k] += q * self.a[source][k]
            for k in range(self.m):
                self.u[target][k] += q * self.u[source][k]

    def add_col(self, target: int, source: int, q: int) -> None:
        """col[target] += q * col[source]"""
        if q:
            for row in self.a:
                row[target] += q * row[source]
            for row in self.v:
                row[target] += q * row[source]

    def negate_row(self, i: int) -> None:
        self.a[i] = [-x for x in self.a[i]]
        self.u[i] = [-x for x in self.u[i]]

    def min_pivot(self, t: int) -> tuple[int, int] | None:
        best = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                x = self.a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        return None if best is None else (best[1], best[2])


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """
    Smith normal form with unimodular transforms.

    Returns:
        (U, D, V) with D = U·M·V, U and V unimodular, D diagonal with
        nonnegative entries d1 | d2 | ... (zeros last).
    """
    w = _Workspace(m)
    t = 0
    while t < min(w.m, w.n):
        pivot = w.min_pivot(t)
        if pivot is None:
            break
        w.swap_rows(t, pivot[0])
        w.swap_cols(t, pivot[1])

        while True:
            p = w.a[t][t]
            dirty = False
            for i in range(t + 1, w.m):
                if w.a[i][t]:
                    w.add_row(i, t, -(w.a[i][t] // p))
                    dirty = dirty or w.a[i][t] != 0
            for j in range(t + 1, w.n):
                if w.a[t][j]:
                    w.add_col(j, t, -(w.a[t][j] // p))
                    dirty = dirty or w.a[t][j] != 0
            if dirty:
                # a remainder smaller than the pivot survived; restart from it
                pivot = w.min_pivot(t)
                w.swap_rows(t, pivot[0])
                w.swap_cols(t, pivot[1])
                continue
            # row and column cleared; enforce divisibility of the remainder
            offender = next(
                (i for i in range(t + 1, w.m) for j in range(t + 1, w.n) if w.a[i][j] % p),
                None,
            )
            if offender is None:
                break
            w.add_row(t, offender, 1)

        if w.a[t][t] < 0:
            w.negate_row(t)
        t += 1

    u = IntMatrix.from_rows(w.u, cols=w.m)
    d = IntMatrix.from_rows(w.a, cols=w.n)
    v = IntMatrix.from_rows(w.v, cols=w.n)
    logger.debug(f"SNF of {m.rows}x{m.cols}: diagonal {[d[i, i] for i in range(min(m.rows, m.cols))]}")
    return u, d, v


def invariant_factors(m: IntMatrix) -> list[int]:
    """Diagonal of the Smith normal form."""
    _, d, _ = smith_normal_form(m)
    return [d[i, i] for i in range(min(d.rows, d.cols))]


# ═══════════════════════════════════════════════════════════════════════════
# HERMITE REDUCTION
# ═══════════════════════════════════════════════════════════════════════════

def hermite_rows(vectors: Sequence[Sequence[int]], length: int) -> list[tuple[int, ...]]:
    """
    Row-style Hermite normal form of the lattice spanned by vectors.

    Output rows are in echelon form with strictly increasing pivot columns,
    positive pivots, and entries above each pivot reduced into [0, pivot).
    Zero rows are dropped, so the result is a basis and is unique for the
    lattice.
    """
    rows = [list(v) for v in vectors if any(v)]
    r = 0
    for col in range(length):
        if r >= len(rows):
            break
        while True:
            nonzero = [i for i in range(r, len(rows)) if rows[i][col]]
            if not nonzero:
                break
            piv = min(nonzero, key=lambda i: (abs(rows[i][col]), i))
            rows[r], rows[piv] = rows[piv], rows[r]
            p = rows[r][col]
            for i in range(r + 1, len(rows)):
                q = rows[i][col] // p
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
            if all(rows[i][col] == 0 for i in range(r + 1, len(rows))):
                break
        if rows[r][col] == 0:
            continue
        if rows[r][col] < 0:
            rows[r] = [-x for x in rows[r]]
        p = rows[r][col]
        for i in range(r):
            q = rows[i][col] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return [tuple(row) for row in rows[:r]]
