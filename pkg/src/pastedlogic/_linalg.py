"""Dense exact linear algebra over the rationals.

Two small routines back the constrained least-squares projection:
Gaussian elimination with partial pivoting for square systems, and a
rank-revealing sweep that keeps a maximal independent subset of
constraint rows while checking that the discarded rows are consistent.
Fractions make both exact; partial pivoting (largest remaining entry in
the column) is kept for uniformity with the floating convention even
though exact arithmetic only needs a nonzero pivot.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import SingularKKTError

__all__ = ["solve_exact", "independent_rows"]


def solve_exact(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve a square rational system by elimination with partial
    pivoting; raises ``SingularKKTError`` on a singular matrix."""
    n = len(rhs)
    a = [list(map(Fraction, row)) + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    if any(len(row) != n + 1 for row in a):
        raise ValueError("matrix is not square or rhs length mismatches")
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[pivot][col] == 0:
            raise SingularKKTError("singular system in exact solve")
        a[col], a[pivot] = a[pivot], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * p for v, p in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def independent_rows(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[int]:
    """Indices of a maximal linearly independent subset of rows.

    A row that eliminates to zero must take its right-hand side to zero
    with it; otherwise the constraint set is inconsistent and
    ``SingularKKTError`` is raised.
    """
    work = [list(map(Fraction, row)) + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    n_cols = len(rows[0]) if rows else 0
    kept: list[int] = []
    pivots: list[tuple[int, list[Fraction]]] = []
    for i, row in enumerate(work):
        for col, pivot_row in pivots:
            if row[col] != 0:
                f = row[col]
                row[:] = [v - f * p for v, p in zip(row, pivot_row)]
        lead = next((c for c in range(n_cols) if row[c] != 0), None)
        if lead is None:
            if row[-1] != 0:
                raise SingularKKTError(
                    "inconsistent constraints: a dependent context sum "
                    "disagrees with the others"
                )
            continue
        inv = Fraction(1) / row[lead]
        row[:] = [v * inv for v in row]
        pivots.append((lead, row))
        kept.append(i)
    return kept
