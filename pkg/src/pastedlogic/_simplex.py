"""Exact phase-one simplex over the rationals.

Decides feasibility of  A x = b, x >= 0  with Fraction arithmetic, which
is all that convex-hull membership needs: the columns of A are candidate
vertices (plus a normalisation row) and x is the mixture.  Bland's rule
makes termination unconditional, and infeasibility comes with a Farkas
certificate read off the optimal dual of the artificial objective:
a vector y with  y . A_j <= 0  for every column j  and  y . b > 0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = ["feasible_nonnegative"]

ZERO = Fraction(0)
ONE = Fraction(1)


def feasible_nonnegative(
    columns: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> tuple[dict[int, Fraction] | None, list[Fraction] | None]:
    """Solve ``sum_j x_j * columns[j] = rhs`` with ``x >= 0`` exactly.

    Returns ``(x, None)`` on success, with ``x`` a sparse dict of the
    nonzero coordinates, or ``(None, y)`` with a Farkas certificate of
    infeasibility.  Both outcomes are verified internally before being
    returned.
    """
    m = len(rhs)
    n = len(columns)
    for col in columns:
        if len(col) != m:
            raise ValueError("column length does not match rhs")

    # Flip rows with negative right-hand side so artificials start feasible.
    sign = [ONE if rhs[i] >= 0 else -ONE for i in range(m)]
    width = n + m + 1  # columns, artificials, rhs
    tableau: list[list[Fraction]] = []
    for i in range(m):
        row = [sign[i] * Fraction(columns[j][i]) for j in range(n)]
        row.extend(ONE if k == i else ZERO for k in range(m))
        row.append(sign[i] * Fraction(rhs[i]))
        tableau.append(row)
    basis = [n + i for i in range(m)]

    # Reduced costs for minimising the sum of artificials.
    obj = [ZERO] * width
    for j in range(n + m):
        cost = ONE if j >= n else ZERO
        obj[j] = cost - sum(tableau[i][j] for i in range(m))
    obj[-1] = -sum(tableau[i][-1] for i in range(m))

    while True:
        entering = None
        for j in range(n + m):  # Bland: lowest eligible index enters
            if obj[j] < 0:
                entering = j
                break
        if entering is None:
            break
        leaving = None
        best: Fraction | None = None
        for i in range(m):
            coeff = tableau[i][entering]
            if coeff > 0:
                ratio = tableau[i][-1] / coeff
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[leaving])
                ):
                    best = ratio
                    leaving = i
        if leaving is None:
            raise RuntimeError("phase-one objective unbounded; invalid input")
        _pivot(tableau, obj, basis, leaving, entering)

    optimum = -obj[-1]
    if optimum == 0:
        solution: dict[int, Fraction] = {}
        for i in range(m):
            if basis[i] < n and tableau[i][-1] != 0:
                solution[basis[i]] = tableau[i][-1]
        _verify_solution(columns, rhs, solution)
        return solution, None

    # Dual of the artificial objective: y_i = 1 - reduced cost of slack i,
    # mapped back through the row flips.
    y = [sign[i] * (ONE - obj[n + i]) for i in range(m)]
    _verify_certificate(columns, rhs, y)
    return None, y


def _pivot(
    tableau: list[list[Fraction]],
    obj: list[Fraction],
    basis: list[int],
    row: int,
    col: int,
) -> None:
    pivot_row = tableau[row]
    inv = ONE / pivot_row[col]
    tableau[row] = [v * inv for v in pivot_row]
    pivot_row = tableau[row]
    for i, other in enumerate(tableau):
        if i != row and other[col] != 0:
            factor = other[col]
            tableau[i] = [v - factor * p for v, p in zip(other, pivot_row)]
    if obj[col] != 0:
        factor = obj[col]
        obj[:] = [v - factor * p for v, p in zip(obj, pivot_row)]
    basis[row] = col


def _verify_solution(
    columns: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
    solution: dict[int, Fraction],
) -> None:
    m = len(rhs)
    total = [ZERO] * m
    for j, coeff in solution.items():
        if coeff < 0:
            raise RuntimeError("simplex returned a negative coefficient")
        for i in range(m):
            total[i] += coeff * columns[j][i]
    if any(total[i] != rhs[i] for i in range(m)):
        raise RuntimeError("simplex solution does not reproduce the target")


def _verify_certificate(
    columns: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
    y: Sequence[Fraction],
) -> None:
    if sum(yi * bi for yi, bi in zip(y, rhs)) <= 0:
        raise RuntimeError("Farkas certificate does not separate the target")
    for col in columns:
        if sum(yi * ci for yi, ci in zip(y, col)) > 0:
            raise RuntimeError("Farkas certificate fails on a column")
