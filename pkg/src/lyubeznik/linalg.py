"""Exact matrix rank over the rationals and over prime fields.

Boundary matrices here are small integer matrices, so rank is computed
by fraction-free Bareiss elimination with arbitrary-precision integers:
no floating point anywhere, no growth surprises (the intermediate
entries are minors, and every division is exact).

``naive_rank`` re-does the job with plain Fraction Gaussian elimination;
it exists purely as a second, dumber route for the Bareiss code to be
checked against.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Sequence


def _dims(rows: Sequence[Sequence[int]]) -> tuple[int, int]:
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix")
    return nrows, ncols


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix, by Bareiss elimination."""
    nrows, ncols = _dims(rows)
    if nrows == 0 or ncols == 0:
        return 0
    m = [list(r) for r in rows]
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(row, nrows) if m[r][col]), None)
        if pivot_row is None:
            continue
        if pivot_row != row:
            m[row], m[pivot_row] = m[pivot_row], m[row]
        pivot = m[row][col]
        for r in range(row + 1, nrows):
            factor = m[r][col]
            mr, mrow = m[r], m[row]
            for c in range(col + 1, ncols):
                # exact by the Bareiss identity: this is a minor of the input
                mr[c] = (pivot * mr[c] - factor * mrow[c]) // prev
            mr[col] = 0
        prev = pivot
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def naive_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by textbook Gaussian elimination on Fractions."""
    nrows, ncols = _dims(rows)
    if nrows == 0 or ncols == 0:
        return 0
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    row = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(row, nrows) if m[r][col]), None)
        if pivot_row is None:
            continue
        m[row], m[pivot_row] = m[pivot_row], m[row]
        pivot = m[row][col]
        for r in range(row + 1, nrows):
            if m[r][col]:
                scale = m[r][col] / pivot
                m[r] = [a - scale * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over the prime field GF(p)."""
    if p < 2 or any(p % d == 0 for d in range(2, isqrt(p) + 1)):
        raise ValueError(f"{p} is not a prime")
    nrows, ncols = _dims(rows)
    if nrows == 0 or ncols == 0:
        return 0
    m = [[x % p for x in r] for r in rows]
    rank = 0
    row = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(row, nrows) if m[r][col]), None)
        if pivot_row is None:
            continue
        m[row], m[pivot_row] = m[pivot_row], m[row]
        inv = pow(m[row][col], -1, p)
        for r in range(row + 1, nrows):
            if m[r][col]:
                scale = m[r][col] * inv % p
                m[r] = [(a - scale * b) % p for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank
