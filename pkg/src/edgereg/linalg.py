"""Exact matrix rank over the rationals and over prime fields.

Matrices are plain lists of integer rows.  Python integers never overflow,
so the fraction-free path is exact for any input.
"""

from __future__ import annotations

from typing import Sequence

IntMatrix = Sequence[Sequence[int]]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _shape(M: IntMatrix) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    for r in M:
        if len(r) != cols:
            raise ValueError("ragged matrix")
    return rows, cols


def rank_rational(M: IntMatrix) -> int:
    """Rank over Q by Bareiss fraction-free elimination."""
    rows, cols = _shape(M)
    if rows == 0 or cols == 0:
        return 0
    A = [[int(x) for x in r] for r in M if any(r)]
    rows = len(A)
    rank = 0
    prev = 1
    for c in range(cols):
        if rank == rows:
            break
        pivot = next((r for r in range(rank, rows) if A[r][c]), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        p = A[rank][c]
        prow = A[rank]
        for r in range(rank + 1, rows):
            row = A[r]
            f = row[c]
            if f == 0:
                # Bareiss step with f = 0 reduces to a scalar rescale.
                for k in range(c + 1, cols):
                    if row[k]:
                        row[k] = row[k] * p // prev
                row[c] = 0
                continue
            for k in range(c + 1, cols):
                row[k] = (row[k] * p - prow[k] * f) // prev
            row[c] = 0
        prev = p
        rank += 1
    return rank


def rank_mod_p(M: IntMatrix, p: int) -> int:
    """Rank of M with entries reduced modulo the prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    rows, cols = _shape(M)
    if rows == 0 or cols == 0:
        return 0
    A = [[x % p for x in r] for r in M]
    A = [r for r in A if any(r)]
    rows = len(A)
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        pivot = next((r for r in range(rank, rows) if A[r][c]), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        inv = pow(A[rank][c], -1, p)
        prow = [(x * inv) % p for x in A[rank]]
        A[rank] = prow
        for r in range(rank + 1, rows):
            f = A[r][c]
            if f:
                row = A[r]
                for k in range(c, cols):
                    if prow[k]:
                        row[k] = (row[k] - f * prow[k]) % p
        rank += 1
    return rank


def rank(M: IntMatrix, field: int = 0) -> int:
    """Rank over the field with the given characteristic (0 = rationals)."""
    return rank_rational(M) if field == 0 else rank_mod_p(M, field)
