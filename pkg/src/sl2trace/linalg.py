"""Exact linear algebra over prime fields."""

from __future__ import annotations

from typing import Sequence


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank of an integer matrix reduced mod ``p`` (Gaussian elimination)."""
    work = [[x % p for x in row] for row in rows]
    if not work:
        return 0
    n_cols = len(work[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = pow(work[rank][col], -1, p)
        prow = [x * inv % p for x in work[rank]]
        work[rank] = prow
        for r in range(len(work)):
            if r != rank and work[r][col]:
                f = work[r][col]
                work[r] = [(x - f * y) % p for x, y in zip(work[r], prow)]
        rank += 1
        if rank == len(work):
            break
    return rank


def det3(m: Sequence[Sequence]) -> object:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
