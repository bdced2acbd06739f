"""Exact sparse rank computations over Q and over prime fields.

Matrices arrive as lists of sparse rows ({column: value}).  Over Q the
elimination stays in integers: rows are combined as pivot*row - entry*pivot_row
and re-normalized by their gcd, so no floating point or fractions appear.
"""
from __future__ import annotations

from math import gcd


def _normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def rank_rational(rows: list[dict[int, int]]) -> int:
    """Rank over Q of an integer matrix, by integer-preserving elimination."""
    work = [dict(r) for r in rows if r]
    rank = 0
    while work:
        # favor short rows with a +-1 pivot to avoid coefficient growth
        best = min(
            range(len(work)),
            key=lambda i: (min(abs(v) for v in work[i].values()) != 1, len(work[i])),
        )
        pivot_row = work.pop(best)
        pcol = min(
            (c for c, v in pivot_row.items() if abs(v) == 1),
            default=min(pivot_row, key=lambda c: (abs(pivot_row[c]), c)),
        )
        pval = pivot_row[pcol]
        rank += 1
        nxt = []
        for row in work:
            e = row.get(pcol)
            if e:
                new = {}
                for c, v in row.items():
                    nv = pval * v - e * pivot_row.get(c, 0)
                    if nv:
                        new[c] = nv
                for c, v in pivot_row.items():
                    if c not in row:
                        nv = -e * v
                        if nv:
                            new[c] = nv
                row = _normalize(new)
            if row:
                nxt.append(row)
        work = nxt
    return rank


def rank_mod(rows: list[dict[int, int]], p: int) -> int:
    """Rank over the prime field F_p."""
    work = []
    for r in rows:
        nr = {c: v % p for c, v in r.items() if v % p}
        if nr:
            work.append(nr)
    rank = 0
    while work:
        best = min(range(len(work)), key=lambda i: len(work[i]))
        pivot_row = work.pop(best)
        pcol = min(pivot_row)
        inv = pow(pivot_row[pcol], -1, p)
        pivot_row = {c: (v * inv) % p for c, v in pivot_row.items()}
        rank += 1
        nxt = []
        for row in work:
            e = row.get(pcol)
            if e:
                new = {}
                for c, v in row.items():
                    nv = (v - e * pivot_row.get(c, 0)) % p
                    if nv:
                        new[c] = nv
                for c, v in pivot_row.items():
                    if c not in row:
                        nv = (-e * v) % p
                        if nv:
                            new[c] = nv
                row = new
            if row:
                nxt.append(row)
        work = nxt
    return rank


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_characteristic(char: int) -> int:
    if char == 0:
        return 0
    if not is_prime(char):
        raise ValueError(f"characteristic must be 0 or a prime, got {char}")
    return char


def rank(rows: list[dict[int, int]], char: int) -> int:
    return rank_rational(rows) if char == 0 else rank_mod(rows, char)
