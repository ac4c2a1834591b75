"""Exact rank by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction

from .scalars import MultiPoly


class UnsupportedMode(TypeError):
    pass


def _inv(x):
    if hasattr(x, "inverse"):
        return x.inverse()
    return Fraction(1) / x


def bareiss_rank(rows) -> int:
    """Rank of a matrix over a field, given as a list of rows.

    Zero rows and columns are stripped first; pivots are the first nonzero
    entry found in the current column.
    """
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    for r in rows:
        for x in r:
            if isinstance(x, MultiPoly):
                raise UnsupportedMode("rank over the polynomial ring is not supported; specialize first")
    ncols = len(rows[0])
    live = [j for j in range(ncols) if any(r[j] for r in rows)]
    M = [[r[j] for j in live] for r in rows]
    nrows, ncols = len(M), len(live)
    prev_inv = None
    rank = 0
    for c in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if M[i][c]), None)
        if piv is None:
            continue
        if piv != rank:
            M[piv], M[rank] = M[rank], M[piv]
        top = M[rank]
        p = top[c]
        for i in range(rank + 1, nrows):
            row = M[i]
            m = row[c]
            if m:
                for j in range(c + 1, ncols):
                    v = row[j] * p - m * top[j]
                    row[j] = v * prev_inv if prev_inv is not None else v
            else:
                for j in range(c + 1, ncols):
                    if row[j]:
                        v = row[j] * p
                        row[j] = v * prev_inv if prev_inv is not None else v
            row[c] = m - m
        prev_inv = _inv(p)
        rank += 1
    return rank
