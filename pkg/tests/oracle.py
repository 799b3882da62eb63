"""Brute-force reference computations, independent of the production paths.

Rank over Q by plain Gaussian elimination on Fractions; invariant factors by
a classic reduce-and-recurse loop that tracks no transform matrices and
shares no code with the package.  Homology ranks and torsion follow from
boundary matrices alone: betti_n = dim C_n - rank d_n - rank d_{n+1}, and
the torsion of H_n is the list of invariant factors of d_{n+1} exceeding 1.
"""

from __future__ import annotations

from fractions import Fraction


def rational_rank(rows):
    """Rank of a matrix (list of row lists) by Gaussian elimination over Q."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    rank = 0
    for j in range(len(m[0])):
        pivot_row = None
        for i in range(rank, len(m)):
            if m[i][j] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pv = m[rank][j]
        for i in range(rank + 1, len(m)):
            if m[i][j] != 0:
                f = m[i][j] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def invariant_factors(rows):
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    m = [list(row) for row in rows if any(row)]
    factors = []
    while m and m[0]:
        live = [j for j in range(len(m[0])) if any(row[j] for row in m)]
        m = [[row[j] for j in live] for row in m if any(row)]
        if not m or not m[0]:
            break
        while True:
            bi, bj = min(
                (
                    (i, j)
                    for i, row in enumerate(m)
                    for j, x in enumerate(row)
                    if x != 0
                ),
                key=lambda ij: abs(m[ij[0]][ij[1]]),
            )
            if bi != 0:
                m[0], m[bi] = m[bi], m[0]
            if bj != 0:
                for row in m:
                    row[0], row[bj] = row[bj], row[0]
            d = m[0][0]
            dirty = False
            for i in range(1, len(m)):
                if m[i][0] != 0:
                    q = m[i][0] // d
                    if q:
                        m[i] = [a - q * b for a, b in zip(m[i], m[0])]
                    if m[i][0] != 0:
                        dirty = True
            for j in range(1, len(m[0])):
                if m[0][j] != 0:
                    q = m[0][j] // d
                    if q:
                        for row in m:
                            row[j] -= q * row[0]
                    if m[0][j] != 0:
                        dirty = True
            if dirty:
                continue
            d = m[0][0]
            culprit = None
            for i in range(1, len(m)):
                if any(x % d for x in m[i]):
                    culprit = i
                    break
            if culprit is None:
                break
            m[0] = [a + b for a, b in zip(m[0], m[culprit])]
        factors.append(abs(m[0][0]))
        m = [row[1:] for row in m[1:]]
    return factors


def homology_rank_and_torsion(boundary_out_rows, boundary_in_rows, chain_dim):
    """(betti, torsion list) of ker(out)/im(in) from raw boundary matrices."""
    betti = chain_dim - rational_rank(boundary_out_rows) - rational_rank(boundary_in_rows)
    torsion = [d for d in invariant_factors(boundary_in_rows) if d > 1]
    return betti, torsion
