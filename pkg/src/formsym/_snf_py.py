"""Pure-Python Smith reduction kernel.

Arbitrary-precision reference implementation; the compiled kernel in
``_snf_core`` mirrors this algorithm over int64 with overflow guards and is
preferred when the input fits. Both operate in place on a list-of-lists
matrix and return the four change-of-basis witnesses.

Pivoting picks the nonzero entry of minimal absolute value in the trailing
submatrix, then alternates row/column gcd reduction until the pivot divides
everything it must; this keeps intermediate growth tame at desk scale.
"""

from __future__ import annotations


def _identity(n: int) -> list[list[int]]:
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        out[i][i] = 1
    return out


def reduce_in_place(a: list[list[int]], m: int, n: int):
    """Diagonalize ``a`` (m x n) in place.

    Returns (L, Linv, R, Rinv) with L @ A0 @ R == a (diagonal, nonnegative,
    each entry dividing the next) and L @ Linv == I, R @ Rinv == I.
    """
    L = _identity(m)
    Linv = _identity(m)
    R = _identity(n)
    Rinv = _identity(n)

    def row_addmul(i, j, c):
        # row_i += c * row_j ; inverse witness takes the mirrored column op
        ai, aj = a[i], a[j]
        for col in range(n):
            ai[col] += c * aj[col]
        li, lj = L[i], L[j]
        for col in range(m):
            li[col] += c * lj[col]
        for r in range(m):
            Linv[r][j] -= c * Linv[r][i]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        L[i], L[j] = L[j], L[i]
        for r in range(m):
            Linv[r][i], Linv[r][j] = Linv[r][j], Linv[r][i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        L[i] = [-x for x in L[i]]
        for r in range(m):
            Linv[r][i] = -Linv[r][i]

    def col_addmul(j, i, c):
        # col_j += c * col_i
        for r in range(m):
            a[r][j] += c * a[r][i]
        for r in range(n):
            R[r][j] += c * R[r][i]
        ri, rj = Rinv[i], Rinv[j]
        for col in range(n):
            ri[col] -= c * rj[col]

    def col_swap(i, j):
        for r in range(m):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(n):
            R[r][i], R[r][j] = R[r][j], R[r][i]
        Rinv[i], Rinv[j] = Rinv[j], Rinv[i]

    t = 0
    limit = min(m, n)
    while t < limit:
        # minimal |entry| pivot in the trailing submatrix
        best_abs = 0
        bi = bj = -1
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                v = row[j]
                if v:
                    va = -v if v < 0 else v
                    if bi < 0 or va < best_abs:
                        best_abs, bi, bj = va, i, j
                        if va == 1:
                            break
            if best_abs == 1:
                break
        if bi < 0:
            break
        if bi != t:
            row_swap(t, bi)
        if bj != t:
            col_swap(t, bj)

        while True:
            # clear column t below the pivot
            i = t + 1
            while i < m:
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        row_addmul(i, t, -q)
                    if a[i][t]:
                        row_swap(t, i)
                        i = t + 1
                        continue
                i += 1
            # clear row t to the right of the pivot
            j = t + 1
            column_dirty = False
            while j < n:
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        col_addmul(j, t, -q)
                    if a[t][j]:
                        col_swap(t, j)
                        column_dirty = True
                        j = t + 1
                        continue
                j += 1
            if column_dirty or any(a[i][t] for i in range(t + 1, m)):
                continue
            # pivot isolated: make it divide the rest of the submatrix
            pivot = a[t][t]
            offender = -1
            for i in range(t + 1, m):
                row = a[i]
                for j in range(t + 1, n):
                    if row[j] % pivot:
                        offender = i
                        break
                if offender >= 0:
                    break
            if offender < 0:
                break
            row_addmul(t, offender, 1)
        if a[t][t] < 0:
            row_negate(t)
        t += 1

    return L, Linv, R, Rinv
