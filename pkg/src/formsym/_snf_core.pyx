# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Smith reduction kernel over int64.

Mirrors ``_snf_py.reduce_in_place``. Every product, sum, and negation is
checked for int64 overflow; on overflow an OverflowError propagates and the
caller reruns the pure-Python kernel, so exactness is never at risk.
"""


cdef extern from *:
    bint __builtin_mul_overflow(long long, long long, long long*)
    bint __builtin_add_overflow(long long, long long, long long*)

cdef long long INT64_MIN = <long long>(-9223372036854775807LL - 1)


cdef inline long long _fma(long long acc, long long c, long long x) except? -9223372036854775807:
    # acc + c * x with overflow checks
    cdef long long p, r
    if __builtin_mul_overflow(c, x, &p):
        raise OverflowError
    if __builtin_add_overflow(acc, p, &r):
        raise OverflowError
    return r


cdef inline long long _neg(long long x) except? -9223372036854775807:
    if x == INT64_MIN:
        raise OverflowError
    return -x


cdef inline long long _floordiv(long long x, long long p):
    # Python floor-division semantics on C int64 (cdivision is on)
    cdef long long q = x / p
    if (x % p != 0) and ((x < 0) != (p < 0)):
        q -= 1
    return q


def reduce_in_place(long long[:, ::1] a,
                    long long[:, ::1] L, long long[:, ::1] Li,
                    long long[:, ::1] R, long long[:, ::1] Ri):
    """Diagonalize ``a`` in place, accumulating witnesses L, Li, R, Ri.

    The witness buffers must come in as identity matrices.
    """
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t t = 0, i, j, r, col, bi, bj, offender
    cdef Py_ssize_t limit = m if m < n else n
    cdef long long v, va, best_abs, q, pivot
    cdef bint column_dirty, found

    while t < limit:
        best_abs = 0
        bi = -1
        bj = -1
        for i in range(t, m):
            for j in range(t, n):
                v = a[i, j]
                if v != 0:
                    va = -v if v > INT64_MIN and v < 0 else v
                    if v == INT64_MIN:
                        raise OverflowError
                    if bi < 0 or va < best_abs:
                        best_abs = va
                        bi = i
                        bj = j
                        if va == 1:
                            break
            if best_abs == 1 and bi >= 0:
                break
        if bi < 0:
            break
        if bi != t:
            _row_swap(a, L, Li, m, n, t, bi)
        if bj != t:
            _col_swap(a, R, Ri, m, n, t, bj)

        while True:
            i = t + 1
            while i < m:
                if a[i, t] != 0:
                    q = _floordiv(a[i, t], a[t, t])
                    if q != 0:
                        _row_addmul(a, L, Li, m, n, i, t, _neg(q))
                    if a[i, t] != 0:
                        _row_swap(a, L, Li, m, n, t, i)
                        i = t + 1
                        continue
                i += 1
            j = t + 1
            column_dirty = False
            while j < n:
                if a[t, j] != 0:
                    q = _floordiv(a[t, j], a[t, t])
                    if q != 0:
                        _col_addmul(a, R, Ri, m, n, j, t, _neg(q))
                    if a[t, j] != 0:
                        _col_swap(a, R, Ri, m, n, t, j)
                        column_dirty = True
                        j = t + 1
                        continue
                j += 1
            if column_dirty:
                continue
            found = False
            for i in range(t + 1, m):
                if a[i, t] != 0:
                    found = True
                    break
            if found:
                continue
            pivot = a[t, t]
            offender = -1
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i, j] % pivot != 0:
                        offender = i
                        break
                if offender >= 0:
                    break
            if offender < 0:
                break
            _row_addmul(a, L, Li, m, n, t, offender, 1)
        if a[t, t] < 0:
            for col in range(n):
                a[t, col] = _neg(a[t, col])
            for col in range(m):
                L[t, col] = _neg(L[t, col])
            for r in range(m):
                Li[r, t] = _neg(Li[r, t])
        t += 1


cdef void _row_swap(long long[:, ::1] a, long long[:, ::1] L, long long[:, ::1] Li,
                    Py_ssize_t m, Py_ssize_t n, Py_ssize_t i, Py_ssize_t j) noexcept:
    cdef Py_ssize_t col, r
    cdef long long tmp
    for col in range(n):
        tmp = a[i, col]; a[i, col] = a[j, col]; a[j, col] = tmp
    for col in range(m):
        tmp = L[i, col]; L[i, col] = L[j, col]; L[j, col] = tmp
    for r in range(m):
        tmp = Li[r, i]; Li[r, i] = Li[r, j]; Li[r, j] = tmp


cdef void _col_swap(long long[:, ::1] a, long long[:, ::1] R, long long[:, ::1] Ri,
                    Py_ssize_t m, Py_ssize_t n, Py_ssize_t i, Py_ssize_t j) noexcept:
    cdef Py_ssize_t r
    cdef long long tmp
    for r in range(m):
        tmp = a[r, i]; a[r, i] = a[r, j]; a[r, j] = tmp
    for r in range(n):
        tmp = R[r, i]; R[r, i] = R[r, j]; R[r, j] = tmp
    for r in range(n):
        tmp = Ri[i, r]; Ri[i, r] = Ri[j, r]; Ri[j, r] = tmp


cdef int _row_addmul(long long[:, ::1] a, long long[:, ::1] L, long long[:, ::1] Li,
                     Py_ssize_t m, Py_ssize_t n,
                     Py_ssize_t i, Py_ssize_t j, long long c) except -1:
    # row_i += c * row_j ; inverse witness takes the mirrored column op
    cdef Py_ssize_t col, r
    cdef long long nc = _neg(c)
    for col in range(n):
        a[i, col] = _fma(a[i, col], c, a[j, col])
    for col in range(m):
        L[i, col] = _fma(L[i, col], c, L[j, col])
    for r in range(m):
        Li[r, j] = _fma(Li[r, j], nc, Li[r, i])
    return 0


cdef int _col_addmul(long long[:, ::1] a, long long[:, ::1] R, long long[:, ::1] Ri,
                     Py_ssize_t m, Py_ssize_t n,
                     Py_ssize_t j, Py_ssize_t i, long long c) except -1:
    # col_j += c * col_i
    cdef Py_ssize_t r, col
    cdef long long nc = _neg(c)
    for r in range(m):
        a[r, j] = _fma(a[r, j], c, a[r, i])
    for r in range(n):
        R[r, j] = _fma(R[r, j], c, R[r, i])
    for col in range(n):
        Ri[i, col] = _fma(Ri[i, col], nc, Ri[j, col])
    return 0
