# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled backtracking kernel for matrix-preserving bijections.

Mirror of trimat._search_py.search_bijections; see there for the contract.
The search state lives in flat C arrays and the recursion is unrolled into
an explicit stack so the hot loop never touches Python objects.
"""

from libc.stdlib cimport free, malloc

__all__ = ["search_bijections"]


def search_bijections(m1, m2, allowed, limit=None):
    cdef int n = len(m1)
    if n != len(m2):
        return []
    cdef long long cap = -1 if limit is None else <long long> limit
    if cap == 0:
        return []
    if n == 0:
        return [tuple()]

    cdef signed char *a = <signed char *> malloc(n * n * sizeof(signed char))
    cdef signed char *b = <signed char *> malloc(n * n * sizeof(signed char))
    cdef signed char *ok = <signed char *> malloc(n * n * sizeof(signed char))
    cdef int *image = <int *> malloc(n * sizeof(int))
    cdef signed char *used = <signed char *> malloc(n * sizeof(signed char))
    cdef int *cursor = <int *> malloc(n * sizeof(int))
    if a == NULL or b == NULL or ok == NULL or image == NULL or used == NULL or cursor == NULL:
        free(a); free(b); free(ok); free(image); free(used); free(cursor)
        raise MemoryError()

    cdef int i, j, depth
    cdef bint consistent
    out = []
    try:
        for i in range(n):
            row1 = m1[i]
            row2 = m2[i]
            rowok = allowed[i]
            for j in range(n):
                a[i * n + j] = <signed char> row1[j]
                b[i * n + j] = <signed char> row2[j]
                ok[i * n + j] = 1 if rowok[j] else 0
            used[i] = 0
            cursor[i] = 0

        depth = 0
        while depth >= 0:
            if depth == n:
                out.append(tuple([image[i] for i in range(n)]))
                if cap > 0 and <long long> len(out) >= cap:
                    break
                depth -= 1
                used[image[depth]] = 0
                continue
            j = cursor[depth]
            if j >= n:
                cursor[depth] = 0
                depth -= 1
                if depth >= 0:
                    used[image[depth]] = 0
                continue
            cursor[depth] = j + 1
            if used[j] or not ok[depth * n + j]:
                continue
            consistent = True
            for i in range(depth):
                if b[j * n + image[i]] != a[depth * n + i]:
                    consistent = False
                    break
            if consistent:
                used[j] = 1
                image[depth] = j
                depth += 1
    finally:
        free(a); free(b); free(ok); free(image); free(used); free(cursor)
    return out
