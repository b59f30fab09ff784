"""Pure-Python backtracking kernel for matrix-preserving bijections.

Reference implementation of the search also provided by the compiled
``trimat._search_c`` extension.  Both must produce byte-identical output:
all index bijections g with m2[g[i]][g[j]] == m1[i][j] for every i, j,
emitted in lexicographic order of the image sequence.

Rows are assigned in index order and candidate images are tried in
ascending order, which yields the lexicographic output order directly.
The caller supplies the row-compatibility table (same entry multisets);
the kernel itself only enforces pairwise consistency with already placed
rows.
"""

from __future__ import annotations

__all__ = ["search_bijections"]


def search_bijections(
    m1: tuple[tuple[int, ...], ...],
    m2: tuple[tuple[int, ...], ...],
    allowed: tuple[tuple[bool, ...], ...],
    limit: int | None = None,
) -> list[tuple[int, ...]]:
    n = len(m1)
    if n != len(m2):
        return []
    if limit is not None and limit <= 0:
        return []
    out: list[tuple[int, ...]] = []
    image = [0] * n
    used = [False] * n

    def place(depth: int) -> bool:
        # Returns True when the limit has been reached.
        if depth == n:
            out.append(tuple(image))
            return limit is not None and len(out) >= limit
        row = m1[depth]
        ok_row = allowed[depth]
        for j in range(n):
            if used[j] or not ok_row[j]:
                continue
            col_j = m2[j]
            for i in range(depth):
                if col_j[image[i]] != row[i]:
                    break
            else:
                used[j] = True
                image[depth] = j
                if place(depth + 1):
                    return True
                used[j] = False
        return False

    place(0)
    return out
