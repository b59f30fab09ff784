"""Cycle intersection patterns of triangles and their realizations.

An n-cycle pattern prescribes, for an indexed sequence of n triangles,
that cyclically consecutive triangles share an edge and every other pair
shares exactly one vertex.  On a closed surface the triangles around any
vertex realize this pattern.  A realization can look like only three
things: a fan of n triangles around a hub vertex (a triangulated disk),
or one of two exceptional band-shaped realizations that exist solely at
n = 5 and n = 6.

``classify_realization`` decides the type structurally.
``enumerate_realizations`` is the independent oracle: it exhaustively
builds every realization at small n (up to relabeling and the dihedral
symmetries of the cycle) so the trichotomy can be checked rather than
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .complexes import Triangle
from .errors import PatternError, TrichotomyError
from .intersection import IntersectionMatrix

__all__ = [
    "CycleClass",
    "CycleRealization",
    "disk",
    "MOEBIUS5",
    "MOEBIUS6",
    "ncycle_matrix",
    "classify_realization",
    "enumerate_realizations",
    "expected_classes",
]


@dataclass(frozen=True, order=True)
class CycleClass:
    """One of the three realization types: Disk(n), Moebius5, Moebius6."""

    kind: str
    n: int

    def __post_init__(self) -> None:
        if self.kind not in ("disk", "moebius5", "moebius6"):
            raise ValueError(f"unknown cycle class kind {self.kind!r}")
        if self.kind == "moebius5" and self.n != 5:
            raise ValueError("Moebius5 only occurs with n=5")
        if self.kind == "moebius6" and self.n != 6:
            raise ValueError("Moebius6 only occurs with n=6")

    def __str__(self) -> str:
        if self.kind == "disk":
            return f"Disk({self.n})"
        return "Moebius5" if self.kind == "moebius5" else "Moebius6"


def disk(n: int) -> CycleClass:
    return CycleClass("disk", n)


MOEBIUS5 = CycleClass("moebius5", 5)
MOEBIUS6 = CycleClass("moebius6", 6)


def expected_classes(n: int) -> set[CycleClass]:
    """The classes the trichotomy admits at cycle length n."""
    classes = {disk(n)}
    if n == 5:
        classes.add(MOEBIUS5)
    if n == 6:
        classes.add(MOEBIUS6)
    return classes


def ncycle_matrix(n: int) -> IntersectionMatrix:
    """The circulant pattern matrix of an n-cycle.

    Entry 1 where indices are cyclically adjacent (including the wraparound
    pair (n-1, 0)), 0 elsewhere off the diagonal.  At n = 3 the wraparound
    makes every off-diagonal entry 1.
    """
    if n < 3:
        raise ValueError(f"an n-cycle needs n >= 3, got {n}")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(2)
            elif (i - j) % n in (1, n - 1):
                row.append(1)
            else:
                row.append(0)
        rows.append(tuple(row))
    return IntersectionMatrix(tuple(rows))


@dataclass(frozen=True)
class CycleRealization:
    """An indexed triangle sequence whose matrix is exactly the n-cycle
    pattern of its length."""

    triangles: tuple[Triangle, ...]

    def __post_init__(self) -> None:
        _check_is_realization(self.triangles)

    @property
    def n(self) -> int:
        return len(self.triangles)


def _check_is_realization(triangles: Sequence[Triangle]) -> None:
    n = len(triangles)
    if n < 3:
        raise PatternError(f"an n-cycle realization needs n >= 3, got {n}")
    target = ncycle_matrix(n)
    for i in range(n):
        si = triangles[i].vertex_set
        for j in range(i + 1, n):
            got = len(si & triangles[j].vertex_set) - 1
            if got != target[i, j]:
                raise PatternError(
                    f"triangles {i} and {j} intersect in dimension {got}, "
                    f"the {n}-cycle pattern requires {target[i, j]}"
                )


# -- the two exceptional templates (integer labels 0..4 / 0..5) --------------

_MOEBIUS5_TEMPLATE = (
    frozenset((0, 2, 1)),
    frozenset((1, 3, 2)),
    frozenset((2, 4, 3)),
    frozenset((3, 0, 4)),
    frozenset((4, 1, 0)),
)

_MOEBIUS6_TEMPLATE = (
    frozenset((0, 1, 2)),
    frozenset((1, 2, 4)),
    frozenset((2, 3, 4)),
    frozenset((3, 0, 4)),
    frozenset((0, 5, 4)),
    frozenset((5, 2, 0)),
)


def _matches_template(
    sets: Sequence[frozenset[str]], template: Sequence[frozenset[int]]
) -> bool:
    """Whether ``sets`` equals the template up to relabeling, under some
    dihedral alignment of the cycle index.

    The label match is a small backtracking search: walk the aligned
    sequence, extend the injective template-to-input label map triangle by
    triangle, and branch only over the unmapped labels of each triangle.
    """
    n = len(sets)

    def try_alignment(order: Sequence[frozenset[str]]) -> bool:
        def extend(k: int, fwd: dict[int, str], taken: set[str]) -> bool:
            if k == n:
                return True
            want = order[k]
            mapped = {fwd[v] for v in template[k] if v in fwd}
            if not mapped <= want:
                return False
            free_tpl = sorted(v for v in template[k] if v not in fwd)
            free_inp = sorted(want - mapped)
            if len(free_tpl) != len(free_inp):
                return False
            for assignment in permutations(free_inp):
                if any(lab in taken for lab in assignment):
                    continue
                for v, lab in zip(free_tpl, assignment):
                    fwd[v] = lab
                    taken.add(lab)
                if extend(k + 1, fwd, taken):
                    return True
                for v, lab in zip(free_tpl, assignment):
                    del fwd[v]
                    taken.discard(lab)
            return False

        return extend(0, {}, set())

    for direction in (1, -1):
        for offset in range(n):
            order = [sets[(offset + direction * k) % n] for k in range(n)]
            if try_alignment(order):
                return True
    return False


def classify_realization(
    triangles: Sequence[Triangle] | CycleRealization,
) -> CycleClass:
    """Classify a cycle realization as Disk(n), Moebius5 or Moebius6.

    Disk means all n triangles share a common vertex (the fan hub).  The
    two Moebius types are recognized by structural match against their
    templates, invariant under relabeling and under rotation/reflection
    of the input sequence.

    Raises PatternError when the input does not realize the cycle pattern,
    and TrichotomyError if a realization matches none of the three types —
    which the classification claims is impossible, so such an input is
    surfaced loudly instead of being coerced.
    """
    if isinstance(triangles, CycleRealization):
        tris = triangles.triangles
    else:
        tris = tuple(triangles)
        _check_is_realization(tris)
    n = len(tris)
    sets = [t.vertex_set for t in tris]

    common = frozenset.intersection(*sets)
    if common:
        return disk(n)
    if n == 5 and _matches_template(sets, _MOEBIUS5_TEMPLATE):
        return MOEBIUS5
    if n == 6 and _matches_template(sets, _MOEBIUS6_TEMPLATE):
        return MOEBIUS6
    raise TrichotomyError(
        f"a {n}-cycle realization matched none of the three known types; "
        "this should be impossible — please report it"
    )


# -- exhaustive oracle --------------------------------------------------------

ORACLE_MAX_N = 8


def enumerate_realizations(
    n: int,
) -> list[tuple[CycleRealization, CycleClass]]:
    """Every realization of the n-cycle pattern, up to relabeling and the
    2n dihedral symmetries, each paired with its classification.

    Exhaustive backtracking: the first triangle is pinned to {0, 1, 2},
    every later triangle shares two vertices with its predecessor and its
    third vertex is either an already-used label or the next fresh one;
    any candidate violating a prescribed pairwise intersection count is
    pruned.  Survivors are deduplicated by a canonical form (lexicographic
    minimum over all dihedral alignments and relabelings).

    Only desk-scale sizes are allowed: 3 <= n <= 8.
    """
    if not 3 <= n <= ORACLE_MAX_N:
        raise ValueError(f"enumeration supports 3 <= n <= {ORACLE_MAX_N}, got {n}")

    # Required |s_i ∩ s_j| as cardinalities.
    def req(i: int, j: int) -> int:
        return 2 if (i - j) % n in (1, n - 1) else 1

    found: set[tuple[tuple[int, ...], ...]] = set()
    chain: list[frozenset[int]] = [frozenset((0, 1, 2))]

    def candidates() -> list[frozenset[int]]:
        prev = chain[-1]
        used = set().union(*chain)
        fresh = max(used) + 1
        out = set()
        for pair in (frozenset(p) for p in permutations(sorted(prev), 2)):
            for w in sorted(used - prev) + [fresh]:
                if w not in pair:
                    out.add(pair | {w})
        return sorted(out, key=sorted)

    def feasible(candidate: frozenset[int]) -> bool:
        k = len(chain)
        return all(len(candidate & chain[j]) == req(j, k) for j in range(k))

    def search() -> None:
        if len(chain) == n:
            found.add(_canonical_encoding(chain))
            return
        for candidate in candidates():
            if feasible(candidate):
                chain.append(candidate)
                search()
                chain.pop()

    search()

    results = []
    for key in sorted(found):
        tris = tuple(Triangle(tuple(str(v) for v in vs)) for vs in _decode(key))
        realization = CycleRealization(tris)
        results.append((realization, classify_realization(realization)))
    return results


def _canonical_encoding(seq: Sequence[frozenset[int]]) -> tuple[tuple[int, ...], ...]:
    """Lexicographically smallest encoding over dihedral alignments and
    relabelings.

    For a fixed alignment the smallest relabeling assigns fresh labels in
    first-appearance order; when a triangle introduces several new
    vertices at once, all distributions of the next labels among them are
    explored (the sorted per-triangle tuples tie, later triangles break
    the tie).
    """
    n = len(seq)
    best: tuple[tuple[int, ...], ...] | None = None

    def relabelings(order: list[frozenset[int]]) -> None:
        nonlocal best

        def walk(k: int, fwd: dict[int, int], enc: list[tuple[int, ...]]) -> None:
            nonlocal best
            if k == n:
                candidate = tuple(enc)
                if best is None or candidate < best:
                    best = candidate
                return
            tri = order[k]
            known = sorted(fwd[v] for v in tri if v in fwd)
            new = sorted(v for v in tri if v not in fwd)
            labels = list(range(len(fwd), len(fwd) + len(new)))
            encoded = tuple(sorted(known + labels))
            if best is not None and tuple(enc + [encoded]) > best[: k + 1]:
                return
            for assignment in permutations(new):
                for v, lab in zip(assignment, labels):
                    fwd[v] = lab
                enc.append(encoded)
                walk(k + 1, fwd, enc)
                enc.pop()
                for v in assignment:
                    del fwd[v]

        walk(0, {}, [])

    for direction in (1, -1):
        for offset in range(n):
            relabelings([seq[(offset + direction * k) % n] for k in range(n)])

    assert best is not None
    return best


def _decode(encoding: Iterable[tuple[int, ...]]) -> list[frozenset[int]]:
    return [frozenset(tri) for tri in encoding]
