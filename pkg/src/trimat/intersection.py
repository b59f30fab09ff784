"""Intersection matrices and intersection-preserving triangle bijections.

The intersection matrix of a triangulation with triangles s_0..s_(n-1) has
entry (i, j) equal to the dimension of s_i ∩ s_j as a simplex: -1 for
disjoint triangles, 0 for a shared vertex, 1 for a shared edge, 2 on the
diagonal.  Equivalently, entry = |shared vertices| - 1, which is how it is
computed here.

A triangle bijection between two complexes of equal size preserves
intersections when it preserves every matrix entry.  Such a bijection may
or may not be induced by a vertex map; ``extend_to_simplicial`` decides
this by intersecting the images of each vertex star, and reports the
vertex map when one exists.

The ``.imat`` text format: first line n, then n lines of n space-separated
integers in {-1, 0, 1, 2}.  A bijection serializes as a single line of n
image indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterator

from . import kernels
from .complexes import Triangle, Triangulation, validate_closed_surface
from .errors import MappingError, ParseError, SurfaceError

__all__ = [
    "IntersectionMatrix",
    "TriangleBijection",
    "Extended",
    "NonExtendable",
    "ExtensionResult",
    "intersection_dim",
    "intersection_matrix",
    "is_intersection_preserving",
    "find_intersection_preserving_bijections",
    "extend_to_simplicial",
    "parse_matrix",
    "serialize_matrix",
    "parse_bijection",
    "serialize_bijection",
]

_VALID_ENTRIES = (-1, 0, 1, 2)


def intersection_dim(t1: Triangle, t2: Triangle) -> int:
    """Dimension of the intersection simplex: |t1 ∩ t2| - 1."""
    return len(t1.vertex_set & t2.vertex_set) - 1


@dataclass(frozen=True)
class IntersectionMatrix:
    """Symmetric n x n matrix over {-1, 0, 1, 2} with diagonal 2."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                if value not in _VALID_ENTRIES:
                    raise ValueError(f"entry ({i},{j}) = {value} outside {{-1,0,1,2}}")
                if self.entries[j][i] != value:
                    raise ValueError(f"matrix not symmetric at ({i},{j})")
            if row[i] != 2:
                raise ValueError(f"diagonal entry ({i},{i}) = {row[i]}, expected 2")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def row_signature(self, i: int) -> tuple[int, ...]:
        """Sorted row entries; equal signatures are necessary for two rows
        to correspond under any preserving bijection."""
        return tuple(sorted(self.entries[i]))

    def permuted(self, perm: "TriangleBijection") -> "IntersectionMatrix":
        """The matrix of the same complex with triangle i renumbered to
        perm(i): entry (perm(i), perm(j)) = entry (i, j)."""
        if perm.n != self.n:
            raise MappingError(f"permutation size {perm.n} != matrix size {self.n}")
        n = self.n
        new = [[0] * n for _ in range(n)]
        for i in range(n):
            pi = perm(i)
            row = self.entries[i]
            for j in range(n):
                new[pi][perm(j)] = row[j]
        return IntersectionMatrix(tuple(tuple(r) for r in new))

    def __str__(self) -> str:
        return serialize_matrix(self)


def intersection_matrix(K: Triangulation) -> IntersectionMatrix:
    """Matrix of pairwise intersection dimensions in triangle index order."""
    sets = [t.vertex_set for t in K.triangles]
    n = len(sets)
    rows = []
    for i in range(n):
        si = sets[i]
        rows.append(tuple(len(si & sets[j]) - 1 for j in range(n)))
    return IntersectionMatrix(tuple(rows))


@dataclass(frozen=True)
class TriangleBijection:
    """A bijection of triangle index sets, stored as the image sequence."""

    forward: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.forward)
        if sorted(self.forward) != list(range(n)):
            raise MappingError(f"not a permutation of 0..{n - 1}: {self.forward}")

    @classmethod
    def identity(cls, n: int) -> "TriangleBijection":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.forward)

    def __call__(self, i: int) -> int:
        return self.forward[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.forward)

    def inverse(self) -> "TriangleBijection":
        inv = [0] * self.n
        for i, j in enumerate(self.forward):
            inv[j] = i
        return TriangleBijection(tuple(inv))

    def compose(self, first: "TriangleBijection") -> "TriangleBijection":
        """self ∘ first: apply ``first``, then ``self``."""
        if first.n != self.n:
            raise MappingError(f"cannot compose sizes {first.n} and {self.n}")
        return TriangleBijection(tuple(self.forward[j] for j in first.forward))

    def __str__(self) -> str:
        return serialize_bijection(self).rstrip("\n")


def is_intersection_preserving(
    K: Triangulation, K2: Triangulation, f: TriangleBijection
) -> bool:
    """True iff dim(s_i ∩ s_j) = dim(f(s_i) ∩ f(s_j)) for every pair."""
    if K.n != K2.n:
        raise MappingError(f"complex sizes differ: {K.n} vs {K2.n}")
    if f.n != K.n:
        raise MappingError(f"bijection size {f.n} does not match complexes of size {K.n}")
    sets1 = [t.vertex_set for t in K.triangles]
    sets2 = [t.vertex_set for t in K2.triangles]
    for i in range(K.n):
        fi = sets2[f(i)]
        for j in range(i + 1, K.n):
            if len(sets1[i] & sets1[j]) != len(fi & sets2[f(j)]):
                return False
    return True


def _compatibility(m1: IntersectionMatrix, m2: IntersectionMatrix) -> tuple[tuple[bool, ...], ...]:
    sig2 = [m2.row_signature(j) for j in range(m2.n)]
    return tuple(
        tuple(m1.row_signature(i) == sig2[j] for j in range(m2.n))
        for i in range(m1.n)
    )


def find_intersection_preserving_bijections(
    M: IntersectionMatrix,
    M2: IntersectionMatrix,
    limit: int | None = None,
) -> list[TriangleBijection]:
    """All bijections g with M2[g(i), g(j)] = M[i, j], lexicographically.

    Returns the empty list when none exist (in particular when the sizes
    differ).  ``limit`` truncates the output to the first ``limit``
    bijections in lexicographic order of the image sequence.  Rows are
    matched only when their entry multisets agree, which prunes most of
    the search tree up front.
    """
    if M.n != M2.n:
        return []
    images = kernels.search_bijections(
        M.entries, M2.entries, _compatibility(M, M2), limit
    )
    return [TriangleBijection(img) for img in images]


# -- extension of a triangle bijection to a vertex map -----------------------


@dataclass(frozen=True)
class Extended:
    """The bijection is simplicial: induced by the given vertex bijection."""

    vertex_map: dict[str, str]


@dataclass(frozen=True)
class NonExtendable:
    """No vertex map induces the bijection; ``witness_vertex`` is the
    lowest-labelled vertex at which the construction fails."""

    witness_vertex: str


ExtensionResult = Extended | NonExtendable


def extend_to_simplicial(
    K: Triangulation, K2: Triangulation, f: TriangleBijection
) -> ExtensionResult:
    """Try to extend an intersection-preserving triangle bijection to a
    simplicial isomorphism.

    For each vertex x the candidate image is the common intersection of the
    f-images of the triangles around x; the map extends exactly when every
    such intersection is a single vertex and the induced vertex map is a
    bijection carrying each triangle onto its f-image's vertex set.

    Raises MappingError if f is not intersection preserving and
    SurfaceError if either complex is not a connected closed surface.
    """
    for name, complex_ in (("first", K), ("second", K2)):
        report = validate_closed_surface(complex_)
        if not report.is_closed_surface:
            raise SurfaceError(
                f"the {name} complex is not a connected closed surface "
                f"(connected={report.connected}, closed={report.closed}, "
                f"links_ok={report.links_ok})"
            )
    if not is_intersection_preserving(K, K2, f):
        raise MappingError("bijection is not intersection preserving")

    vertex_map: dict[str, str] = {}
    failures: list[str] = []
    for x in K.vertices():
        images = [K2.triangles[f(i)].vertex_set for i in K.triangles_at(x)]
        common = reduce(frozenset.__and__, images)
        if len(common) != 1:
            failures.append(x)
        else:
            (vertex_map[x],) = common

    if not failures:
        # Injectivity, then triangle-onto; surjectivity follows because
        # every vertex of a pure complex lies in some triangle image.
        hit: dict[str, str] = {}
        for x in K.vertices():
            y = vertex_map[x]
            if y in hit:
                failures.append(min(hit[y], x))
            else:
                hit[y] = x
        for i, t in enumerate(K.triangles):
            target = K2.triangles[f(i)].vertex_set
            wrong = [x for x in t.vertices if vertex_map[x] not in target]
            if wrong:
                failures.append(min(wrong))
            elif {vertex_map[x] for x in t.vertices} != target:
                failures.append(min(t.vertices))

    if failures:
        return NonExtendable(witness_vertex=min(failures))
    return Extended(vertex_map=vertex_map)


# -- text formats -------------------------------------------------------------


def serialize_matrix(M: IntersectionMatrix) -> str:
    lines = [str(M.n)]
    lines += [" ".join(str(v) for v in row) for row in M.entries]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> IntersectionMatrix:
    """Parse ``.imat`` text.  Comments (#) and blank lines are tolerated."""
    rows: list[tuple[int, ...]] = []
    n: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ParseError(f"expected the matrix size, got {line!r}", lineno)
            if n < 1:
                raise ParseError(f"matrix size must be positive, got {n}", lineno)
            continue
        try:
            row = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise ParseError(f"non-integer matrix entry in {line!r}", lineno)
        if len(row) != n:
            raise ParseError(f"expected {n} entries, got {len(row)}", lineno)
        rows.append(row)
        if len(rows) > n:
            raise ParseError("more matrix rows than declared", lineno)
    if n is None:
        raise ParseError("empty matrix input")
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, got {len(rows)}")
    try:
        return IntersectionMatrix(tuple(rows))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def serialize_bijection(f: TriangleBijection) -> str:
    return " ".join(str(j) for j in f.forward) + "\n"


def parse_bijection(text: str) -> TriangleBijection:
    tokens = text.split()
    if not tokens:
        raise ParseError("empty bijection input")
    try:
        forward = tuple(int(tok) for tok in tokens)
    except ValueError:
        raise ParseError(f"non-integer bijection entry in {text!r}")
    try:
        return TriangleBijection(forward)
    except MappingError as exc:
        raise ParseError(str(exc)) from None
