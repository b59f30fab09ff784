"""Abstract simplicial 2-complexes given as indexed triangle lists.

A triangulation here is nothing more than an ordered sequence of distinct
triangles, each a set of three vertex labels.  Labels are opaque text
tokens; the index order of the triangles is part of the identity of the
complex (it fixes matrix row order downstream).  Everything is immutable
after construction and all operations are pure functions.

The ``.tri`` text format: one triangle per line as three whitespace
separated labels, ``#`` starts a comment, blank lines are ignored, and the
triangle index is the order of occurrence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import ParseError, SurfaceError

__all__ = [
    "Triangle",
    "Triangulation",
    "SurfaceReport",
    "parse_triangulation",
    "serialize_triangulation",
    "validate_closed_surface",
    "vertex_star",
    "euler_characteristic",
    "orientability",
    "boundary_edges",
]


def _check_label(label: str) -> str:
    if not isinstance(label, str) or not label:
        raise ValueError(f"vertex label must be a non-empty string, got {label!r}")
    if any(c.isspace() for c in label):
        raise ValueError(f"vertex label may not contain whitespace: {label!r}")
    return label


@dataclass(frozen=True, order=True)
class Triangle:
    """A 2-simplex: exactly three distinct vertex labels, stored sorted."""

    vertices: tuple[str, str, str]

    def __init__(self, vertices: Iterable[str]):
        vs = tuple(sorted(_check_label(v) for v in vertices))
        if len(vs) != 3 or len(set(vs)) != 3:
            raise ValueError(f"a triangle needs exactly 3 distinct vertices, got {vs!r}")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "_vset", frozenset(vs))

    @property
    def vertex_set(self) -> frozenset[str]:
        return self._vset  # type: ignore[attr-defined]

    def edges(self) -> tuple[frozenset[str], ...]:
        a, b, c = self.vertices
        return (frozenset((a, b)), frozenset((a, c)), frozenset((b, c)))

    def __contains__(self, label: str) -> bool:
        return label in self.vertex_set

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices)

    def __str__(self) -> str:
        return " ".join(self.vertices)


class Triangulation:
    """An ordered sequence of distinct triangles forming a pure 2-complex.

    Vertices and edges exist only as faces of the triangles.  ``n`` is the
    triangle count; ``triangles[i]`` is the i-th triangle.
    """

    __slots__ = ("triangles", "_edge_map", "_vertex_map")

    def __init__(self, triangles: Iterable[Triangle]):
        tris = tuple(triangles)
        if not tris:
            raise ValueError("a triangulation needs at least one triangle")
        seen: set[frozenset[str]] = set()
        for t in tris:
            if not isinstance(t, Triangle):
                raise TypeError(f"expected Triangle, got {type(t).__name__}")
            if t.vertex_set in seen:
                raise ValueError(f"duplicate triangle: {t}")
            seen.add(t.vertex_set)
        self.triangles: tuple[Triangle, ...] = tris
        edge_map: dict[frozenset[str], list[int]] = {}
        vertex_map: dict[str, list[int]] = {}
        for i, t in enumerate(tris):
            for e in t.edges():
                edge_map.setdefault(e, []).append(i)
            for v in t.vertices:
                vertex_map.setdefault(v, []).append(i)
        self._edge_map = {e: tuple(ix) for e, ix in edge_map.items()}
        self._vertex_map = {v: tuple(ix) for v, ix in vertex_map.items()}

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.triangles)

    def __len__(self) -> int:
        return len(self.triangles)

    def __getitem__(self, i: int) -> Triangle:
        return self.triangles[i]

    def __iter__(self) -> Iterator[Triangle]:
        return iter(self.triangles)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Triangulation):
            return NotImplemented
        return self.triangles == other.triangles

    def __hash__(self) -> int:
        return hash(self.triangles)

    def __repr__(self) -> str:
        return f"Triangulation({self.n} triangles, {len(self.vertices())} vertices)"

    def vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self._vertex_map))

    def edges(self) -> tuple[frozenset[str], ...]:
        return tuple(self._edge_map)

    def triangles_at(self, v: str) -> tuple[int, ...]:
        """Indices of the triangles containing vertex ``v``."""
        try:
            return self._vertex_map[v]
        except KeyError:
            raise SurfaceError(f"vertex {v!r} does not occur in the complex") from None

    def triangles_on(self, edge: frozenset[str]) -> tuple[int, ...]:
        return self._edge_map.get(edge, ())

    def degree(self, v: str) -> int:
        return len(self.triangles_at(v))


@dataclass(frozen=True)
class SurfaceReport:
    """Outcome of the closed-surface validation.

    ``orientable`` is None unless the complex is a connected closed surface
    (it is undefined otherwise).  Problems are reported, never thrown.
    """

    connected: bool
    closed: bool
    links_ok: bool
    euler_characteristic: int
    orientable: bool | None
    per_vertex_degree: Mapping[str, int] = field(repr=False)

    @property
    def is_closed_surface(self) -> bool:
        return self.connected and self.closed and self.links_ok


# -- .tri text format -------------------------------------------------------


def parse_triangulation(text: str) -> Triangulation:
    """Parse ``.tri`` text into a Triangulation, preserving file order."""
    triangles: list[Triangle] = []
    seen: dict[frozenset[str], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(f"expected 3 vertex labels, got {len(tokens)}", lineno)
        if len(set(tokens)) != 3:
            raise ParseError(f"repeated vertex within a triangle: {line!r}", lineno)
        key = frozenset(tokens)
        if key in seen:
            raise ParseError(
                f"duplicate triangle {' '.join(sorted(tokens))!r}"
                f" (first seen on line {seen[key]})",
                lineno,
            )
        seen[key] = lineno
        triangles.append(Triangle(tokens))
    if not triangles:
        raise ParseError("no triangles found in input")
    return Triangulation(triangles)


def serialize_triangulation(K: Triangulation) -> str:
    """Render ``.tri`` text; ``parse_triangulation`` inverts this exactly."""
    return "".join(f"{t}\n" for t in K.triangles)


# -- surface validation ------------------------------------------------------


def _is_connected(K: Triangulation) -> bool:
    # Connectivity of the 1-skeleton; for a pure 2-complex this is the
    # connectivity of the underlying space.
    verts = K.vertices()
    if len(verts) <= 1:
        return True
    adjacent: dict[str, set[str]] = {v: set() for v in verts}
    for t in K.triangles:
        a, b, c = t.vertices
        adjacent[a].update((b, c))
        adjacent[b].update((a, c))
        adjacent[c].update((a, b))
    todo = [verts[0]]
    reached = {verts[0]}
    while todo:
        for w in adjacent[todo.pop()]:
            if w not in reached:
                reached.add(w)
                todo.append(w)
    return len(reached) == len(verts)


def _link_is_single_cycle(K: Triangulation, v: str) -> bool:
    star = K.triangles_at(v)
    if len(star) < 3:
        return False
    star_set = set(star)
    # Every edge through v must bound exactly 2 star triangles, and the
    # star must be connected under shared-edge adjacency.
    neighbors: dict[int, list[int]] = {i: [] for i in star}
    for i in star:
        for e in K.triangles[i].edges():
            if v not in e:
                continue
            on_edge = K.triangles_on(e)
            if len(on_edge) != 2 or any(j not in star_set for j in on_edge):
                return False
            j = on_edge[0] if on_edge[1] == i else on_edge[1]
            neighbors[i].append(j)
    todo = [star[0]]
    reached = {star[0]}
    while todo:
        for j in neighbors[todo.pop()]:
            if j not in reached:
                reached.add(j)
                todo.append(j)
    return len(reached) == len(star)


def _oriented_consistently(K: Triangulation) -> bool:
    """Propagate triangle orientations across shared edges; True when no
    contradiction arises.  Assumes every edge lies in at most 2 triangles."""
    orientation: dict[int, tuple[str, str, str]] = {}

    def directed(t: tuple[str, str, str]) -> set[tuple[str, str]]:
        a, b, c = t
        return {(a, b), (b, c), (c, a)}

    for seed in range(K.n):
        if seed in orientation:
            continue
        orientation[seed] = K.triangles[seed].vertices
        todo = [seed]
        while todo:
            i = todo.pop()
            edges_i = directed(orientation[i])
            for e in K.triangles[i].edges():
                pair = K.triangles_on(e)
                if len(pair) != 2:
                    continue
                j = pair[0] if pair[1] == i else pair[1]
                u, w = sorted(e)
                # Consistent neighbours traverse the shared edge oppositely.
                want_uw = (w, u) in edges_i
                tj = K.triangles[j].vertices
                (z,) = set(tj) - e
                oriented_j = (u, w, z) if want_uw else (w, u, z)
                if j not in orientation:
                    orientation[j] = oriented_j
                    todo.append(j)
                elif directed(orientation[j]) != directed(oriented_j):
                    return False
    return True


def validate_closed_surface(K: Triangulation) -> SurfaceReport:
    """Check whether the complex is a connected closed surface.

    The report carries the individual findings; ``is_closed_surface`` is
    their conjunction.  Orientability is only decided (and only defined)
    when the complex passes all three checks.
    """
    connected = _is_connected(K)
    closed = all(len(ix) == 2 for ix in K._edge_map.values())
    links_ok = all(_link_is_single_cycle(K, v) for v in K.vertices())
    chi = euler_characteristic(K)
    orientable: bool | None = None
    if connected and closed and links_ok:
        orientable = _oriented_consistently(K)
    degrees = {v: K.degree(v) for v in K.vertices()}
    return SurfaceReport(
        connected=connected,
        closed=closed,
        links_ok=links_ok,
        euler_characteristic=chi,
        orientable=orientable,
        per_vertex_degree=degrees,
    )


def euler_characteristic(K: Triangulation) -> int:
    return len(K.vertices()) - len(K.edges()) + K.n


def orientability(K: Triangulation) -> bool:
    """Whether a connected closed surface is orientable.

    Raises SurfaceError on anything that is not a connected closed surface.
    """
    report = validate_closed_surface(K)
    if not report.is_closed_surface:
        raise SurfaceError(
            "orientability is only defined for connected closed surfaces "
            f"(connected={report.connected}, closed={report.closed}, "
            f"links_ok={report.links_ok})"
        )
    assert report.orientable is not None
    return report.orientable


def boundary_edges(K: Triangulation) -> tuple[frozenset[str], ...]:
    """Edges lying in exactly one triangle, in deterministic order."""
    return tuple(
        e for e in sorted(K._edge_map, key=sorted) if len(K._edge_map[e]) == 1
    )


def vertex_star(K: Triangulation, v: str) -> tuple[int, ...]:
    """The triangles around ``v`` in cyclic order.

    Consecutive entries (cyclically) share an edge through ``v``.  The walk
    starts at the lowest triangle index in the star and proceeds toward the
    lower-indexed of its two neighbours, which makes the output canonical.

    Raises SurfaceError if ``v`` is absent or its star is not a single
    cycle (the latter signals non-surface input).
    """
    star = K.triangles_at(v)
    if not _link_is_single_cycle(K, v):
        raise SurfaceError(f"the star of vertex {v!r} is not a single cycle")

    def star_neighbors(i: int) -> list[int]:
        out = []
        for e in K.triangles[i].edges():
            if v in e:
                pair = K.triangles_on(e)
                out.append(pair[0] if pair[1] == i else pair[1])
        return sorted(out)

    start = min(star)
    second = star_neighbors(start)[0]
    cycle = [start, second]
    while True:
        nxt = [j for j in star_neighbors(cycle[-1]) if j != cycle[-2]]
        assert len(nxt) == 1
        if nxt[0] == start:
            break
        cycle.append(nxt[0])
    if len(cycle) != len(star):
        raise SurfaceError(f"the star of vertex {v!r} is not a single cycle")
    return tuple(cycle)
