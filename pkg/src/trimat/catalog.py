"""Deterministic constructors for the built-in test complexes.

Two families live here: the named projective-plane triangulations tp10 and
tp12 with their fixed a_i/x labelings, and a handful of standard surfaces
(platonic sphere triangulations, the 7-vertex torus) plus the three
cycle-link models (disk fan, the 5- and 6-triangle Moebius bands).

Labelings are fixed so fixtures and CLI output are reproducible
byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .complexes import Triangle, Triangulation

__all__ = [
    "tp10",
    "tp12",
    "standard",
    "disk_fan",
    "moebius5",
    "moebius6",
    "CatalogEntry",
    "CLOSED_SURFACES",
    "catalog_names",
]


def tp10() -> Triangulation:
    """The 10-triangle projective plane on vertices a0..a4, x.

    Triangles in order s0..s4, r0..r4 with
    s_i = {a_i, a_(i+1 mod 5), x} and r_i = {a_i, a_(i+1 mod 5), a_(i-2 mod 5)}.
    The s-triangles fan around x (a disk); the r-triangles form a Moebius
    band glued to its rim.
    """
    s = [Triangle((f"a{i}", f"a{(i + 1) % 5}", "x")) for i in range(5)]
    r = [
        Triangle((f"a{i}", f"a{(i + 1) % 5}", f"a{(i - 2) % 5}"))
        for i in range(5)
    ]
    return Triangulation(s + r)


def tp12() -> Triangulation:
    """The 12-triangle projective plane on vertices a0..a5, x.

    Triangles in order s0..s5, r0..r5 with s_i = {a_i, a_(i+1 mod 6), x};
    the r_i share the rim edge {a_i, a_(i+1)} and have their apex at
    a_(i+4 mod 6) for even i, a_(i+3 mod 6) for odd i.
    """
    s = [Triangle((f"a{i}", f"a{(i + 1) % 6}", "x")) for i in range(6)]
    r = []
    for i in range(6):
        apex = (i + 4) % 6 if i % 2 == 0 else (i + 3) % 6
        r.append(Triangle((f"a{i}", f"a{(i + 1) % 6}", f"a{apex}")))
    return Triangulation(s + r)


def disk_fan(n: int) -> Triangulation:
    """n triangles fanning around a hub x: {a_i, a_(i+1 mod n), x}."""
    if n < 3:
        raise ValueError(f"a fan needs at least 3 triangles, got {n}")
    return Triangulation(
        Triangle((f"a{i}", f"a{(i + 1) % n}", "x")) for i in range(n)
    )


def moebius5() -> Triangulation:
    """The 5-triangle Moebius band: the non-disk 5-cycle realization."""
    sets = [
        ("a0", "a2", "a1"),
        ("a1", "a3", "a2"),
        ("a2", "a4", "a3"),
        ("a3", "a0", "a4"),
        ("a4", "a1", "a0"),
    ]
    return Triangulation(Triangle(vs) for vs in sets)


def moebius6() -> Triangulation:
    """The 6-triangle Moebius band: the non-disk 6-cycle realization."""
    sets = [
        ("a0", "a1", "a2"),
        ("a1", "a2", "a4"),
        ("a2", "a3", "a4"),
        ("a3", "a0", "a4"),
        ("a0", "a5", "a4"),
        ("a5", "a2", "a0"),
    ]
    return Triangulation(Triangle(vs) for vs in sets)


def _tetrahedron() -> Triangulation:
    return Triangulation(
        Triangle(vs) for vs in [("a", "b", "c"), ("a", "b", "d"), ("a", "c", "d"), ("b", "c", "d")]
    )


def _octahedron() -> Triangulation:
    # Poles p0/p1, equator e0..e3.
    sets = [
        ("p0", "e0", "e1"),
        ("p0", "e1", "e2"),
        ("p0", "e2", "e3"),
        ("p0", "e3", "e0"),
        ("p1", "e0", "e1"),
        ("p1", "e1", "e2"),
        ("p1", "e2", "e3"),
        ("p1", "e3", "e0"),
    ]
    return Triangulation(Triangle(vs) for vs in sets)


def _icosahedron() -> Triangulation:
    # Pole t, upper ring u0..u4, lower ring l0..l4, pole b.
    tris: list[tuple[str, str, str]] = []
    for i in range(5):
        j = (i + 1) % 5
        tris.append(("t", f"u{i}", f"u{j}"))
    for i in range(5):
        j = (i + 1) % 5
        tris.append((f"u{i}", f"l{i}", f"u{j}"))
        tris.append((f"u{j}", f"l{i}", f"l{j}"))
    for i in range(5):
        j = (i + 1) % 5
        tris.append(("b", f"l{i}", f"l{j}"))
    return Triangulation(Triangle(vs) for vs in tris)


def _torus7() -> Triangulation:
    # The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
    # Every vertex pair is an edge (21 edges), 14 triangles, chi = 0.
    tris = []
    for i in range(7):
        tris.append((f"v{i}", f"v{(i + 1) % 7}", f"v{(i + 3) % 7}"))
    for i in range(7):
        tris.append((f"v{i}", f"v{(i + 2) % 7}", f"v{(i + 3) % 7}"))
    return Triangulation(Triangle(vs) for vs in tris)


@dataclass(frozen=True)
class CatalogEntry:
    """A named builder plus the invariants its output must satisfy."""

    name: str
    builder: Callable[[], Triangulation]
    n: int
    euler_characteristic: int
    orientable: bool | None  # None for the entries with boundary
    closed: bool


_ENTRIES: dict[str, CatalogEntry] = {
    e.name: e
    for e in [
        CatalogEntry("tetrahedron", _tetrahedron, 4, 2, True, True),
        CatalogEntry("octahedron", _octahedron, 8, 2, True, True),
        CatalogEntry("icosahedron", _icosahedron, 20, 2, True, True),
        CatalogEntry("torus7", _torus7, 14, 0, True, True),
        CatalogEntry("tp10", tp10, 10, 1, False, True),
        CatalogEntry("tp12", tp12, 12, 1, False, True),
        CatalogEntry("moebius5", moebius5, 5, 0, None, False),
        CatalogEntry("moebius6", moebius6, 6, 0, None, False),
    ]
}

#: The closed-surface members used by the verification corpus, in a fixed order.
CLOSED_SURFACES = ("tetrahedron", "octahedron", "icosahedron", "torus7", "tp10", "tp12")


def catalog_names() -> tuple[str, ...]:
    return tuple(_ENTRIES) + ("disk_fan(n)",)


def standard(name: str) -> Triangulation:
    """Build a catalog complex by name.

    Accepts the fixed names (tetrahedron, octahedron, icosahedron, torus7,
    tp10, tp12, moebius5, moebius6) plus parameterized fans written as
    ``disk_fan(n)``.
    """
    if name in _ENTRIES:
        return _ENTRIES[name].builder()
    if name.startswith("disk_fan(") and name.endswith(")"):
        inner = name[len("disk_fan(") : -1]
        try:
            return disk_fan(int(inner))
        except ValueError as exc:
            raise ValueError(f"bad disk_fan size {inner!r}: {exc}") from None
    raise ValueError(
        f"unknown catalog name {name!r}; known: {', '.join(catalog_names())}"
    )


def entry(name: str) -> CatalogEntry:
    try:
        return _ENTRIES[name]
    except KeyError:
        raise ValueError(f"unknown catalog name {name!r}") from None
