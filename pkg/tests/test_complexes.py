"""Complex model, .tri parsing, surface validation, vertex stars."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trimat import (
    ParseError,
    SurfaceError,
    Triangle,
    Triangulation,
    boundary_edges,
    euler_characteristic,
    orientability,
    parse_triangulation,
    serialize_triangulation,
    validate_closed_surface,
    vertex_star,
)

TETRA_TEXT = "a b c\na b d\na c d\nb c d\n"


class TestTriangle:
    def test_vertices_sorted(self):
        assert Triangle(("c", "a", "b")).vertices == ("a", "b", "c")

    def test_rejects_repeats(self):
        with pytest.raises(ValueError):
            Triangle(("a", "a", "b"))

    def test_rejects_whitespace_label(self):
        with pytest.raises(ValueError):
            Triangle(("a b", "c", "d"))

    def test_rejects_empty_label(self):
        with pytest.raises(ValueError):
            Triangle(("", "c", "d"))

    def test_edges(self):
        t = Triangle(("a", "b", "c"))
        assert set(t.edges()) == {
            frozenset("ab"),
            frozenset("ac"),
            frozenset("bc"),
        }


class TestParsing:
    def test_tetrahedron(self):
        K = parse_triangulation(TETRA_TEXT)
        assert K.n == 4
        assert K.triangles[0].vertices == ("a", "b", "c")

    def test_comments_and_blanks(self):
        text = "# a comment\n\na b c  # trailing\n\na b d\na c d\nb c d\n"
        assert parse_triangulation(text).n == 4

    def test_file_order_preserved(self):
        K = parse_triangulation("x y z\na b c\n")
        assert K.triangles[0].vertices == ("x", "y", "z")

    def test_duplicate_triangle_reports_line(self):
        with pytest.raises(ParseError) as exc:
            parse_triangulation("a b c\na b c\n")
        assert exc.value.line == 2

    def test_wrong_token_count(self):
        with pytest.raises(ParseError) as exc:
            parse_triangulation("a b\n")
        assert exc.value.line == 1

    def test_repeated_vertex_in_line(self):
        with pytest.raises(ParseError) as exc:
            parse_triangulation("a b c\nd d e\n")
        assert exc.value.line == 2

    def test_duplicate_detected_up_to_order(self):
        with pytest.raises(ParseError):
            parse_triangulation("a b c\nc b a\n")

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_triangulation("# nothing\n")

    def test_serialize_round_trip_tetra(self):
        K = parse_triangulation(TETRA_TEXT)
        assert parse_triangulation(serialize_triangulation(K)) == K

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(
            st.frozensets(
                st.sampled_from("abcdefghij"), min_size=3, max_size=3
            ),
            min_size=1,
            max_size=8,
            unique=True,
        )
    )
    def test_serialize_round_trip_random(self, triangle_sets):
        K = Triangulation(Triangle(tuple(s)) for s in triangle_sets)
        assert parse_triangulation(serialize_triangulation(K)) == K


class TestValidation:
    def test_tetrahedron_is_a_sphere(self):
        report = validate_closed_surface(parse_triangulation(TETRA_TEXT))
        assert report.connected and report.closed and report.links_ok
        assert report.euler_characteristic == 2
        assert report.orientable is True
        assert report.per_vertex_degree == {"a": 3, "b": 3, "c": 3, "d": 3}

    def test_single_triangle_not_closed(self):
        report = validate_closed_surface(parse_triangulation("a b c\n"))
        assert not report.closed
        assert report.orientable is None
        assert len(boundary_edges(parse_triangulation("a b c\n"))) == 3

    def test_disconnected_complex(self):
        K = parse_triangulation("a b c\nd e f\n")
        report = validate_closed_surface(K)
        assert not report.connected

    def test_tp10_report(self, tp10):
        report = validate_closed_surface(tp10)
        assert report.is_closed_surface
        assert report.euler_characteristic == 1
        assert report.orientable is False
        assert len(tp10.vertices()) == 6
        assert len(tp10.edges()) == 15

    def test_closed_surface_edge_counts(self, corpus):
        # On a closed surface every edge lies in 2 triangles and 2|E| = 3n.
        for name, K in corpus:
            assert all(len(K.triangles_on(e)) == 2 for e in K.edges()), name
            assert 2 * len(K.edges()) == 3 * K.n, name
            degrees = validate_closed_surface(K).per_vertex_degree
            assert sum(degrees.values()) == 3 * K.n, name


class TestEulerAndOrientability:
    def test_octahedron(self, octahedron):
        assert euler_characteristic(octahedron) == 2
        assert orientability(octahedron) is True

    def test_tp12(self, tp12):
        assert euler_characteristic(tp12) == 1
        assert orientability(tp12) is False

    def test_torus7(self, torus7):
        assert euler_characteristic(torus7) == 0
        assert orientability(torus7) is True
        assert len(torus7.vertices()) == 7

    def test_orientability_rejects_open_complex(self):
        with pytest.raises(SurfaceError):
            orientability(parse_triangulation("a b c\n"))


class TestVertexStar:
    def test_tetrahedron_star(self, tetrahedron):
        star = vertex_star(tetrahedron, "a")
        assert len(star) == 3
        assert star[0] == 0

    def test_star_is_cyclic_through_vertex(self, corpus):
        for name, K in corpus:
            for v in K.vertices():
                star = vertex_star(K, v)
                assert len(star) == K.degree(v), (name, v)
                for k, i in enumerate(star):
                    j = star[(k + 1) % len(star)]
                    shared = (
                        K.triangles[i].vertex_set & K.triangles[j].vertex_set
                    )
                    assert len(shared) == 2 and v in shared, (name, v)

    def test_star_determinism_rule(self, tp10):
        # Lowest triangle index first, then toward the lower-indexed neighbour.
        assert vertex_star(tp10, "x") == (0, 1, 2, 3, 4)

    def test_star_of_missing_vertex(self, tetrahedron):
        with pytest.raises(SurfaceError):
            vertex_star(tetrahedron, "zz")

    def test_star_on_non_surface(self):
        # Three triangles sharing one edge: the star of 'a' is not a cycle.
        K = parse_triangulation("a b c\na b d\na b e\n")
        with pytest.raises(SurfaceError):
            vertex_star(K, "a")
