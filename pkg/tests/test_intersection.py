"""Intersection matrices, preserving bijections, extension to vertex maps."""

import random
from itertools import permutations

import pytest

from trimat import (
    Extended,
    IntersectionMatrix,
    MappingError,
    NonExtendable,
    ParseError,
    SurfaceError,
    Triangle,
    TriangleBijection,
    disk_fan,
    extend_to_simplicial,
    find_intersection_preserving_bijections,
    intersection_dim,
    intersection_matrix,
    is_intersection_preserving,
    parse_bijection,
    parse_matrix,
    serialize_bijection,
    serialize_matrix,
)

# The swap self-map of tp10 exchanging the fan 5-cycle around x with the
# band 5-cycle of the r-triangles: g(s_i) = r_(2i mod 5), g(r_i) = s_(2i mod 5).
TP10_SWAP = TriangleBijection((5, 7, 9, 6, 8, 0, 2, 4, 1, 3))


def tp10_expected_matrix():
    """M_tp10 written out from the vertex-set rules rather than computed
    via intersection_matrix: the s-block is the 5-cycle fan pattern, s_i
    meets r_j in an edge only for i = j, and r_i meets r_j in an edge
    exactly when i - j = ±2 mod 5."""
    rows = []
    for i in range(10):
        row = []
        for j in range(10):
            if i == j:
                row.append(2)
            elif i < 5 and j < 5:
                row.append(1 if (i - j) % 5 in (1, 4) else 0)
            elif i >= 5 and j >= 5:
                row.append(1 if (i - j) % 5 in (2, 3) else 0)
            else:
                row.append(1 if i % 5 == j % 5 else 0)
        rows.append(tuple(row))
    return tuple(rows)


class TestIntersectionDim:
    def test_identity(self):
        t = Triangle(("a", "b", "c"))
        assert intersection_dim(t, t) == 2

    def test_disjoint(self):
        assert intersection_dim(Triangle("abc"), Triangle("def")) == -1

    def test_shared_vertex_and_edge(self):
        assert intersection_dim(Triangle("abc"), Triangle("ade")) == 0
        assert intersection_dim(Triangle("abc"), Triangle("abd")) == 1

    def test_tp10_s0_r2(self, tp10):
        # s0 = {a0,a1,x}, r2 = {a2,a3,a0} share exactly the vertex a0.
        assert intersection_dim(tp10.triangles[0], tp10.triangles[7]) == 0


class TestIntersectionMatrix:
    def test_tetrahedron_all_edges(self, tetrahedron):
        M = intersection_matrix(tetrahedron)
        assert all(
            M[i, j] == (2 if i == j else 1) for i in range(4) for j in range(4)
        )

    def test_tp10_matches_definition(self, tp10):
        assert intersection_matrix(tp10).entries == tp10_expected_matrix()

    def test_disjoint_pair(self):
        from trimat import Triangulation

        K = Triangulation([Triangle("abc"), Triangle("def")])
        assert intersection_matrix(K)[0, 1] == -1

    def test_symmetric_diagonal(self, corpus):
        for name, K in corpus:
            M = intersection_matrix(K)
            for i in range(M.n):
                assert M[i, i] == 2, name
                for j in range(M.n):
                    assert M[i, j] == M[j, i], name

    def test_three_edge_neighbours_per_row(self, corpus):
        for name, K in corpus:
            M = intersection_matrix(K)
            for i in range(M.n):
                assert sum(1 for v in M.row(i) if v == 1) == 3, name

    def test_validation_rejects_asymmetry(self):
        with pytest.raises(ValueError):
            IntersectionMatrix(((2, 1), (0, 2)))

    def test_validation_rejects_bad_diagonal(self):
        with pytest.raises(ValueError):
            IntersectionMatrix(((1, 0), (0, 2)))

    def test_permuted_reindexes(self, tp10):
        M = intersection_matrix(tp10)
        perm = TriangleBijection(tuple(reversed(range(10))))
        P = M.permuted(perm)
        for i in range(10):
            for j in range(10):
                assert P[perm(i), perm(j)] == M[i, j]


class TestPreservingCheck:
    def test_identity_preserves(self, corpus):
        for _, K in corpus:
            assert is_intersection_preserving(K, K, TriangleBijection.identity(K.n))

    def test_all_tetrahedron_permutations_preserve(self, tetrahedron):
        for perm in permutations(range(4)):
            assert is_intersection_preserving(
                tetrahedron, tetrahedron, TriangleBijection(perm)
            )

    def test_tp10_transposition_breaks(self, tp10):
        # Swapping s0 and r0 alone: dim(s0 ∩ s1) = 1 but dim(r0 ∩ s1) = 0.
        forward = list(range(10))
        forward[0], forward[5] = 5, 0
        assert not is_intersection_preserving(
            tp10, tp10, TriangleBijection(tuple(forward))
        )

    def test_size_mismatch_raises(self, tetrahedron, tp10):
        with pytest.raises(MappingError):
            is_intersection_preserving(
                tetrahedron, tp10, TriangleBijection.identity(4)
            )


class TestBijectionSearch:
    def test_tetrahedron_finds_all_24(self, tetrahedron):
        M = intersection_matrix(tetrahedron)
        found = find_intersection_preserving_bijections(M, M)
        assert [g.forward for g in found] == sorted(permutations(range(4)))

    def test_size_mismatch_yields_empty(self, tetrahedron, tp10):
        out = find_intersection_preserving_bijections(
            intersection_matrix(tetrahedron), intersection_matrix(tp10)
        )
        assert out == []

    def test_limit(self, tetrahedron):
        M = intersection_matrix(tetrahedron)
        assert len(find_intersection_preserving_bijections(M, M, limit=5)) == 5

    def test_lexicographic_order(self, tp10):
        M = intersection_matrix(tp10)
        found = [g.forward for g in find_intersection_preserving_bijections(M, M)]
        assert found == sorted(found)
        assert found[0] == tuple(range(10))

    def test_tp10_contains_fan_band_swap(self, tp10):
        M = intersection_matrix(tp10)
        found = find_intersection_preserving_bijections(M, M)
        assert TP10_SWAP in found

    def test_search_agrees_with_brute_force(self, corpus):
        # Independent oracle: filter raw permutations through the
        # definition-level check.
        for name, K in corpus:
            if K.n > 8:
                continue
            M = intersection_matrix(K)
            brute = [
                perm
                for perm in permutations(range(K.n))
                if is_intersection_preserving(K, K, TriangleBijection(perm))
            ]
            found = [g.forward for g in find_intersection_preserving_bijections(M, M)]
            assert found == brute, name

    def test_found_iff_preserving(self, tp10):
        M = intersection_matrix(tp10)
        found = {g.forward for g in find_intersection_preserving_bijections(M, M)}
        rng = random.Random(11)
        for _ in range(50):
            perm = list(range(10))
            rng.shuffle(perm)
            g = TriangleBijection(tuple(perm))
            assert (g.forward in found) == is_intersection_preserving(tp10, tp10, g)


class TestCompositionAlgebra:
    def test_compose_and_inverse_preserve(self, tp10):
        M = intersection_matrix(tp10)
        found = find_intersection_preserving_bijections(M, M)
        rng = random.Random(5)
        for _ in range(25):
            f, g = rng.choice(found), rng.choice(found)
            assert is_intersection_preserving(tp10, tp10, g.compose(f))
            assert is_intersection_preserving(tp10, tp10, f.inverse())

    def test_identity_composition(self):
        f = TriangleBijection((2, 0, 1))
        assert f.compose(f.inverse()).forward == (0, 1, 2)

    def test_rejects_non_permutation(self):
        with pytest.raises(MappingError):
            TriangleBijection((0, 0, 1))


class TestExtension:
    def test_identity_on_tp10_extends_to_identity(self, tp10):
        result = extend_to_simplicial(tp10, tp10, TriangleBijection.identity(10))
        assert isinstance(result, Extended)
        assert result.vertex_map == {v: v for v in tp10.vertices()}

    def test_tetrahedron_extensions_are_vertex_permutations(self, tetrahedron):
        M = intersection_matrix(tetrahedron)
        seen = set()
        for g in find_intersection_preserving_bijections(M, M):
            result = extend_to_simplicial(tetrahedron, tetrahedron, g)
            assert isinstance(result, Extended)
            seen.add(tuple(sorted(result.vertex_map.items())))
        assert len(seen) == 24  # the full vertex permutation group of a,b,c,d

    def test_tp10_swap_is_non_extendable(self, tp10):
        result = extend_to_simplicial(tp10, tp10, TP10_SWAP)
        assert isinstance(result, NonExtendable)
        # Every vertex star maps onto the band cycle whose triangles have
        # empty common intersection, so the lowest label wins.
        assert result.witness_vertex == "a0"

    def test_extended_reproduces_bijection_trianglewise(self, octahedron):
        M = intersection_matrix(octahedron)
        for g in find_intersection_preserving_bijections(M, M, limit=10):
            result = extend_to_simplicial(octahedron, octahedron, g)
            assert isinstance(result, Extended)
            h = result.vertex_map
            for i, t in enumerate(octahedron.triangles):
                image = frozenset(h[v] for v in t.vertices)
                assert image == octahedron.triangles[g(i)].vertex_set

    def test_rejects_non_preserving_map(self, tp10):
        forward = list(range(10))
        forward[0], forward[5] = 5, 0
        with pytest.raises(MappingError):
            extend_to_simplicial(tp10, tp10, TriangleBijection(tuple(forward)))

    def test_rejects_open_complexes(self):
        fan = disk_fan(5)
        with pytest.raises(SurfaceError):
            extend_to_simplicial(fan, fan, TriangleBijection.identity(5))


class TestTextFormats:
    def test_matrix_round_trip(self, corpus):
        for _, K in corpus:
            M = intersection_matrix(K)
            assert parse_matrix(serialize_matrix(M)).entries == M.entries

    def test_matrix_parse_errors(self):
        with pytest.raises(ParseError):
            parse_matrix("")
        with pytest.raises(ParseError):
            parse_matrix("2\n2 1\n")  # missing a row
        with pytest.raises(ParseError):
            parse_matrix("1\nx\n")
        with pytest.raises(ParseError):
            parse_matrix("2\n2 9\n9 2\n")  # entry outside range

    def test_bijection_round_trip(self):
        f = TriangleBijection((3, 1, 0, 2))
        assert parse_bijection(serialize_bijection(f)) == f

    def test_bijection_parse_errors(self):
        with pytest.raises(ParseError):
            parse_bijection("")
        with pytest.raises(ParseError):
            parse_bijection("0 0 1\n")
        with pytest.raises(ParseError):
            parse_bijection("a b\n")
