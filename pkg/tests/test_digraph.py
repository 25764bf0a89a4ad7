"""Digraph value type, edge bookkeeping, and the edge-list format."""
import pytest
from hypothesis import given

from vsbgraph import (
    Digraph,
    DuplicateEdgeError,
    EdgeAbsentError,
    EdgeListSyntaxError,
    EdgeSubset,
    EmptyResultError,
    OutOfRangeError,
    SelfLoopError,
    parse_edge_list,
    serialize_edge_list,
)

from graphutil import complete_bidirected, digraphs, directed_cycle

C3_EDGES = [(0, 1), (1, 2), (2, 0)]


class TestBuild:
    def test_c3(self):
        g = Digraph(3, C3_EDGES)
        assert g.n == 3
        assert g.m == 3
        assert g.edges() == C3_EDGES

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoopError):
            Digraph(2, [(0, 0)])

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateEdgeError):
            Digraph(4, [(0, 1), (0, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(OutOfRangeError):
            Digraph(3, [(0, 3)])

    def test_adjacency_matches_edges(self):
        g = Digraph(3, C3_EDGES)
        assert g.out_neighbors(0) == {1}
        assert g.in_neighbors(0) == {2}
        assert g.has_edge(0, 1)
        assert not g.has_edge(1, 0)


class TestRemoveRestore:
    def test_remove(self):
        g = Digraph(3, C3_EDGES)
        g.remove_edge(0, 1)
        assert g.m == 2
        assert g.edges() == [(1, 2), (2, 0)]

    def test_remove_absent(self):
        g = Digraph(3, C3_EDGES)
        with pytest.raises(EdgeAbsentError):
            g.remove_edge(1, 0)

    def test_remove_then_re_add_restores_edge_set(self):
        g = Digraph(3, C3_EDGES)
        g.remove_edge(0, 1)
        g.add_edge(0, 1)
        assert set(g.edges()) == set(C3_EDGES)

    def test_restore_keeps_position(self):
        g = Digraph(3, C3_EDGES)
        g.remove_edge(1, 2)
        g.restore_edge(1, 2)
        assert g.edges() == C3_EDGES

    def test_restore_active_edge_fails(self):
        g = Digraph(3, C3_EDGES)
        with pytest.raises(DuplicateEdgeError):
            g.restore_edge(0, 1)

    @given(digraphs(min_n=2))
    def test_remove_drops_exactly_one(self, g):
        edges = g.edges()
        if not edges:
            return
        u, v = edges[0]
        before = g.m
        g.remove_edge(u, v)
        assert g.m == before - 1
        assert (u, v) not in g.edges()


class TestDeleteVertices:
    def test_single_deletion(self):
        g = Digraph(3, C3_EDGES)
        sub, kept = g.delete_vertices({2})
        assert sub.n == 2
        assert sub.edges() == [(0, 1)]
        assert kept == [0, 1]

    def test_empty_deletion_is_identity(self):
        g = Digraph(3, C3_EDGES)
        sub, kept = g.delete_vertices(set())
        assert sub == g
        assert kept == [0, 1, 2]

    def test_k4_pair_deletion(self):
        sub, kept = complete_bidirected(4).delete_vertices({0, 1})
        assert sub.n == 2
        assert set(sub.edges()) == {(0, 1), (1, 0)}
        assert kept == [2, 3]

    def test_delete_all_fails(self):
        g = Digraph(3, C3_EDGES)
        with pytest.raises(EmptyResultError):
            g.delete_vertices({0, 1, 2})

    @given(digraphs(min_n=2))
    def test_edge_count_formula(self, g):
        dropped = {0}
        sub, _ = g.delete_vertices(dropped)
        expected = sum(
            1 for u, v in g.edges() if u not in dropped and v not in dropped
        )
        assert sub.n == g.n - 1
        assert sub.m == expected


class TestUnderlyingUndirected:
    def test_c3_triangle(self):
        u = directed_cycle(3).underlying_undirected()
        assert u.m == 3
        assert u.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_antiparallel_collapse(self):
        u = complete_bidirected(4).underlying_undirected()
        assert u.m == 6

    def test_single_arc(self):
        u = Digraph(2, [(0, 1)]).underlying_undirected()
        assert u.edges() == [(0, 1)]

    @given(digraphs())
    def test_direction_erasure(self, g):
        reversed_g = Digraph(g.n, [(v, u) for u, v in g.edges()])
        assert g.underlying_undirected().edges() == (
            reversed_g.underlying_undirected().edges()
        )


class TestEdgeSubset:
    def test_membership_validated(self):
        g = Digraph(3, C3_EDGES)
        with pytest.raises(EdgeAbsentError):
            EdgeSubset(g, ((1, 0),))

    def test_iteration_order(self):
        g = Digraph(3, C3_EDGES)
        subset = EdgeSubset(g, ((2, 0), (0, 1)))
        assert list(subset) == [(2, 0), (0, 1)]
        assert (0, 1) in subset
        assert len(subset) == 2


class TestEdgeListFormat:
    def test_parse_c3(self):
        assert parse_edge_list("3 3\n0 1\n1 2\n2 0\n") == Digraph(3, C3_EDGES)

    def test_serialize_c3(self):
        assert serialize_edge_list(Digraph(3, C3_EDGES)) == "3 3\n0 1\n1 2\n2 0\n"

    def test_out_of_range_index(self):
        with pytest.raises(OutOfRangeError):
            parse_edge_list("3 1\n0 3\n")

    def test_comments_skipped(self):
        text = "# generated instance\n3 3\n0 1\n# middle\n1 2\n2 0\n"
        assert parse_edge_list(text) == Digraph(3, C3_EDGES)

    def test_malformed_header(self):
        with pytest.raises(EdgeListSyntaxError):
            parse_edge_list("3\n")

    def test_malformed_edge_line(self):
        with pytest.raises(EdgeListSyntaxError):
            parse_edge_list("2 1\n0  1\n")

    def test_wrong_edge_count(self):
        with pytest.raises(EdgeListSyntaxError):
            parse_edge_list("3 2\n0 1\n")

    def test_non_ascii_rejected(self):
        with pytest.raises(EdgeListSyntaxError):
            parse_edge_list("3 1\n0 ١\n")

    @given(digraphs())
    def test_round_trip(self, g):
        assert parse_edge_list(serialize_edge_list(g)) == g

    def test_serialize_after_parse_is_identity(self):
        text = "4 2\n0 1\n3 2\n"
        assert serialize_edge_list(parse_edge_list(text)) == text
