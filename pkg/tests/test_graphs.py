import pytest

from indcomp.graphs import Graph, GraphError, bits, residual


class TestConstruction:
    def test_empty_and_complete(self):
        assert Graph.empty(0).n == 0
        assert Graph.empty(5).edge_count == 0
        assert Graph.complete(4).edge_count == 6

    def test_from_edges(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert g.has_edge(0, 1) and g.has_edge(1, 2) and not g.has_edge(0, 2)

    def test_rejects_loop(self):
        with pytest.raises(GraphError, match="loop"):
            Graph.from_edges(2, [(1, 1)])
        with pytest.raises(GraphError, match="loop"):
            Graph(1, (1,))

    def test_rejects_asymmetric(self):
        with pytest.raises(GraphError, match="asymmetric"):
            Graph(2, (0b10, 0b00))

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 2)])
        with pytest.raises(GraphError, match="references vertices"):
            Graph(1, (0b10,))
        with pytest.raises(GraphError):
            Graph(65, (0,) * 65)

    def test_immutable(self):
        g = Graph.empty(2)
        with pytest.raises(AttributeError):
            g.n = 3

    def test_equality_and_hash(self):
        assert Graph.cycle(4) == Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert hash(Graph.path(3)) == hash(Graph.path(3))
        assert Graph.path(3) != Graph.empty(3)


class TestNeighborhoods:
    def test_closed_neighborhood_on_cycle(self):
        c5 = Graph.cycle(5)
        assert c5.closed_neighborhood(0) == 0b10011  # {4, 0, 1}

    def test_closed_neighborhood_isolated(self):
        g = Graph.empty(3)
        assert g.closed_neighborhood(1) == 0b010

    def test_closed_neighborhood_triangle(self):
        k3 = Graph.complete(3)
        for v in range(3):
            assert k3.closed_neighborhood(v) == 0b111

    def test_out_of_range(self):
        with pytest.raises(GraphError, match="out of range"):
            Graph.empty(2).closed_neighborhood(2)

    def test_closed_neighborhood_of_set(self):
        p4 = Graph.path(4)
        assert p4.closed_neighborhood_of_set(0b1001) == 0b1111

    def test_is_independent(self):
        c5 = Graph.cycle(5)
        assert c5.is_independent(0b00101)  # {0, 2}
        assert not c5.is_independent(0b00011)  # {0, 1} is an edge
        assert c5.is_independent(0)

    def test_isolated_vertices(self):
        g = Graph.from_edges(4, [(0, 1)])
        assert g.isolated_vertices() == 0b1100


class TestInduced:
    def test_induced_keeps_structure(self):
        c5 = Graph.cycle(5)
        sub, keep = c5.induced(0b01110)  # path 1-2-3
        assert keep == (1, 2, 3)
        assert sub == Graph.path(3)

    def test_add_vertex(self):
        g = Graph.path(2).add_vertex(0b01)
        assert g.n == 3 and g.has_edge(0, 2) and not g.has_edge(1, 2)


class TestResidual:
    def test_empty_arguments_identity(self):
        g = Graph.cycle(5)
        sub, keep = residual(g, 0, 0)
        assert sub == g and keep == (0, 1, 2, 3, 4)

    def test_remove_closed_neighborhood(self):
        sub, keep = residual(Graph.cycle(5), 0b1, 0)
        assert keep == (2, 3)
        assert sub == Graph.complete(2)

    def test_remove_vertex(self):
        sub, keep = residual(Graph.cycle(5), 0, 0b1)
        assert keep == (1, 2, 3, 4)
        assert sub == Graph.path(4)

    def test_rejects_overlap(self):
        with pytest.raises(GraphError, match="overlap"):
            residual(Graph.cycle(5), 0b1, 0b1)

    def test_rejects_dependent_x(self):
        with pytest.raises(GraphError, match="independent"):
            residual(Graph.cycle(5), 0b11, 0)

    def test_size_identities_across_corpus(self, corpus6):
        # |G - N[v]| = n - |N[v]| and |G - v| = n - 1 for every vertex
        for g in corpus6:
            for v in range(g.n):
                minus_nv, _ = residual(g, 1 << v, 0)
                assert minus_nv.n == g.n - bin(g.closed_neighborhood(v)).count("1")
                minus_v, _ = residual(g, 0, 1 << v)
                assert minus_v.n == g.n - 1


def test_bits_helper():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert list(bits(0)) == []
