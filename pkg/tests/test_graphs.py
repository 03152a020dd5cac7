"""Graph constructors: orders, valencies, adjacency rules, products.

networkx serves as the independent oracle for structural properties; the
constructors under test never call it.
"""

from itertools import combinations
from math import comb

import networkx as nx
import pytest

from rooklab.graphs import (Graph, cartesian_product, complete_bipartite,
                            complete_graph, cube_graph, cycle_graph,
                            induced_subgraph, johnson_graph, sr_graph,
                            sr_order, sr_vertices, subgraph_on_labels)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


class TestSRVertices:
    def test_count_matches_stars_and_bars(self):
        for m in range(1, 7):
            for n in range(0, 7):
                assert len(sr_vertices(m, n)) == comb(n + m - 1, n)
                assert sr_order(m, n) == comb(n + m - 1, n)

    def test_lexicographic_order(self):
        vs = sr_vertices(3, 4)
        assert vs == sorted(vs)
        assert vs[0] == (0, 0, 4)
        assert vs[-1] == (4, 0, 0)

    def test_sums_and_nonnegativity(self):
        for v in sr_vertices(4, 5):
            assert sum(v) == 5
            assert min(v) >= 0

    def test_degenerate_shapes(self):
        assert sr_vertices(0, 0) == [()]
        assert sr_vertices(0, 3) == []
        assert sr_vertices(1, 5) == [(5,)]

    def test_negative_parameters_rejected(self):
        with pytest.raises(ValueError):
            sr_vertices(-1, 2)
        with pytest.raises(ValueError):
            sr_vertices(2, -1)


class TestSRGraph:
    def test_adjacency_is_two_coordinate_difference(self):
        g = sr_graph(3, 3)
        for i, u in enumerate(g.labels):
            for j, v in enumerate(g.labels):
                differ = sum(1 for a, b in zip(u, v) if a != b)
                assert g.has_edge(i, j) == (differ == 2)

    def test_regular_of_valency_n_times_m_minus_1(self):
        for m in range(2, 6):
            for n in range(1, 5):
                g = sr_graph(m, n)
                assert set(g.degrees()) == {n * (m - 1)}

    def test_small_cases_are_complete_graphs(self):
        # One coordinate: a single vertex.  Two coordinates: any two
        # distinct vertices differ in both, so SR(2,n) = K_{n+1}.
        assert sr_graph(1, 7).order == 1
        g = sr_graph(2, 4)
        assert g.order == 5
        assert all(d == 4 for d in g.degrees())
        # n=1: the m unit vectors pairwise differ in two coordinates.
        g = sr_graph(5, 1)
        assert nx.is_isomorphic(to_nx(g), nx.complete_graph(5))

    def test_family_tagging(self):
        g = sr_graph(4, 3)
        assert g.family == "sr"
        assert g.params == (4, 3)

    def test_connected(self):
        for m, n in ((3, 3), (4, 2), (5, 3)):
            assert nx.is_connected(to_nx(sr_graph(m, n)))


class TestJohnson:
    def test_order_and_valency(self):
        for v in range(2, 8):
            for n in range(1, v):
                g = johnson_graph(v, n)
                assert g.order == comb(v, n)
                assert set(g.degrees()) == {n * (v - n)}

    def test_adjacency_is_intersection_size(self):
        g = johnson_graph(5, 2)
        for i, s in enumerate(g.labels):
            for j, t in enumerate(g.labels):
                if i == j:
                    continue
                assert g.has_edge(i, j) == (len(set(s) & set(t)) == 1)

    def test_j_v_1_is_complete(self):
        assert nx.is_isomorphic(to_nx(johnson_graph(6, 1)), nx.complete_graph(6))

    def test_j_4_2_is_octahedron(self):
        assert nx.is_isomorphic(to_nx(johnson_graph(4, 2)),
                                nx.octahedral_graph())

    def test_triangular_graph(self):
        # J(v,2) is the line graph of K_v.
        for v in (4, 5, 6):
            assert nx.is_isomorphic(to_nx(johnson_graph(v, 2)),
                                    nx.line_graph(nx.complete_graph(v)))


class TestStandardGraphs:
    def test_complete(self):
        g = complete_graph(6)
        assert g.edge_count() == 15
        assert set(g.degrees()) == {5}

    def test_complete_bipartite(self):
        g = complete_bipartite(3, 4)
        assert g.order == 7
        assert g.edge_count() == 12
        assert nx.is_isomorphic(to_nx(g), nx.complete_bipartite_graph(3, 4))

    def test_cycle(self):
        g = cycle_graph(7)
        assert nx.is_isomorphic(to_nx(g), nx.cycle_graph(7))

    def test_cube(self):
        for d in range(1, 5):
            assert nx.is_isomorphic(to_nx(cube_graph(d)), nx.hypercube_graph(d))

    def test_cartesian_product(self):
        g, h = cycle_graph(4), complete_graph(3)
        p = cartesian_product(g, h)
        assert p.order == 12
        assert nx.is_isomorphic(
            to_nx(p), nx.cartesian_product(nx.cycle_graph(4), nx.complete_graph(3)))

    def test_cube_is_iterated_product(self):
        k2 = complete_graph(2)
        q3 = cartesian_product(cartesian_product(k2, k2), k2)
        assert nx.is_isomorphic(to_nx(q3), to_nx(cube_graph(3)))


class TestGraphOps:
    def test_complement(self):
        g = sr_graph(3, 2)
        c = g.complement()
        assert nx.is_isomorphic(to_nx(c), nx.complement(to_nx(g)))

    def test_complement_involution(self):
        g = sr_graph(3, 3)
        assert g.complement().complement().rows == g.rows

    def test_neighbors_match_rows(self):
        g = sr_graph(3, 3)
        for u in range(g.order):
            assert set(g.neighbors(u)) == {v for v in range(g.order)
                                           if g.has_edge(u, v)}

    def test_induced_subgraph(self):
        g = sr_graph(3, 3)
        idx = [0, 2, 4, 6, 8]
        h = induced_subgraph(g, idx)
        assert h.order == 5
        for a, i in enumerate(idx):
            for b, j in enumerate(idx):
                assert h.has_edge(a, b) == g.has_edge(i, j)
        assert list(h.labels) == [g.labels[i] for i in idx]

    def test_subgraph_on_labels(self):
        g = sr_graph(3, 2)
        labs = [(2, 0, 0), (0, 2, 0), (0, 0, 2)]
        h = subgraph_on_labels(g, labs)
        assert h.order == 3
        assert h.edge_count() == 3  # the three doubled vertices form a triangle

    def test_adjacency_matrix(self):
        g = sr_graph(3, 2)
        a = g.adjacency_matrix()
        assert all(a[i][j] == int(g.has_edge(i, j))
                   for i in range(g.order) for j in range(g.order))

    def test_from_edges_roundtrip(self):
        g = Graph.from_edges(["a", "b", "c", "d"],
                             [("a", "b"), ("b", "c"), ("c", "d")])
        assert g.order == 4
        assert g.edge_count() == 3
        assert g.has_edge(0, 1) and not g.has_edge(0, 2)
