"""Tests for VANET graph construction and components."""

import math

import numpy as np
import pytest

from cooploc.errors import ConfigError
from cooploc.network.graph import (
    GraphSnapshot,
    build_connectivity,
    connected_components,
)
from tests.test_helpers import grid_positions, path_graph


def test_radius_rule_connects_close_pairs():
    """Only pairs closer than the radius are connected."""
    positions = np.array([[0.0, 0.0], [10.0, 0.0], [20.0, 0.0]])
    graph = build_connectivity(positions, radius=15.0, max_degree=6)
    assert graph.edges == frozenset({(0, 1), (1, 2)})


def test_pair_at_exact_radius_is_excluded():
    """Distance equal to the radius is not an edge."""
    positions = np.array([[0.0, 0.0], [10.0, 0.0]])
    graph = build_connectivity(positions, radius=10.0, max_degree=6)
    assert graph.edges == frozenset()


def test_degree_cap_admits_shortest_edges_first():
    """Greedy admission by length, ties broken by vertex ids."""
    positions = np.array([[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [3.0, 0.0]])
    graph = build_connectivity(positions, radius=10.0, max_degree=1)
    assert graph.edges == frozenset({(0, 1), (2, 3)})


def test_degree_cap_is_respected():
    """No vertex exceeds max_degree in a dense cluster."""
    positions = grid_positions(5, 5, spacing=3.0)
    graph = build_connectivity(positions, radius=20.0, max_degree=4)
    assert graph.degrees.max() <= 4


def test_laplacian_is_degree_minus_adjacency():
    """L = D − A, symmetric, with zero row sums."""
    graph = build_connectivity(grid_positions(3, 4), radius=12.0, max_degree=6)
    np.testing.assert_array_equal(graph.laplacian, graph.degree - graph.adjacency)
    np.testing.assert_array_equal(graph.laplacian, graph.laplacian.T)
    np.testing.assert_array_equal(graph.laplacian.sum(axis=1), 0.0)


def test_laplacian_is_positive_semidefinite():
    """Laplacian eigenvalues are non-negative."""
    graph = build_connectivity(grid_positions(4, 4), radius=15.0, max_degree=6)
    assert np.linalg.eigvalsh(graph.laplacian).min() >= -1e-9


def test_graph_matrices_are_read_only():
    """Derived matrices cannot be modified."""
    graph = path_graph(3)
    with pytest.raises(ValueError):
        graph.laplacian[0, 0] = 5.0


def test_single_vehicle_has_no_edges():
    """A lone vehicle gives an empty graph."""
    graph = build_connectivity(np.array([[1.0, 2.0]]), radius=20.0, max_degree=6)
    assert graph.n_vertices == 1
    assert graph.edges == frozenset()


def test_non_finite_positions_rejected():
    """NaN coordinates raise ConfigError."""
    with pytest.raises(ConfigError):
        build_connectivity(np.array([[0.0, 0.0], [np.nan, 1.0]]), radius=20.0, max_degree=6)


@pytest.mark.parametrize("radius, max_degree", [(0.0, 6), (20.0, 0)])
def test_invalid_parameters_rejected(radius, max_degree):
    """Radius and degree cap must be positive."""
    with pytest.raises(ConfigError):
        build_connectivity(grid_positions(2, 2), radius=radius, max_degree=max_degree)


def test_from_edges_normalizes_order():
    """Edges given as (j, i) are stored as (i, j)."""
    graph = GraphSnapshot.from_edges(3, [(2, 1), (0, 1)])
    assert graph.edges == frozenset({(0, 1), (1, 2)})
    assert graph.neighbors(1) == [0, 2]


def test_self_loop_rejected():
    """Self loops are invalid."""
    with pytest.raises(ConfigError):
        GraphSnapshot.from_edges(3, [(1, 1)])


def test_directed_edges_lists_both_orientations():
    """Every undirected edge appears in both directions."""
    assert path_graph(3).directed_edges() == [(0, 1), (1, 0), (1, 2), (2, 1)]


def test_subgraph_renumbers_vertices():
    """Induced subgraph uses local ids in the given order."""
    graph = path_graph(4)
    sub = graph.subgraph([3, 2])
    assert sub.n_vertices == 2
    assert sub.edges == frozenset({(0, 1)})


def test_same_edges():
    """same_edges compares vertex count and edge set."""
    assert path_graph(3).same_edges(path_graph(3))
    assert not path_graph(3).same_edges(path_graph(4))


def test_connected_components_sorted_by_smallest_vertex():
    """Components come out ordered, isolated vehicles flagged."""
    graph = GraphSnapshot.from_edges(6, [(4, 5), (0, 2), (2, 3)])
    components = connected_components(graph)
    assert [component.vertices for component in components] == [(0, 2, 3), (1,), (4, 5)]
    assert components[1].is_isolated
    assert not components[0].is_isolated


def _greedy_oracle(positions, radius, max_degree):
    """Admit pairs by (length, i, j) while both ends have spare degree."""
    n = len(positions)
    candidates = []
    for i in range(n):
        for j in range(i + 1, n):
            dx, dy = positions[j] - positions[i]
            length = math.sqrt(dx * dx + dy * dy)
            if length < radius:
                candidates.append((length, i, j))
    degree = [0] * n
    edges = set()
    for _, i, j in sorted(candidates):
        if degree[i] < max_degree and degree[j] < max_degree:
            edges.add((i, j))
            degree[i] += 1
            degree[j] += 1
    return frozenset(edges)


def test_degree_cap_on_a_line_matches_greedy_oracle():
    """Eight vehicles 5 m apart with max_degree 2 keep only the path."""
    positions = np.column_stack([np.arange(8) * 5.0, np.zeros(8)])
    graph = build_connectivity(positions, radius=20.0, max_degree=2)
    assert graph.edges == _greedy_oracle(positions, 20.0, 2)
    assert graph.edges == frozenset((i, i + 1) for i in range(7))


def test_random_graphs_match_greedy_oracle():
    """Greedy admission agrees with the enumeration on random scenes."""
    rng = np.random.default_rng(21)
    for _ in range(20):
        positions = rng.uniform(0.0, 60.0, size=(int(rng.integers(2, 30)), 2))
        max_degree = int(rng.integers(1, 6))
        graph = build_connectivity(positions, radius=20.0, max_degree=max_degree)
        assert graph.edges == _greedy_oracle(positions, 20.0, max_degree)


def _union_find_components(n, edges):
    """Partition of 0..n−1 by union-find with path halving."""
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, j in edges:
        parent[find(i)] = find(j)
    groups = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(group) for group in groups.values())


def test_components_match_union_find_oracle():
    """A random 50-vertex geometric graph splits like union-find says."""
    rng = np.random.default_rng(22)
    positions = rng.uniform(0.0, 200.0, size=(50, 2))
    graph = build_connectivity(positions, radius=25.0, max_degree=6)
    components = connected_components(graph)
    assert [c.vertices for c in components] == _union_find_components(50, graph.edges)
    assert len(components) > 1
