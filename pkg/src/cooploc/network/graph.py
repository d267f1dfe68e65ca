"""Time-varying undirected VANET graph built from vehicle positions."""

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph
from scipy.spatial import distance

from cooploc.errors import ConfigError

Edge = tuple[int, int]


@dataclass(frozen=True, eq=False)
class GraphSnapshot:
    """Undirected graph of N vehicles at one tick.

    Edges are stored as ordered pairs ``(i, j)`` with ``i < j``. Degree,
    adjacency and Laplacian matrices are derived once at construction and
    satisfy ``L = D − A``.
    """

    n_vertices: int
    edges: frozenset[Edge]
    degree: np.ndarray = field(init=False, repr=False)
    adjacency: np.ndarray = field(init=False, repr=False)
    laplacian: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        """Derive D, A and L from the edge set."""
        n = self.n_vertices
        if n < 1:
            raise ConfigError(f"Graph needs at least one vertex, got {n}")

        adjacency = np.zeros((n, n), dtype=int)
        for i, j in self.edges:
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise ConfigError(f"Invalid edge ({i}, {j}) for {n} vertices")
            adjacency[i, j] = 1
            adjacency[j, i] = 1

        degree = np.diag(adjacency.sum(axis=1))
        for name, matrix in (
            ("adjacency", adjacency),
            ("degree", degree),
            ("laplacian", (degree - adjacency).astype(float)),
        ):
            matrix.setflags(write=False)
            object.__setattr__(self, name, matrix)

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[Edge]) -> "GraphSnapshot":
        """Build a graph from any iterable of vertex pairs, in either order."""
        normalized = frozenset((min(i, j), max(i, j)) for i, j in edges)
        return cls(n_vertices=n_vertices, edges=normalized)

    @property
    def degrees(self) -> np.ndarray:
        """Vector of vertex degrees d_i."""
        return np.diag(self.degree).copy()

    def neighbors(self, vertex: int) -> list[int]:
        """Sorted neighbour list N(i) of a vertex."""
        return [int(j) for j in np.flatnonzero(self.adjacency[vertex])]

    def directed_edges(self) -> list[Edge]:
        """Both orientations (i, j) and (j, i) of every edge, sorted."""
        return sorted([(i, j) for i, j in self.edges] + [(j, i) for i, j in self.edges])

    def subgraph(self, vertices: Iterable[int]) -> "GraphSnapshot":
        """Induced subgraph, with vertices renumbered in the given order."""
        order = list(vertices)
        index = {vertex: local for local, vertex in enumerate(order)}
        edges = [
            (index[i], index[j])
            for i, j in self.edges
            if i in index and j in index
        ]
        return GraphSnapshot.from_edges(len(order), edges)

    def same_edges(self, other: "GraphSnapshot") -> bool:
        """Check whether two snapshots share vertex count and edge set."""
        return self.n_vertices == other.n_vertices and self.edges == other.edges


@dataclass(frozen=True)
class Component:
    """One connected component of a graph."""

    vertices: tuple[int, ...]

    @property
    def is_isolated(self) -> bool:
        """A single vehicle with no neighbours."""
        return len(self.vertices) == 1


def build_connectivity(
    positions: np.ndarray, radius: float, max_degree: int
) -> GraphSnapshot:
    """Connect vehicles closer than radius, capping every vertex degree.

    Candidate edges are admitted in ascending order of length (ties broken by
    vertex ids); an edge is skipped when either endpoint already has
    max_degree neighbours.

    Args:
        positions: (N, 2) array of planar positions
        radius: Communication range; pairs at distance < radius are candidates
        max_degree: Maximum number of neighbours per vehicle

    Returns:
        GraphSnapshot over the N vehicles

    Raises:
        ConfigError: On non-finite coordinates or invalid radius/max_degree
    """
    points = np.asarray(positions, dtype=float)
    if points.ndim != 2 or points.shape[1] != 2 or points.shape[0] < 1:
        raise ConfigError(f"Positions must be an (N, 2) array with N ≥ 1, got {points.shape}")
    if not np.all(np.isfinite(points)):
        raise ConfigError("Positions contain non-finite coordinates")
    if not radius > 0:
        raise ConfigError(f"Radius must be positive, got {radius}")
    if max_degree < 1:
        raise ConfigError(f"max_degree must be ≥ 1, got {max_degree}")

    n = points.shape[0]
    if n == 1:
        return GraphSnapshot(n_vertices=1, edges=frozenset())

    rows, cols = np.triu_indices(n, k=1)
    lengths = distance.pdist(points)
    candidates = np.flatnonzero(lengths < radius)
    # primary key length, then i, then j
    order = candidates[np.lexsort((cols[candidates], rows[candidates], lengths[candidates]))]

    degree = np.zeros(n, dtype=int)
    admitted: list[Edge] = []
    for k in order:
        i, j = int(rows[k]), int(cols[k])
        if degree[i] >= max_degree or degree[j] >= max_degree:
            continue
        admitted.append((i, j))
        degree[i] += 1
        degree[j] += 1

    return GraphSnapshot(n_vertices=n, edges=frozenset(admitted))


def connected_components(graph: GraphSnapshot) -> list[Component]:
    """Partition the vertices into connected components.

    Components are returned sorted by their smallest vertex, each with its
    vertices in ascending order.
    """
    matrix = sparse.csr_matrix(graph.adjacency)
    count, labels = csgraph.connected_components(matrix, directed=False)
    groups = [np.flatnonzero(labels == label) for label in range(count)]
    components = [Component(tuple(int(v) for v in group)) for group in groups]
    return sorted(components, key=lambda component: component.vertices[0])
