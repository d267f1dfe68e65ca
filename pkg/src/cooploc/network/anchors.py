"""Laplacian extended with anchor indicator rows."""

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from cooploc.errors import ConfigError
from cooploc.network.graph import GraphSnapshot


@dataclass(frozen=True, eq=False)
class AnchoredLaplacian:
    """(N+α)×N matrix L̃: the Laplacian rows followed by one row e_i per anchor.

    Anchor rows appear in ``anchor_ids`` order and are scaled by
    ``anchor_weight`` (1 reproduces the unweighted stacking).
    """

    base: GraphSnapshot
    anchor_ids: tuple[int, ...]
    anchor_weight: float = 1.0
    matrix: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        """Stack L over the anchor indicator rows."""
        n = self.base.n_vertices
        indicators = np.zeros((len(self.anchor_ids), n))
        indicators[np.arange(len(self.anchor_ids)), list(self.anchor_ids)] = self.anchor_weight
        matrix = np.vstack([self.base.laplacian, indicators])
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def n_anchors(self) -> int:
        """Number of anchors α."""
        return len(self.anchor_ids)


def extend_with_anchors(
    graph: GraphSnapshot, anchor_ids: Sequence[int], anchor_weight: float = 1.0
) -> AnchoredLaplacian:
    """Append anchor indicator rows to the graph Laplacian.

    Args:
        graph: Graph whose Laplacian is extended
        anchor_ids: Vertices with known absolute coordinates, in row order
        anchor_weight: Scale of the anchor rows

    Returns:
        AnchoredLaplacian of shape (N+α)×N

    Raises:
        ConfigError: If no anchors are given (L alone is singular), an id is
            out of range, or the weight is not positive
    """
    ids = tuple(int(anchor) for anchor in anchor_ids)
    if not ids:
        raise ConfigError("At least one anchor is required: the Laplacian is singular")
    for anchor in ids:
        if not 0 <= anchor < graph.n_vertices:
            raise ConfigError(f"Anchor id {anchor} out of range 0..{graph.n_vertices - 1}")
    if not anchor_weight > 0:
        raise ConfigError(f"Anchor weight must be positive, got {anchor_weight}")
    return AnchoredLaplacian(base=graph, anchor_ids=ids, anchor_weight=float(anchor_weight))
