"""Weighted undirected graphs, multi-layer graphs, and Laplacian construction.

Adjacency is held as a dense symmetric matrix; at the target scale
(a few thousand vertices) this is simpler and fast enough, and the
spectral routines convert to sparse storage internally when it pays off.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import IsolatedVertexError


@dataclass(frozen=True)
class Graph:
    """One layer: symmetric nonnegative weights, zero diagonal."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64)
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.weights.shape[0]


@dataclass(frozen=True)
class MultiLayerGraph:
    """Ordered graph layers over a shared vertex set."""

    layers: tuple[Graph, ...]

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        if not self.layers:
            raise ValueError("a multi-layer graph needs at least one layer")
        sizes = {g.n for g in self.layers}
        if len(sizes) != 1:
            raise ValueError(f"layers disagree on vertex count: {sorted(sizes)}")

    @property
    def n(self) -> int:
        return self.layers[0].n

    @property
    def num_layers(self) -> int:
        return len(self.layers)


@dataclass(frozen=True)
class Partition:
    """Assignment of n vertices to clusters 0..k-1 (empty clusters allowed)."""

    labels: np.ndarray
    k: int

    def __post_init__(self):
        labels = np.asarray(self.labels, dtype=np.int64)
        object.__setattr__(self, "labels", labels)
        if self.k < 1:
            raise ValueError(f"cluster count must be >= 1, got {self.k}")
        if labels.ndim != 1:
            raise ValueError("labels must be a flat vector")
        if self.k > labels.shape[0]:
            raise ValueError(f"k={self.k} exceeds n={labels.shape[0]}")
        if labels.size and (labels.min() < 0 or labels.max() >= self.k):
            raise ValueError(f"labels must lie in [0, {self.k})")

    @property
    def n(self) -> int:
        return self.labels.shape[0]

    def used_clusters(self) -> np.ndarray:
        return np.unique(self.labels)


def validate_graph(g: Graph) -> list[str]:
    """Return a list of invariant violations; empty means the graph is valid."""
    w = g.weights
    violations = []
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        return [f"weights must be square, got shape {w.shape}"]
    if w.shape[0] < 1:
        violations.append("vertex count must be >= 1")
        return violations
    asym = np.argwhere(w != w.T)
    for i, j in asym[:10]:
        if i < j:
            violations.append(f"asymmetry at ({i},{j}): {w[i, j]!r} != {w[j, i]!r}")
    neg = np.argwhere(w < 0)
    for i, j in neg[:10]:
        violations.append(f"negative weight at ({i},{j}): {w[i, j]!r}")
    diag = np.flatnonzero(np.diagonal(w))
    for i in diag[:10]:
        violations.append(f"nonzero diagonal at {i}: {w[i, i]!r}")
    return violations


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability over edges with nonzero weight."""
    n = g.n
    if n == 1:
        return True
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    w = g.weights
    while queue:
        v = queue.popleft()
        for u in np.flatnonzero(w[v]):
            if not seen[u]:
                seen[u] = True
                queue.append(u)
    return bool(seen.all())


def degree_vector(g: Graph) -> np.ndarray:
    """Per-vertex sum of incident edge weights."""
    return g.weights.sum(axis=1)


def normalized_adjacency(g: Graph) -> np.ndarray:
    """D^{-1/2} W D^{-1/2}; raises IsolatedVertexError on a zero degree."""
    d = degree_vector(g)
    zero = np.flatnonzero(d == 0)
    if zero.size:
        raise IsolatedVertexError(int(zero[0]))
    s = 1.0 / np.sqrt(d)
    a = g.weights * np.outer(s, s)
    # enforce exact symmetry; float rounding of s_i*w*s_j is order-dependent
    return (a + a.T) / 2.0


def normalized_laplacian(g: Graph) -> np.ndarray:
    """Symmetric normalized Laplacian D^{-1/2}(D - W)D^{-1/2}.

    All eigenvalues lie in [0, 2]; when the graph is connected the smallest
    is 0 with eigenvector proportional to D^{1/2} 1.
    """
    a = normalized_adjacency(g)
    lap = -a
    np.fill_diagonal(lap, 1.0 - np.diagonal(a))
    return lap
