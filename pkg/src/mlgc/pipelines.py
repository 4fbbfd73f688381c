"""Clustering pipelines: single-layer spectral clustering, the subspace-merging
multi-layer method, and the two summation baselines.

Every pipeline ends the same way: row-normalize an n x k embedding and run
seeded k-means on the rows.  They differ only in which operator produces
the embedding:

    sc_single   normalized Laplacian of one layer
    sc_sum      Laplacian of the summed normalized adjacencies
    sc_ksum     top-k eigenspace of the summed rank-k spectral kernels
    sc_ml       smallest-k eigenspace of the merged (modified) operator
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

import numpy as np

from .eigen import smallest_k_eigenpairs
from .graph import Graph, MultiLayerGraph, Partition, normalized_adjacency, normalized_laplacian
from .kmeans import ClusterResult, KMeansConfig, kmeans
from .merge import MergeConfig, layer_embeddings, representative_subspace
from .metrics import nmi, purity, rand_index
from .subspace import Embedding, row_normalize, spectral_embedding

_METRICS = {"nmi": nmi, "purity": purity, "ri": rand_index}


def _cluster_embedding(u: Embedding, kmcfg: KMeansConfig, method: str) -> ClusterResult:
    rows, _ = row_normalize(u)
    result = kmeans(rows, kmcfg)
    return dataclasses.replace(result, method=method)


def sc_single(g: Graph, k: int, kmcfg: KMeansConfig) -> ClusterResult:
    """Normalized spectral clustering of one graph layer."""
    u = spectral_embedding(normalized_laplacian(g), k)
    return _cluster_embedding(u, kmcfg, "sc-single")


def sc_sum(mlg: MultiLayerGraph, k: int, kmcfg: KMeansConfig) -> ClusterResult:
    """Spectral clustering of the summed normalized adjacencies."""
    combined = np.zeros((mlg.n, mlg.n))
    for g in mlg.layers:
        combined += normalized_adjacency(g)
    np.clip(combined, 0.0, None, out=combined)  # scrub negative rounding residue
    np.fill_diagonal(combined, 0.0)
    result = sc_single(Graph(weights=combined), k, kmcfg)
    return dataclasses.replace(result, method="sc-sum")


def sc_ksum(mlg: MultiLayerGraph, k: int, kmcfg: KMeansConfig) -> ClusterResult:
    """Spectral clustering of the summed spectral kernels sum_i U_i U_i'.

    The kernel is a similarity operator, so the useful eigenspace is the
    top-k one; it is extracted as the smallest-k eigenspace of the negated
    kernel.
    """
    kernel = np.zeros((mlg.n, mlg.n))
    for u in layer_embeddings(mlg, k):
        proj = u.matrix @ u.matrix.T
        kernel += (proj + proj.T) / 2.0
    top = smallest_k_eigenpairs(-kernel, k)
    u = Embedding(matrix=top.vectors)
    result = _cluster_embedding(u, kmcfg, "sc-ksum")
    return result


def sc_ml(mlg: MultiLayerGraph, cfg: MergeConfig, kmcfg: KMeansConfig) -> ClusterResult:
    """Multi-layer clustering through the merged representative subspace."""
    u = representative_subspace(mlg, cfg)
    return _cluster_embedding(u, kmcfg, "sc-ml")


def sc_single_all(
    mlg: MultiLayerGraph,
    k: int,
    kmcfg: KMeansConfig,
    truth: Partition | None = None,
    metric: str = "nmi",
) -> tuple[list[ClusterResult], int]:
    """Run sc_single on every layer; return all results and the best layer index.

    With ground truth the best layer maximizes the requested metric;
    without it the lowest k-means objective wins.  Ties go to the lowest
    layer index.
    """
    if metric not in _METRICS:
        raise ValueError(f"unknown metric {metric!r}; expected one of {sorted(_METRICS)}")
    results = [sc_single(g, k, kmcfg) for g in mlg.layers]
    if truth is not None:
        scores = [_METRICS[metric](r.partition, truth) for r in results]
        best = max(range(len(results)), key=lambda i: (scores[i], -i))
    else:
        best = min(range(len(results)), key=lambda i: (results[i].objective, i))
    return results, best
