"""Merging layer subspaces into one representative subspace.

The merged operator is ``sum_i L_i - alpha_i * U_i U_i'`` where L_i is the
normalized Laplacian of layer i and U_i its k-column spectral embedding.
Minimizing the connectivity term alone would average the layers; the
subtracted projector term additionally pulls the solution toward the
individual layer subspaces, weighted by alpha.  The minimizer under
orthonormality constraints is the smallest-k eigenspace of the merged
operator.

The merged operator is *not* a Laplacian: it is generally indefinite, so
nothing downstream may assume its smallest eigenvalue is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import AlphaLengthMismatchError
from .graph import MultiLayerGraph, normalized_laplacian
from .subspace import Embedding, spectral_embedding


@dataclass(frozen=True)
class MergeConfig:
    """Target cluster count and per-layer regularization weight(s).

    ``alpha`` is either one scalar applied to every layer or a length-M
    sequence of per-layer weights; all entries must be >= 0.
    """

    k: int
    alpha: float | Sequence[float] = 0.5

    def alphas_for(self, num_layers: int) -> np.ndarray:
        arr = np.atleast_1d(np.asarray(self.alpha, dtype=np.float64))
        if arr.ndim != 1:
            raise AlphaLengthMismatchError("alpha must be a scalar or flat vector")
        if arr.shape[0] == 1:
            arr = np.full(num_layers, arr[0])
        elif arr.shape[0] != num_layers:
            raise AlphaLengthMismatchError(
                f"alpha has {arr.shape[0]} entries for {num_layers} layers"
            )
        if np.any(arr < 0):
            raise AlphaLengthMismatchError("alpha entries must be >= 0")
        return arr


def layer_embeddings(mlg: MultiLayerGraph, k: int) -> list[Embedding]:
    """Spectral embedding of every layer at the shared target dimension."""
    return [spectral_embedding(normalized_laplacian(g), k) for g in mlg.layers]


def modified_laplacian(
    mlg: MultiLayerGraph,
    cfg: MergeConfig,
    embeddings: Sequence[Embedding] | None = None,
) -> np.ndarray:
    """Merged operator sum_i L_i - alpha_i U_i U_i' (symmetric, possibly indefinite).

    Precomputed layer embeddings may be passed to avoid repeated eigensolves
    (an alpha sweep reuses them); they must match ``layer_embeddings(mlg, cfg.k)``.
    """
    alphas = cfg.alphas_for(mlg.num_layers)
    if embeddings is None:
        embeddings = layer_embeddings(mlg, cfg.k)
    out = np.zeros((mlg.n, mlg.n))
    for g, u, alpha in zip(mlg.layers, embeddings, alphas):
        out += normalized_laplacian(g)
        if alpha != 0.0:
            proj = u.matrix @ u.matrix.T
            out -= alpha * ((proj + proj.T) / 2.0)
    return out


def representative_subspace(
    mlg: MultiLayerGraph,
    cfg: MergeConfig,
    embeddings: Sequence[Embedding] | None = None,
) -> Embedding:
    """Smallest-k eigenspace of the merged operator."""
    merged = modified_laplacian(mlg, cfg, embeddings=embeddings)
    return spectral_embedding(merged, cfg.k)


def merge_objective(
    u: Embedding,
    mlg: MultiLayerGraph,
    cfg: MergeConfig,
    embeddings: Sequence[Embedding] | None = None,
) -> float:
    """Value of the merging objective at u.

    ``sum_i tr(u' L_i u) + sum_i alpha_i (k - tr(u u' U_i U_i'))``; with
    scalar alpha this is the connectivity term plus alpha times the squared
    multi-subspace distance.
    """
    alphas = cfg.alphas_for(mlg.num_layers)
    if embeddings is None:
        embeddings = layer_embeddings(mlg, cfg.k)
    total = 0.0
    for g, layer_u, alpha in zip(mlg.layers, embeddings, alphas):
        lap = normalized_laplacian(g)
        total += float(np.trace(u.matrix.T @ lap @ u.matrix))
        cross = u.matrix.T @ layer_u.matrix
        total += alpha * (cfg.k - float(np.sum(cross * cross)))
    return total
