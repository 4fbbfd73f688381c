"""Spectral embeddings and subspace geometry.

An n-vertex graph layer is summarized by the span of the k eigenvectors
belonging to the smallest Laplacian eigenvalues; that span is a point on
the manifold of k-dimensional subspaces of R^n.  This module builds those
embeddings and measures how far apart two of them are.

The distance used throughout is the projection distance
``(sum_i sin^2 theta_i)^(1/2)`` over the principal angles theta_i.  Three
algebraically equivalent forms exist:

    angle form:      sqrt(sum sin^2 theta_i)
    trace form:      sqrt(k - tr(A A' B B'))
    Frobenius form:  sqrt(||A A' - B B'||_F^2 / 2)

We compute via the singular values of A'B (the principal-angle cosines),
using sin^2 = 1 - cos^2 so there is no precision loss near theta = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg

from .eigen import smallest_k_eigenpairs
from .errors import (
    DimensionMismatchError,
    EmptyLayerListError,
    NonpositiveSigmaError,
)


@dataclass(frozen=True)
class Embedding:
    """An n x k matrix with orthonormal columns; identified with its span."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.float64)
        object.__setattr__(self, "matrix", m)
        if m.ndim != 2:
            raise ValueError("embedding must be a 2-d matrix")
        n, k = m.shape
        if not 1 <= k < n:
            raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
        gram_gap = np.linalg.norm(m.T @ m - np.eye(k))
        if gram_gap > 1e-8:
            raise ValueError(f"columns not orthonormal, ||U'U - I||_F = {gram_gap:.3e}")

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def k(self) -> int:
        return self.matrix.shape[1]


@dataclass(frozen=True)
class PrincipalAngles:
    """Cosines of the principal angles, descending, clamped into [0, 1]."""

    cosines: np.ndarray

    def sines_squared(self) -> np.ndarray:
        return 1.0 - self.cosines**2


def spectral_embedding(laplacian: np.ndarray, k: int) -> Embedding:
    """Embedding from the k smallest-eigenvalue eigenvectors of a Laplacian."""
    n = laplacian.shape[0]
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    result = smallest_k_eigenpairs(laplacian, k)
    return Embedding(matrix=result.vectors)


def row_normalize(embedding: Embedding, eps: float = 1e-12) -> tuple[np.ndarray, list[int]]:
    """Scale each row to unit norm; rows with norm < eps stay zero.

    Returns the normalized matrix and the indices of the degenerate rows.
    """
    m = embedding.matrix
    norms = np.linalg.norm(m, axis=1)
    degenerate = norms < eps
    safe = np.where(degenerate, 1.0, norms)
    out = m / safe[:, None]
    out[degenerate] = 0.0
    return out, [int(i) for i in np.flatnonzero(degenerate)]


def _check_same_shape(a: Embedding, b: Embedding) -> None:
    if a.n != b.n or a.k != b.k:
        raise DimensionMismatchError(
            f"embeddings live in different spaces: ({a.n},{a.k}) vs ({b.n},{b.k})"
        )


def principal_angles(a: Embedding, b: Embedding) -> PrincipalAngles:
    """Principal-angle cosines = singular values of a'b, clamped into [0, 1]."""
    _check_same_shape(a, b)
    sigma = scipy.linalg.svdvals(a.matrix.T @ b.matrix)
    return PrincipalAngles(cosines=np.clip(sigma, 0.0, 1.0))


def projection_distance(a: Embedding, b: Embedding) -> float:
    """Projection distance between the spans of a and b."""
    sin_sq = principal_angles(a, b).sines_squared()
    return float(np.sqrt(max(0.0, sin_sq.sum())))


def multi_projection_distance_sq(u: Embedding, layers: Sequence[Embedding]) -> float:
    """Squared projection distance from u to a family of subspaces.

    Equals ``k*M - sum_i tr(u u' U_i U_i')``, i.e. the sum over layers of the
    squared pairwise distances.
    """
    if len(layers) == 0:
        raise EmptyLayerListError("need at least one layer subspace")
    for layer in layers:
        _check_same_shape(u, layer)
    total = u.k * len(layers)
    for layer in layers:
        cross = u.matrix.T @ layer.matrix
        total -= float(np.sum(cross * cross))  # tr(uu'UU') = ||u'U||_F^2
    return max(0.0, total)


def hsic_linear(a: Embedding, b: Embedding) -> float:
    """Linear-kernel dependence between the row distributions of a and b.

    Computed as tr(aa' bb'); complements the squared projection distance,
    summing with it to k.
    """
    _check_same_shape(a, b)
    cross = a.matrix.T @ b.matrix
    return float(np.sum(cross * cross))


def symmetrized_kl(a: Embedding, b: Embedding, sigma: float) -> float:
    """Symmetrized divergence between the flattened-Gaussian views of two spans.

    For ambient noise level sigma > 0 this is
    ``(2k - 2 tr(aa' bb')) / (2 sigma^2 (sigma^2 + 1))``, which is the squared
    projection distance scaled by 1 / (sigma^2 (sigma^2 + 1)).
    """
    if sigma <= 0:
        raise NonpositiveSigmaError(f"sigma must be positive, got {sigma}")
    _check_same_shape(a, b)
    trace = hsic_linear(a, b)
    return max(0.0, (2.0 * a.k - 2.0 * trace)) / (2.0 * sigma**2 * (sigma**2 + 1.0))
