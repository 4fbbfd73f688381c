"""Seeded, restartable k-means on embedding rows.

Determinism is part of the contract: restart r always draws from a fresh
generator seeded with ``seed + r``, so a parallel implementation would
reproduce the serial result, and the best run is chosen by
(objective, restart index) so ties cannot reorder.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist

from .errors import TooFewPointsError
from .graph import Partition


@dataclass(frozen=True)
class KMeansConfig:
    k: int
    restarts: int = 20
    max_iters: int = 300
    seed: int = 0
    tol: float = 1e-10

    def __post_init__(self):
        if self.restarts < 1 or self.max_iters < 1 or self.tol < 0:
            raise ValueError("need restarts >= 1, max_iters >= 1, tol >= 0")


@dataclass(frozen=True)
class ClusterResult:
    partition: Partition
    objective: float
    restarts_summary: tuple[float, ...]
    method: str = "kmeans"


def _plus_plus_init(points: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = points.shape[0]
    centroids = np.empty((k, points.shape[1]))
    centroids[0] = points[rng.integers(n)]
    closest_sq = cdist(points, centroids[:1], "sqeuclidean")[:, 0]
    for j in range(1, k):
        total = closest_sq.sum()
        if total > 0:
            idx = rng.choice(n, p=closest_sq / total)
        else:  # remaining points coincide with chosen centers
            idx = rng.integers(n)
        centroids[j] = points[idx]
        new_sq = cdist(points, centroids[j : j + 1], "sqeuclidean")[:, 0]
        closest_sq = np.minimum(closest_sq, new_sq)
    return centroids


def _assign(points: np.ndarray, centroids: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    dist_sq = cdist(points, centroids, "sqeuclidean")
    labels = np.argmin(dist_sq, axis=1)  # ties resolve to the lowest cluster id
    return labels, dist_sq[np.arange(points.shape[0]), labels]


def _repair_empty(points, centroids, labels, point_dist_sq, k):
    """Re-seed each empty centroid at the point farthest from its own centroid."""
    present = np.bincount(labels, minlength=k)
    for c in np.flatnonzero(present == 0):
        farthest = int(np.argmax(point_dist_sq))
        labels[farthest] = c
        centroids[c] = points[farthest]
        point_dist_sq[farthest] = 0.0
        present[c] = 1
    return labels, centroids, point_dist_sq


def lloyd_run(
    points: np.ndarray, k: int, rng: np.random.Generator, max_iters: int, tol: float
) -> tuple[np.ndarray, float, list[float]]:
    """One seeded k-means run; returns (labels, objective, per-iteration objectives)."""
    centroids = _plus_plus_init(points, k, rng)
    labels, point_dist_sq = _assign(points, centroids)
    labels, centroids, point_dist_sq = _repair_empty(points, centroids, labels, point_dist_sq, k)
    objective = float(point_dist_sq.sum())
    history = [objective]

    for _ in range(max_iters):
        for c in range(k):
            members = labels == c
            if members.any():
                centroids[c] = points[members].mean(axis=0)
        labels, point_dist_sq = _assign(points, centroids)
        labels, centroids, point_dist_sq = _repair_empty(
            points, centroids, labels, point_dist_sq, k
        )
        new_objective = float(point_dist_sq.sum())
        history.append(new_objective)
        if objective - new_objective <= tol * max(objective, 1e-300):
            objective = new_objective
            break
        objective = new_objective

    return labels, objective, history


def kmeans(points: np.ndarray, cfg: KMeansConfig) -> ClusterResult:
    """Best of ``cfg.restarts`` independent seeded runs, by final objective."""
    points = np.asarray(points, dtype=np.float64)
    if points.ndim != 2:
        raise ValueError("points must be an n x d matrix")
    if points.shape[0] < cfg.k:
        raise TooFewPointsError(f"{points.shape[0]} points cannot form {cfg.k} clusters")

    best = None
    summary = []
    for r in range(cfg.restarts):
        rng = np.random.default_rng(cfg.seed + r)
        labels, objective, _ = lloyd_run(points, cfg.k, rng, cfg.max_iters, cfg.tol)
        summary.append(objective)
        if best is None or (objective, r) < best[:2]:
            best = (objective, r, labels)

    return ClusterResult(
        partition=Partition(labels=best[2], k=cfg.k),
        objective=best[0],
        restarts_summary=tuple(summary),
    )
