"""Synthetic benchmark data: Gaussian-mixture letter clouds, k-NN graph
construction, and two small frozen multi-layer fixtures.

The letters benchmark draws three 2-d point clouds shaped like the letters
"N", "R" and "C".  Every cloud is a five-component Gaussian mixture whose
components sit on the letter's strokes; the five classes are assigned to
stroke positions in a different order per letter, so each layer blurs a
different set of class pairs and the layers complement one another.  One
shared label vector covers all three clouds: vertex v belongs to the same
class everywhere, only its coordinates are resampled per letter.

Mixture means and variances are frozen in ``data/letters_gmm.json``; the
two toy fixtures are frozen edge-list files under ``data/toy_a`` and
``data/toy_b`` so their subspace geometry never drifts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

import numpy as np
from scipy.spatial import cKDTree

from .errors import DuplicatePointsError, InvalidDatasetError
from .fileio import read_edges, read_labels
from .graph import Graph, MultiLayerGraph, Partition, is_connected

LETTER_NAMES = ("N", "R", "C")
_MIN_POINT_SEPARATION = 1e-12


@dataclass(frozen=True)
class PointCloud:
    points: np.ndarray
    labels: np.ndarray

    @property
    def n(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class GmmSpec:
    """Five isotropic Gaussian components in the plane, one class each."""

    means: np.ndarray
    variances: np.ndarray
    seed: int | Sequence[int]
    points_per_component: int = 500

    def __post_init__(self):
        means = np.asarray(self.means, dtype=np.float64)
        variances = np.asarray(self.variances, dtype=np.float64)
        object.__setattr__(self, "means", means)
        object.__setattr__(self, "variances", variances)
        if means.shape != (5, 2):
            raise ValueError(f"expected 5 planar means, got shape {means.shape}")
        if variances.shape != (5,) or np.any(variances <= 0):
            raise ValueError("need 5 strictly positive variances")
        if self.points_per_component < 1:
            raise ValueError("points_per_component must be >= 1")


def generate_letter_cloud(spec: GmmSpec) -> PointCloud:
    """Sample the mixture deterministically; labels record component of origin."""
    rng = np.random.default_rng(spec.seed)
    m = spec.points_per_component
    blocks = []
    for c in range(5):
        noise = rng.standard_normal((m, 2))
        blocks.append(spec.means[c] + np.sqrt(spec.variances[c]) * noise)
    points = np.concatenate(blocks, axis=0)
    labels = np.repeat(np.arange(5, dtype=np.int64), m)
    return PointCloud(points=points, labels=labels)


def knn_graph(cloud: PointCloud, kneighbors: int) -> Graph:
    """Union-symmetrized k-nearest-neighbor graph with reciprocal-distance weights.

    An edge (i, j) exists when either endpoint ranks the other among its
    kneighbors nearest; its weight is 1 / ||x_i - x_j||.
    """
    if kneighbors < 1:
        raise ValueError("kneighbors must be >= 1")
    points = cloud.points
    n = points.shape[0]
    if kneighbors >= n:
        raise ValueError(f"kneighbors={kneighbors} needs at least {kneighbors + 1} points")
    tree = cKDTree(points)
    dists, idx = tree.query(points, k=kneighbors + 1)  # first hit is the point itself
    weights = np.zeros((n, n))
    for i in range(n):
        for dist, j in zip(dists[i, 1:], idx[i, 1:]):
            if dist < _MIN_POINT_SEPARATION:
                raise DuplicatePointsError(i, int(j))
            w = 1.0 / dist
            weights[i, j] = w
            weights[j, i] = w
    return Graph(weights=weights)


def _load_letters_preset() -> dict:
    text = resources.files("mlgc.data").joinpath("letters_gmm.json").read_text()
    return json.loads(text)


def letters_preset_specs(seed: int, points_per_component: int = 500) -> list[GmmSpec]:
    """Frozen per-letter mixture specs, seeded per layer from one base seed."""
    preset = _load_letters_preset()
    specs = []
    for layer_index, letter in enumerate(LETTER_NAMES):
        entry = preset["letters"][letter]
        specs.append(
            GmmSpec(
                means=np.asarray(entry["means"]),
                variances=np.asarray(entry["variances"]),
                seed=(seed, layer_index),
                points_per_component=points_per_component,
            )
        )
    return specs


def letters_dataset(
    seed: int, points_per_component: int = 500
) -> tuple[MultiLayerGraph, Partition]:
    """Three-layer letters benchmark with one shared 5-class ground truth.

    Raises InvalidDatasetError when a seed produces a disconnected layer
    graph; such seeds are rejected rather than silently repaired.
    """
    preset = _load_letters_preset()
    kneighbors = preset["kneighbors"]
    layers = []
    truth = None
    for spec in letters_preset_specs(seed, points_per_component):
        cloud = generate_letter_cloud(spec)
        graph = knn_graph(cloud, kneighbors)
        if not is_connected(graph):
            raise InvalidDatasetError(
                f"seed {seed} yields a disconnected layer; pick another seed"
            )
        layers.append(graph)
        truth = cloud.labels  # identical layout in every layer
    return MultiLayerGraph(layers=tuple(layers)), Partition(labels=truth, k=5)


def _load_fixture(name: str) -> tuple[MultiLayerGraph, Partition]:
    root = resources.files("mlgc.data").joinpath(name)
    layers = tuple(
        read_edges(Path(str(root.joinpath(f"layer{i}.edges")))) for i in (1, 2, 3)
    )
    truth = read_labels(Path(str(root.joinpath("labels.txt"))))
    return MultiLayerGraph(layers=layers), truth


def toy_fixture_a() -> tuple[MultiLayerGraph, Partition]:
    """Frozen 3-layer fixture: two cluster-consistent layers plus one scrambled
    layer whose edges contradict the planted clusters."""
    return _load_fixture("toy_a")


def toy_fixture_b() -> tuple[MultiLayerGraph, Partition]:
    """Frozen 3-layer fixture: one informative layer plus two mutually
    consistent layers aligned with a different, wrong partition."""
    return _load_fixture("toy_b")
