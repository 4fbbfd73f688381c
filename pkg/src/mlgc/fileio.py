"""Flat-file formats: edge lists, label files, layer manifests, embedding dumps.

Formats are line-oriented and diff-friendly.  Each undirected edge is
stored once with i < j and mirrored on read; floats are written with 17
significant digits so a write/read round trip is exact.  All writers are
atomic (temp file + rename).
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import FileFormatError
from .graph import Graph, MultiLayerGraph, Partition

EDGES_HEADER = "# mlgc-edges v1"
EMBEDDING_HEADER = "# mlgc-embedding v1"


def _atomic_write(path: Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_edges(path: Path, g: Graph) -> None:
    rows, cols = np.nonzero(np.triu(g.weights, k=1))
    lines = [f"{EDGES_HEADER} n={g.n}"]
    for i, j in zip(rows, cols):
        lines.append(f"{i} {j} {g.weights[i, j]:.17g}")
    _atomic_write(Path(path), "\n".join(lines) + "\n")


def read_edges(path: Path) -> Graph:
    path = Path(path)
    n = read_edges_header(path)
    weights = np.zeros((n, n))
    with open(path) as handle:
        next(handle)  # header
        for lineno, line in enumerate(handle, start=2):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise FileFormatError(f"{path}:{lineno}: expected 'i j w', got {line!r}")
            try:
                i, j, w = int(parts[0]), int(parts[1]), float(parts[2])
            except ValueError as exc:
                raise FileFormatError(f"{path}:{lineno}: {exc}") from exc
            if not (0 <= i < j < n):
                raise FileFormatError(f"{path}:{lineno}: need 0 <= i < j < n, got i={i} j={j}")
            if w < 0:
                raise FileFormatError(f"{path}:{lineno}: negative weight {w}")
            if weights[i, j] != 0:
                raise FileFormatError(f"{path}:{lineno}: duplicate edge ({i},{j})")
            weights[i, j] = w
            weights[j, i] = w
    return Graph(weights=weights)


def read_edges_header(path: Path) -> int:
    with open(path) as handle:
        header = handle.readline().strip()
    if not header.startswith(EDGES_HEADER):
        raise FileFormatError(f"{path}: missing '{EDGES_HEADER}' header")
    try:
        return int(header.split("n=", 1)[1])
    except (IndexError, ValueError) as exc:
        raise FileFormatError(f"{path}: malformed header {header!r}") from exc


def write_labels(path: Path, partition: Partition) -> None:
    _atomic_write(Path(path), "\n".join(str(int(x)) for x in partition.labels) + "\n")


def read_labels(path: Path, k: int | None = None) -> Partition:
    path = Path(path)
    values = []
    with open(path) as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                values.append(int(line))
            except ValueError as exc:
                raise FileFormatError(f"{path}:{lineno}: expected an integer label") from exc
    if not values:
        raise FileFormatError(f"{path}: empty labels file")
    labels = np.asarray(values, dtype=np.int64)
    if labels.min() < 0:
        raise FileFormatError(f"{path}: negative label {labels.min()}")
    return Partition(labels=labels, k=k if k is not None else int(labels.max()) + 1)


@dataclass(frozen=True)
class LayerManifest:
    """Ordered layer files with optional per-layer alpha overrides."""

    paths: tuple[Path, ...]
    alphas: tuple[float | None, ...]
    n: int


def write_manifest(path: Path, layer_paths, alphas=None) -> None:
    layer_paths = list(layer_paths)
    alphas = list(alphas) if alphas is not None else [None] * len(layer_paths)
    lines = []
    for layer_path, alpha in zip(layer_paths, alphas):
        token = "" if alpha is None else f" alpha={alpha:.17g}"
        lines.append(f"{layer_path}{token}")
    _atomic_write(Path(path), "\n".join(lines) + "\n")


def read_manifest(path: Path) -> LayerManifest:
    """Parse a manifest and verify each layer file exists with a consistent n."""
    path = Path(path)
    base = path.parent
    paths: list[Path] = []
    alphas: list[float | None] = []
    with open(path) as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            alpha = None
            parts = line.split()
            if parts[-1].startswith("alpha="):
                try:
                    alpha = float(parts[-1][len("alpha=") :])
                except ValueError as exc:
                    raise FileFormatError(f"{path}:{lineno}: bad alpha token") from exc
                parts = parts[:-1]
            layer_path = Path(" ".join(parts))
            if not layer_path.is_absolute():
                layer_path = base / layer_path
            paths.append(layer_path)
            alphas.append(alpha)
    if not paths:
        raise FileFormatError(f"{path}: manifest lists no layers")
    sizes = []
    for layer_path in paths:
        if not layer_path.exists():
            raise FileNotFoundError(f"manifest references missing file: {layer_path}")
        sizes.append(read_edges_header(layer_path))
    if len(set(sizes)) != 1:
        raise FileFormatError(f"{path}: layers disagree on vertex count: {sizes}")
    return LayerManifest(paths=tuple(paths), alphas=tuple(alphas), n=sizes[0])


def load_layers(manifest: LayerManifest) -> MultiLayerGraph:
    return MultiLayerGraph(layers=tuple(read_edges(p) for p in manifest.paths))


def write_embedding(path: Path, matrix: np.ndarray) -> None:
    matrix = np.asarray(matrix)
    n, k = matrix.shape
    lines = [f"{EMBEDDING_HEADER} n={n} k={k}"]
    for row in matrix:
        lines.append(" ".join(f"{x:.17g}" for x in row))
    _atomic_write(Path(path), "\n".join(lines) + "\n")


def read_embedding(path: Path) -> np.ndarray:
    path = Path(path)
    with open(path) as handle:
        header = handle.readline().strip()
        if not header.startswith(EMBEDDING_HEADER):
            raise FileFormatError(f"{path}: missing '{EMBEDDING_HEADER}' header")
        try:
            n = int(header.split("n=", 1)[1].split()[0])
            k = int(header.split("k=", 1)[1].split()[0])
        except (IndexError, ValueError) as exc:
            raise FileFormatError(f"{path}: malformed header {header!r}") from exc
        rows = []
        for line in handle:
            line = line.strip()
            if line:
                rows.append([float(x) for x in line.split()])
    matrix = np.asarray(rows, dtype=np.float64)
    if matrix.shape != (n, k):
        raise FileFormatError(f"{path}: expected {n}x{k} values, got {matrix.shape}")
    return matrix
