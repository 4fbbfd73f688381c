"""External clustering-quality metrics: purity, NMI, Rand index.

All three are computed from the contingency table of a predicted partition
against a reference partition and are invariant under relabeling either
side.  NMI is normalized by the arithmetic mean of the two label entropies
by default (the convention of the standard IR-evaluation treatment); a
geometric-mean variant is available for comparison with other tools.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatchError, TooFewPointsError
from .graph import Partition


@dataclass(frozen=True)
class ContingencyTable:
    """Co-occurrence counts: rows are predicted clusters, columns true classes."""

    counts: np.ndarray
    n: int


def contingency_table(pred: Partition, truth: Partition) -> ContingencyTable:
    if pred.n != truth.n:
        raise LengthMismatchError(f"partitions cover {pred.n} vs {truth.n} items")
    counts = np.zeros((pred.k, truth.k), dtype=np.int64)
    np.add.at(counts, (pred.labels, truth.labels), 1)
    return ContingencyTable(counts=counts, n=pred.n)


def purity(pred: Partition, truth: Partition) -> float:
    """Fraction of items landing in their predicted cluster's majority class."""
    table = contingency_table(pred, truth)
    return float(table.counts.max(axis=1).sum() / table.n)


def _entropy(counts: np.ndarray, n: int) -> float:
    p = counts[counts > 0] / n
    return float(-(p * np.log(p)).sum())


def nmi(pred: Partition, truth: Partition, normalization: str = "arithmetic") -> float:
    """Mutual information normalized into [0, 1].

    Returns 1 for partitions identical up to relabeling (including the
    trivial single-cluster vs single-cluster case) and 0 whenever the
    mutual information vanishes.
    """
    if normalization not in ("arithmetic", "geometric"):
        raise ValueError(f"unknown normalization {normalization!r}")
    table = contingency_table(pred, truth)
    counts = table.counts
    n = table.n
    row = counts.sum(axis=1)
    col = counts.sum(axis=0)
    h_pred = _entropy(row, n)
    h_truth = _entropy(col, n)
    if h_pred == 0.0 and h_truth == 0.0:
        return 1.0

    nz = counts > 0
    joint = counts[nz] / n
    outer = np.outer(row, col)[nz] / (n * n)
    mutual = float((joint * np.log(joint / outer)).sum())
    if mutual <= 0.0:
        return 0.0

    if normalization == "arithmetic":
        denom = (h_pred + h_truth) / 2.0
    else:
        denom = float(np.sqrt(h_pred * h_truth))
    if denom == 0.0:
        return 0.0
    return min(1.0, mutual / denom)


def rand_index(pred: Partition, truth: Partition) -> float:
    """Fraction of item pairs on which the two partitions agree."""
    if pred.n != truth.n:
        raise LengthMismatchError(f"partitions cover {pred.n} vs {truth.n} items")
    if pred.n < 2:
        raise TooFewPointsError("rand index needs at least two items")
    table = contingency_table(pred, truth)
    counts = table.counts.astype(np.float64)
    n = table.n

    def pairs(x):
        return float((x * (x - 1) / 2).sum())

    total = n * (n - 1) / 2
    same_both = pairs(counts)
    same_pred = pairs(counts.sum(axis=1))
    same_truth = pairs(counts.sum(axis=0))
    agreements = total + 2 * same_both - same_pred - same_truth
    return float(agreements / total)
