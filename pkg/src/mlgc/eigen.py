"""Deterministic smallest-k eigendecomposition of symmetric matrices.

Every spectral routine in the package funnels through this module so that
ordering, normalization, and sign conventions are fixed in exactly one
place.  Dense LAPACK is used up to ``DENSE_CUTOFF`` vertices; above that an
implicitly restarted Lanczos solve runs first, with a dense fallback if it
fails to converge.  The input matrix may be indefinite (merged operators
are not Laplacians); nothing here assumes positive semidefiniteness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.sparse
from scipy.sparse.linalg import ArpackNoConvergence, eigsh

from .errors import KOutOfRangeError, NoConvergenceError, NotSymmetricError

DENSE_CUTOFF = 512
DEFAULT_TOL = 1e-10

# dense-array inputs sparser than this are converted to CSR before Lanczos,
# which turns each matvec from O(n^2) into O(nnz)
_SPARSIFY_DENSITY = 0.05


@dataclass(frozen=True)
class EigenResult:
    """Ascending eigenvalues and matching unit-norm eigenvector columns.

    Sign convention: in each column the entry of largest absolute value is
    nonnegative, ties broken by lowest row index, so identical inputs always
    reproduce identical output.
    """

    values: np.ndarray
    vectors: np.ndarray

    @property
    def k(self) -> int:
        return self.values.shape[0]


def fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip each column so its largest-|entry| element (lowest index on ties) is >= 0."""
    fixed = vectors.copy()
    for j in range(fixed.shape[1]):
        col = fixed[:, j]
        pivot = int(np.argmax(np.abs(col)))  # argmax takes the first maximum
        if col[pivot] < 0:
            fixed[:, j] = -col
    return fixed


def _check_symmetric(s, tol: float = 1e-10) -> None:
    if scipy.sparse.issparse(s):
        gap = abs(s - s.T)
        max_gap = gap.max() if gap.nnz else 0.0
    else:
        max_gap = float(np.max(np.abs(s - s.T))) if s.size else 0.0
    scale = _matrix_scale(s)
    if max_gap > tol * max(1.0, scale):
        raise NotSymmetricError(f"matrix asymmetry {max_gap:.3e} exceeds tolerance {tol:.1e}")


def _matrix_scale(s) -> float:
    if scipy.sparse.issparse(s):
        return float(np.max(np.abs(s.data))) if s.nnz else 0.0
    return float(np.max(np.abs(s))) if s.size else 0.0


def _dense_solve(s, k: int) -> tuple[np.ndarray, np.ndarray]:
    arr = s.toarray() if scipy.sparse.issparse(s) else np.asarray(s, dtype=np.float64)
    sym = (arr + arr.T) / 2.0
    values, vectors = scipy.linalg.eigh(sym, subset_by_index=(0, k - 1))
    return values, vectors


def _lanczos_solve(s, k: int, tol: float) -> tuple[np.ndarray, np.ndarray]:
    n = s.shape[0]
    if not scipy.sparse.issparse(s):
        dense = np.asarray(s, dtype=np.float64)
        density = np.count_nonzero(dense) / dense.size
        if density < _SPARSIFY_DENSITY:
            s = scipy.sparse.csr_matrix(dense)
    # fixed start vector keeps the Lanczos iteration reproducible
    v0 = np.full(n, 1.0 / np.sqrt(n))
    values, vectors = eigsh(s, k=k, which="SA", v0=v0, tol=tol, maxiter=50 * n)
    order = np.argsort(values, kind="stable")
    return values[order], vectors[:, order]


def smallest_k_eigenpairs(s, k: int, tol: float = DEFAULT_TOL) -> EigenResult:
    """Return the k algebraically smallest eigenpairs of a symmetric matrix.

    Accepts a dense ndarray or a scipy sparse matrix.  Raises
    NotSymmetricError / KOutOfRangeError on bad input and NoConvergenceError
    only if both the Lanczos solve and the dense fallback fail.
    """
    n = s.shape[0]
    if s.shape[0] != s.shape[1]:
        raise NotSymmetricError(f"matrix must be square, got shape {s.shape}")
    if not 1 <= k <= n:
        raise KOutOfRangeError(f"k={k} out of range for n={n}")
    _check_symmetric(s)

    if n <= DENSE_CUTOFF or k >= n - 1:  # ARPACK requires k < n-1
        values, vectors = _dense_solve(s, k)
    else:
        try:
            values, vectors = _lanczos_solve(s, k, tol)
        except ArpackNoConvergence as exc:
            try:
                values, vectors = _dense_solve(s, k)
            except Exception:
                raise NoConvergenceError(50 * n) from exc

    return EigenResult(values=np.ascontiguousarray(values), vectors=fix_signs(vectors))
