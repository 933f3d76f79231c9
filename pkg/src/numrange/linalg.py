"""Dense complex linear algebra kernel for small matrices (dim 2..64).

All routines work on square complex numpy arrays and are pure functions.
Hermitian eigenproblems are delegated to LAPACK (numpy.linalg.eigh), and
linear systems go through an LU factorization with an explicit pivot check
so that near-singular systems raise SingularError instead of returning
garbage.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import NoConvergenceError, NotHermitianError, SingularError

DEFAULT_TOL = 1e-9

PIVOT_RTOL = 1e-13


def as_matrix(entries) -> np.ndarray:
    """Validate and return a square, finite, complex matrix."""
    T = np.asarray(entries, dtype=complex)
    if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {T.shape}")
    if not np.all(np.isfinite(T)):
        raise ValueError("matrix has non-finite entries")
    return T


def operator_norm(T) -> float:
    """Largest singular value of T."""
    return float(np.linalg.norm(as_matrix(T), 2))


@dataclass(frozen=True)
class EigenDecomposition:
    """Full Hermitian spectrum, eigenvalues ascending, eigenvectors as columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _check_hermitian(H: np.ndarray, tol: float, who: str) -> np.ndarray:
    dev = np.linalg.norm(H - H.conj().T, 2)
    scale = 1.0 + np.linalg.norm(H, 2)
    if dev > tol * scale:
        raise NotHermitianError(
            f"{who}: matrix deviates from Hermitian by {dev:.3e} "
            f"(allowed {tol * scale:.3e})"
        )
    # exact symmetrization so downstream results are real where they should be
    return (H + H.conj().T) / 2


def hermitian_eig(H, tol: float = DEFAULT_TOL) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix.

    Raises NotHermitianError if ||H - H*|| > tol*(1+||H||), and
    NoConvergenceError if the underlying iteration fails.
    """
    H = _check_hermitian(as_matrix(H), tol, "hermitian_eig")
    try:
        vals, vecs = np.linalg.eigh(H)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc
    return EigenDecomposition(eigenvalues=vals, eigenvectors=vecs)


def solve(A, B) -> np.ndarray:
    """Solve AX = B with partial pivoting; SingularError on pivot underflow."""
    A = as_matrix(A)
    B = np.asarray(B, dtype=complex)
    if B.shape[0] != A.shape[0]:
        raise ValueError(f"shape mismatch: A is {A.shape}, B is {B.shape}")
    with warnings.catch_warnings():
        # exact-zero pivots are handled by the threshold check below
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(A, check_finite=False)
    threshold = PIVOT_RTOL * max(np.linalg.norm(A, 2), np.finfo(float).tiny)
    pivots = np.abs(np.diag(lu))
    if pivots.min() <= threshold:
        raise SingularError(
            f"pivot {pivots.min():.3e} below threshold {threshold:.3e}"
        )
    return scipy.linalg.lu_solve((lu, piv), B, check_finite=False)


def inverse(A) -> np.ndarray:
    return solve(A, np.eye(np.asarray(A).shape[0], dtype=complex))


def min_eigenvalue(H, tol: float = DEFAULT_TOL) -> float:
    H = _check_hermitian(as_matrix(H), tol, "min_eigenvalue")
    return float(np.linalg.eigvalsh(H)[0])


def is_psd(H, tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    """PSD test: (lambda_min >= -tol, lambda_min)."""
    lam_min = min_eigenvalue(H, tol)
    return lam_min >= -tol, lam_min
