"""Numerical range W(T) = {<Tx,x> : ||x||=1} via support functions.

The support function of W(T) in direction theta is the top eigenvalue of
the rotated Hermitian part H(theta) = (e^{-i theta} T + e^{i theta} T*)/2.
Sweeping theta gives the boundary curve; maximizing over theta gives the
numerical radius w(T).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0

COARSE_ANGLES = 256


def hermitian_part(T, theta: float = 0.0) -> np.ndarray:
    """(e^{-i theta} T + e^{i theta} T*)/2, Hermitian by construction."""
    M = (np.exp(-1j * theta) / 2.0) * linalg.as_matrix(T)
    return M + M.conj().T


def support_values(T, thetas) -> np.ndarray:
    """Top eigenvalue of H(theta) for each theta (vectorized)."""
    T = linalg.as_matrix(T)
    thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
    phase = np.exp(-1j * thetas)[:, None, None]
    H = phase * T / 2.0
    H = H + np.conj(np.swapaxes(H, -1, -2))
    if T.shape[0] == 2:
        # closed form for 2x2 Hermitian: mean of diagonal + half-gap
        a = H[:, 0, 0].real
        d = H[:, 1, 1].real
        b = H[:, 0, 1]
        return (a + d) / 2.0 + np.sqrt(((a - d) / 2.0) ** 2 + np.abs(b) ** 2)
    return np.linalg.eigvalsh(H)[:, -1]


def support_value(T, theta: float) -> float:
    return float(support_values(T, [theta])[0])


@dataclass(frozen=True)
class BoundaryCurve:
    """Sampled boundary data of W(T).

    thetas are strictly increasing in [0, 2pi); supports[k] is the support
    function value in direction thetas[k]; points[k] = <T x, x> for a top
    eigenvector x of H(thetas[k]).
    """

    thetas: np.ndarray
    supports: np.ndarray
    points: np.ndarray


def boundary(T, n_angles: int) -> BoundaryCurve:
    """Boundary curve of W(T) on a uniform angle grid (n_angles >= 8)."""
    if n_angles < 8:
        raise ValueError(f"n_angles must be >= 8, got {n_angles}")
    T = linalg.as_matrix(T)
    thetas = 2.0 * np.pi * np.arange(n_angles) / n_angles
    phase = np.exp(-1j * thetas)[:, None, None]
    H = phase * T / 2.0
    H = H + np.conj(np.swapaxes(H, -1, -2))
    vals, vecs = np.linalg.eigh(H)
    supports = vals[:, -1]
    tops = vecs[:, :, -1]
    points = np.einsum("ki,ij,kj->k", tops.conj(), T, tops)
    return BoundaryCurve(thetas=thetas, supports=supports, points=points)


def numerical_radius(T, tol: float = 1e-10) -> float:
    """w(T) = max_theta lambda_max(H(theta)).

    Coarse 256-angle grid, then golden-section refinement of the winning
    bracket down to bracket width < tol. The two neighboring brackets are
    refined as well as a safeguard against a near-tie on the coarse grid.
    """
    T = linalg.as_matrix(T)
    step = 2.0 * np.pi / COARSE_ANGLES
    thetas = step * np.arange(COARSE_ANGLES)
    supports = support_values(T, thetas)
    k = int(np.argmax(supports))
    best = float(supports[k])

    # golden-section on the winning bracket and its two neighbors, run in
    # lockstep so each iteration is a single batched eigenvalue call
    a = step * (np.array([k - 2, k - 1, k], dtype=float))
    b = a + 2.0 * step
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc = support_values(T, c)
    fd = support_values(T, d)
    while b[0] - a[0] > tol:
        pick = fc >= fd
        a_next = np.where(pick, a, c)
        b_next = np.where(pick, d, b)
        h = b_next - a_next
        cand_c = b_next - _INVPHI * h
        cand_d = a_next + _INVPHI * h
        fprobe = support_values(T, np.where(pick, cand_c, cand_d))
        c_next = np.where(pick, cand_c, d)
        fc_next = np.where(pick, fprobe, fd)
        d_next = np.where(pick, c, cand_d)
        fd_next = np.where(pick, fc, fprobe)
        a, b, c, d = a_next, b_next, c_next, d_next
        fc, fd = fc_next, fd_next
    return max(best, float(fc.max()), float(fd.max()))


def contains(T, z: complex, tol: float = 1e-9, n_angles: int = 256) -> bool:
    """Membership of z in the closure of W(T) by support-function test."""
    if n_angles < 64:
        raise ValueError(f"n_angles must be >= 64, got {n_angles}")
    thetas = 2.0 * np.pi * np.arange(n_angles) / n_angles
    supports = support_values(T, thetas)
    projections = np.real(np.exp(-1j * thetas) * z)
    return bool(np.all(projections <= supports + tol))
