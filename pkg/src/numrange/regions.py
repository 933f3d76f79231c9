"""Teardrop regions, Drury's parameter region S, and the quadratic form
Q(T, t, s) = I + t(T + T*) + s T*T.

The teardrop td(alpha) is the convex hull of the closed unit disk and the
disk of center alpha, radius 1 - |alpha|^2. Its support function is
max(1, Re(e^{-i phi} alpha) + 1 - |alpha|^2), which is rotation-covariant,
so general complex alpha needs no special casing.

Region S is the set of (t, s) with t >= 0 such that Q(T, t, s) >= 0 for
every T with w(T) <= 1; its boundary is piecewise t^2 - 1/4 (t <= 1/2),
2t - 1 (1/2 <= t <= 1), t^2 (t >= 1).
"""

from __future__ import annotations

import math

import numpy as np

from . import linalg
from .errors import DomainError, NegativeRadicandError, NegativeTError

_DOMAIN_SLACK = 1e-12


def teardrop_support(alpha: complex, phi) -> float | np.ndarray:
    """Support function of td(alpha) in direction(s) phi."""
    alpha = complex(alpha)
    if abs(alpha) > 1.0 + 1e-12:
        raise ValueError(f"|alpha| must be <= 1, got {abs(alpha)!r}")
    phi = np.asarray(phi, dtype=float)
    value = np.maximum(
        1.0, np.real(np.exp(-1j * phi) * alpha) + 1.0 - abs(alpha) ** 2
    )
    if phi.ndim == 0:
        return float(value)
    return value


def teardrop_contains(alpha: complex, z: complex, tol: float = 1e-9,
                      n_angles: int = 720) -> bool:
    """Support-function membership test of z in td(alpha).

    Checks a uniform angle grid plus the two analytically critical
    directions arg(z) and arg(z - alpha).
    """
    alpha = complex(alpha)
    z = complex(z)
    phis = list(2.0 * np.pi * np.arange(n_angles) / n_angles)
    if z != 0:
        phis.append(math.atan2(z.imag, z.real))
    if z != alpha:
        w = z - alpha
        phis.append(math.atan2(w.imag, w.real))
    phis = np.asarray(phis)
    supports = teardrop_support(alpha, phis)
    projections = np.real(np.exp(-1j * phis) * z)
    return bool(np.all(projections <= supports + tol))


def region_S_boundary(t: float) -> float:
    """Lowest admissible s for the given t >= 0."""
    if t < 0:
        raise NegativeTError(f"t must be >= 0, got {t!r}")
    if t <= 0.5:
        return t * t - 0.25
    if t <= 1.0:
        return 2.0 * t - 1.0
    return t * t


def region_S_contains(t: float, s: float) -> bool:
    return s >= region_S_boundary(t)


def q_form(T, t: float, s: float) -> np.ndarray:
    """Hermitian matrix I + t(T + T*) + s T*T."""
    T = linalg.as_matrix(T)
    n = T.shape[0]
    G = T.conj().T @ T
    Q = np.eye(n, dtype=complex) + t * (T + T.conj().T) + s * (G + G.conj().T) / 2.0
    return (Q + Q.conj().T) / 2.0


def drury_params_outer(alpha: float, theta: float) -> tuple[complex, float, float]:
    """(omega, t, s) for the half-plane family Re(e^{-i theta} z) <= 1.

    Valid for alpha in [0, 1) and cos(theta) <= alpha; yields t in [1/2, 1]
    with s = 2t - 1 and |omega| = 1.
    """
    alpha = float(alpha)
    if not 0.0 <= alpha < 1.0:
        raise DomainError(f"alpha must be in [0, 1), got {alpha!r}")
    c = math.cos(theta)
    if c > alpha + _DOMAIN_SLACK:
        raise DomainError(f"outer branch needs cos(theta) <= alpha, got {c!r} > {alpha!r}")
    denom = 1.0 - 2.0 * alpha * c + alpha * alpha
    eit = complex(math.cos(theta), math.sin(theta))
    omega = (2.0 * alpha - eit - alpha * alpha * np.conj(eit)) / denom
    t = denom / (2.0 * (1.0 - alpha * c))
    s = alpha * (alpha - c) / (1.0 - alpha * c)
    return complex(omega), t, s


def drury_params_inner(alpha: float, theta: float) -> tuple[complex, float, float]:
    """(omega, t, s) for the family Re(e^{-i theta}(z - alpha)) <= 1 - alpha^2.

    Valid for alpha in [0, 1) and cos(theta) >= alpha; yields t in [0, 1/2]
    with s = t^2 - 1/4 and |omega| = 1. At the degenerate corner t = 0 the
    direction omega is immaterial and is reported as 1.
    """
    alpha = float(alpha)
    if not 0.0 <= alpha < 1.0:
        raise DomainError(f"alpha must be in [0, 1), got {alpha!r}")
    c = math.cos(theta)
    if c < alpha - _DOMAIN_SLACK:
        raise DomainError(f"inner branch needs cos(theta) >= alpha, got {c!r} < {alpha!r}")
    s = alpha * (alpha - c)
    radicand = s + 0.25
    if radicand < -1e-12:
        raise NegativeRadicandError(
            f"radicand {radicand!r} < 0 at alpha={alpha!r}, cos(theta)={c!r}"
        )
    t = math.sqrt(max(radicand, 0.0))
    if t < 1e-15:
        return 1.0 + 0.0j, t, s
    eit = complex(math.cos(theta), math.sin(theta))
    omega = (2.0 * alpha - np.conj(eit)) / (2.0 * t)
    return complex(omega), t, s
