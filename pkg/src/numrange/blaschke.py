"""Finite Blaschke products: evaluation, boundary argument, level sets,
and the Clark partial-fraction decomposition.

A finite Blaschke product B(z) = c * prod_k (a_k - z)/(1 - conj(a_k) z)
with |c| = 1 and |a_k| < 1 maps the unit circle onto itself with winding
number n = number of zeros. Its boundary argument t -> arg B(e^{it}) is
strictly increasing with derivative

    zeta B'(zeta)/B(zeta) = sum_k (1 - |a_k|^2) / |zeta - a_k|^2 > 0,

which is what makes the level-set root finding below robust: every
equation B(zeta) = gamma with |gamma| = 1 has exactly n simple roots on
the circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BisectionFailureError,
    NotOnCircleError,
    NotUnimodularError,
    PoleHitError,
    RequiresVanishingAtZeroError,
)

UNIMODULAR_TOL = 1e-9
ZERO_AT_ORIGIN_TOL = 1e-12
BISECTION_TOL = 1e-13

_MIN_GRID = 4096
_MAX_GRID = 1 << 20


@dataclass(frozen=True)
class BlaschkeProduct:
    constant: complex
    zeros: tuple = field(default_factory=tuple)

    def __post_init__(self):
        c = complex(self.constant)
        zeros = tuple(complex(a) for a in self.zeros)
        if abs(abs(c) - 1.0) > 1e-12:
            raise NotUnimodularError(f"|constant| = {abs(c)!r}, expected 1")
        if len(zeros) < 1:
            raise ValueError("a Blaschke product needs at least one zero")
        for a in zeros:
            if abs(a) > 1.0 - 1e-12:
                raise ValueError(f"zero {a!r} is not in the open unit disk")
        object.__setattr__(self, "constant", c)
        object.__setattr__(self, "zeros", zeros)

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def vanishes_at_zero(self) -> bool:
        """Structural test: some zero sits (within 1e-12) at the origin."""
        return any(abs(a) <= ZERO_AT_ORIGIN_TOL for a in self.zeros)

    def __call__(self, z):
        return evaluate(self, z)


def evaluate(B: BlaschkeProduct, z):
    """Evaluate B at a scalar or an array of points."""
    z = np.asarray(z, dtype=complex)
    result = np.full(z.shape, B.constant, dtype=complex)
    for a in B.zeros:
        denom = 1.0 - np.conj(a) * z
        if np.any(np.abs(denom) < 1e-14):
            raise PoleHitError(f"evaluation at a pole of the factor for zero {a!r}")
        result = result * (a - z) / denom
    if z.ndim == 0:
        return complex(result)
    return result


def circle_log_derivative(B: BlaschkeProduct, zeta: complex) -> float:
    """zeta B'(zeta)/B(zeta) = sum_k (1-|a_k|^2)/|zeta-a_k|^2 on the circle."""
    zeta = complex(zeta)
    if abs(abs(zeta) - 1.0) > UNIMODULAR_TOL:
        raise NotOnCircleError(f"|zeta| = {abs(zeta)!r}, expected 1")
    terms = [(1.0 - abs(a) ** 2) / abs(zeta - a) ** 2 for a in B.zeros]
    return float(sum(terms))


def _argument_grid(B: BlaschkeProduct) -> tuple[np.ndarray, np.ndarray]:
    """Unwrapped boundary argument F(t) = arg B(e^{it}) on [0, 2pi].

    The grid step is chosen from the analytic derivative bound
    sum_k (1+|a_k|)/(1-|a_k|) so that consecutive samples differ by less
    than pi/2, making np.unwrap exact.
    """
    dmax = sum((1.0 + abs(a)) / (1.0 - abs(a)) for a in B.zeros)
    n = int(min(_MAX_GRID, max(_MIN_GRID, math.ceil(4.0 * dmax) + 1)))
    ts = np.linspace(0.0, 2.0 * np.pi, n + 1)
    args = np.unwrap(np.angle(evaluate(B, np.exp(1j * ts))))
    total = args[-1] - args[0]
    if abs(total - 2.0 * np.pi * B.degree) > 1e-6:
        raise BisectionFailureError(
            f"boundary argument increased by {total!r}, "
            f"expected {2.0 * np.pi * B.degree!r} (unwrap aliased)"
        )
    if np.any(np.diff(args) < -1e-12):
        raise BisectionFailureError("boundary argument is not nondecreasing")
    return ts, args


def level_set(B: BlaschkeProduct, gamma: complex) -> np.ndarray:
    """All n solutions of B(zeta) = gamma on the unit circle.

    Tracks the unwrapped boundary argument and bisects each of the n
    crossings of arg(gamma) mod 2pi down to |t| resolution 1e-13.
    """
    gamma = complex(gamma)
    if abs(abs(gamma) - 1.0) > UNIMODULAR_TOL:
        raise NotUnimodularError(f"|gamma| = {abs(gamma)!r}, expected 1")
    gamma /= abs(gamma)
    ts, args = _argument_grid(B)
    n = B.degree

    arg_gamma = float(np.angle(gamma))
    # targets: the n values congruent to arg(gamma) mod 2pi in [F(0), F(0)+2pi*n)
    m0 = math.ceil((args[0] - arg_gamma) / (2.0 * np.pi) - 1e-12)
    targets = arg_gamma + 2.0 * np.pi * (m0 + np.arange(n))

    def h(t: float, target_phase: complex) -> float:
        # equals F(t) - target inside a bracket where |F - target| < pi
        return float(np.angle(evaluate(B, np.exp(1j * t)) * np.conj(target_phase)))

    roots = []
    for target in targets:
        idx = int(np.searchsorted(args, target))
        if idx == 0:
            roots.append(np.exp(1j * ts[0]))
            continue
        lo, hi = float(ts[idx - 1]), float(ts[idx])
        flo, fhi = h(lo, gamma), h(hi, gamma)
        if flo > 1e-12 or fhi < -1e-12:
            raise BisectionFailureError(
                f"bracket [{lo!r}, {hi!r}] does not enclose the crossing "
                f"(h = {flo!r}, {fhi!r})"
            )
        while hi - lo > BISECTION_TOL:
            mid = (lo + hi) / 2.0
            if h(mid, gamma) <= 0.0:
                lo = mid
            else:
                hi = mid
        roots.append(np.exp(1j * (lo + hi) / 2.0))
    return np.asarray(roots, dtype=complex)


@dataclass(frozen=True)
class ClarkDecomposition:
    """Atoms of 1/(1 - conj(gamma) B(z)) = sum_k c_k/(1 - conj(zeta_k) z).

    All zeta_k are unimodular, all weights c_k are strictly positive, and
    the weights sum to 1 (a probability measure on the circle).
    """

    gamma: complex
    zetas: np.ndarray
    weights: np.ndarray

    def resolvent_sum(self, z):
        """Right-hand side of the decomposition identity at point(s) z."""
        z = np.asarray(z, dtype=complex)
        return (self.weights / (1.0 - np.conj(self.zetas) * z[..., None])).sum(axis=-1)


def clark_decomposition(B: BlaschkeProduct, gamma: complex) -> ClarkDecomposition:
    """Clark decomposition of a Blaschke product with B(0) = 0.

    zeta_k are the roots of B = gamma on the circle and
    c_k = B(zeta_k)/(zeta_k B'(zeta_k)) = 1/circle_log_derivative(B, zeta_k).
    """
    if not B.vanishes_at_zero():
        raise RequiresVanishingAtZeroError(
            "Clark decomposition needs an explicit zero at the origin"
        )
    gamma = complex(gamma)
    if abs(abs(gamma) - 1.0) > UNIMODULAR_TOL:
        raise NotUnimodularError(f"|gamma| = {abs(gamma)!r}, expected 1")
    gamma /= abs(gamma)
    zetas = level_set(B, gamma)
    weights = np.array([1.0 / circle_log_derivative(B, z) for z in zetas])
    return ClarkDecomposition(gamma=gamma, zetas=zetas, weights=weights)
