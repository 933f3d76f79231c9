"""Seeded randomized suites exercising the mapping theorems at desk scale.

Each suite draws random matrices normalized to numerical radius 1,
checks a theorem's inequality with a small one-sided slack, and returns a
VerifyReport. Reports are deterministic functions of (suite, trials, seed):
the per-trial RNG is derived from (seed, suite id, trial index), so results
do not depend on evaluation order.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import regions
from .blaschke import BlaschkeProduct
from .diskfun import (
    Blaschke,
    Compose,
    DiskFunction,
    Scale,
    eval_matrix,
    mobius_automorphism,
)
from .errors import NumericError, PolesNearSpectrumError
from .formats import format_complex, serialize_matrix
from .fov import boundary, numerical_radius
from .linalg import min_eigenvalue

# bracket width for radius refinement inside the suites; the resulting
# value error is ~1e-12, far below every slack used here
RADIUS_TOL = 3e-6

_SUITE_IDS = {
    "berger-stampfli": 1,
    "power": 2,
    "local-ineq": 3,
    "operator-ineq": 4,
    "region-s": 5,
    "drury": 6,
    "props52": 7,
    "search": 8,
}


@dataclass
class VerifyReport:
    suite: str
    trials: int
    failures: int
    worst_residual: float
    tolerance: float
    seed: int
    retries: int = 0
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    @property
    def warning(self) -> bool:
        """Early-drift flag: passing, but worst residual above half the tolerance."""
        return self.passed and self.worst_residual > 0.5 * self.tolerance

    def to_text(self) -> str:
        lines = [
            f"suite: {self.suite}",
            f"trials: {self.trials}",
            f"failures: {self.failures}",
            f"retries: {self.retries}",
            f"tolerance: {self.tolerance!r}",
            f"worst_residual: {self.worst_residual!r}",
            f"warning: {'true' if self.warning else 'false'}",
            f"seed: {self.seed}",
        ]
        if self.witness is not None:
            lines.append(f"witness: {json.dumps(self.witness, sort_keys=True)}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "trials": self.trials,
            "failures": self.failures,
            "retries": self.retries,
            "tolerance": self.tolerance,
            "worst_residual": self.worst_residual,
            "warning": self.warning,
            "seed": self.seed,
            "witness": self.witness,
        }


class _Recorder:
    """Accumulates residuals and the first failing witness."""

    def __init__(self):
        self.failures = 0
        self.worst = -math.inf
        self.witness = None

    def record(self, residual: float, tol: float, witness_fn):
        self.worst = max(self.worst, residual)
        if residual > tol:
            self.failures += 1
            if self.witness is None:
                self.witness = witness_fn()


def _trial_rng(seed: int, suite: str, index: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), _SUITE_IDS[suite], int(index)])


def random_matrix(rng: np.random.Generator, dim: int | None = None) -> np.ndarray:
    """Uniform complex entries in [-1,1] x [-1,1]i; dim drawn from 2..8."""
    if dim is None:
        dim = int(rng.integers(2, 9))
    return rng.uniform(-1.0, 1.0, (dim, dim)) + 1j * rng.uniform(-1.0, 1.0, (dim, dim))


def normalize_radius(T: np.ndarray) -> np.ndarray:
    w = numerical_radius(T, tol=RADIUS_TOL)
    if w < 1e-12:
        raise ValueError("matrix has (numerically) zero numerical radius")
    return T / w


def random_unit_vector(rng: np.random.Generator, dim: int) -> np.ndarray:
    x = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return x / np.linalg.norm(x)


def random_blaschke(rng: np.random.Generator, max_degree: int,
                    vanishing: bool = True, zero_radius: float = 0.9) -> BlaschkeProduct:
    degree = int(rng.integers(1, max_degree + 1))
    zeros = []
    if vanishing:
        zeros.append(0j)
    while len(zeros) < degree:
        r = zero_radius * math.sqrt(rng.uniform())
        phi = rng.uniform(0.0, 2.0 * np.pi)
        zeros.append(r * np.exp(1j * phi))
    constant = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    return BlaschkeProduct(constant, tuple(zeros))


def _eval_with_scale_retry(f: DiskFunction, T: np.ndarray):
    """eval_matrix, falling back to f(0.999 z) when a resolvent is singular.

    Returns (result, retried)."""
    try:
        return eval_matrix(f, T), False
    except PolesNearSpectrumError:
        return eval_matrix(Scale(0.999, f), T), True


def _matrix_witness(T: np.ndarray, **extra) -> dict:
    w = {"matrix": serialize_matrix(T)}
    w.update(extra)
    return w


def check_berger_stampfli(trials: int, seed: int = 42) -> VerifyReport:
    """w(B(T)) <= 1 for random Blaschke B with B(0) = 0 and w(T) = 1."""
    tol = 1e-7
    rec = _Recorder()
    retries = 0
    for i in range(trials):
        rng = _trial_rng(seed, "berger-stampfli", i)
        T = normalize_radius(random_matrix(rng))
        B = random_blaschke(rng, max_degree=5)
        FT, retried = _eval_with_scale_retry(Blaschke(B), T)
        retries += retried
        value = numerical_radius(FT, tol=RADIUS_TOL)
        rec.record(value - 1.0, tol, lambda: _matrix_witness(
            T, constant=format_complex(B.constant),
            zeros=[format_complex(a) for a in B.zeros], value=value))
    return VerifyReport("berger-stampfli", trials, rec.failures, rec.worst,
                        tol, seed, retries, rec.witness)


def check_power_inequality(trials: int, n_max: int = 6, seed: int = 42) -> VerifyReport:
    """w(T^n) <= w(T)^n = 1 for n = 2..n_max."""
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    tol = 1e-7
    rec = _Recorder()
    for i in range(trials):
        rng = _trial_rng(seed, "power", i)
        T = normalize_radius(random_matrix(rng))
        P = T
        for n in range(2, n_max + 1):
            P = P @ T
            value = numerical_radius(P, tol=RADIUS_TOL)
            rec.record(value - 1.0, tol,
                       lambda: _matrix_witness(T, power=n, value=value))
    return VerifyReport("power", trials, rec.failures, rec.worst, tol, seed,
                        0, rec.witness)


def _local_bound(p: complex) -> float:
    return 2.0 + 2.0 * math.sqrt(max(0.0, 1.0 - abs(p) ** 2))


def check_local_inequality(trials: int, seed: int = 42) -> VerifyReport:
    """||Tx||^2 <= 2 + 2 sqrt(1 - |<Tx,x>|^2) for w(T) = 1, plus the angle
    and 2x2-corner reformulations."""
    tol = 1e-9
    rec = _Recorder()
    for i in range(trials):
        rng = _trial_rng(seed, "local-ineq", i)
        T = normalize_radius(random_matrix(rng))
        x = random_unit_vector(rng, T.shape[0])
        Tx = T @ x
        p = complex(np.vdot(x, Tx))
        norm_tx = float(np.linalg.norm(Tx))
        rec.record(norm_tx ** 2 - _local_bound(p), tol,
                   lambda: _matrix_witness(T, vector=[format_complex(v) for v in x]))
        # hermitian-angle form: ||Tx|| <= max(2|sin(angle)|, sqrt(2))
        if norm_tx > 1e-12:
            cos_a = min(1.0, abs(p) / norm_tx)
            bound = max(2.0 * math.sqrt(1.0 - cos_a ** 2), math.sqrt(2.0))
            rec.record(norm_tx - bound, tol,
                       lambda: _matrix_witness(T, vector=[format_complex(v) for v in x]))
        # 2x2 corner bound: |c| <= 1 + sqrt(1 - |a|^2)
        M = normalize_radius(random_matrix(rng, dim=2))
        a, c = complex(M[0, 0]), complex(M[1, 0])
        rec.record(abs(c) - (1.0 + math.sqrt(max(0.0, 1.0 - abs(a) ** 2))), tol,
                   lambda: _matrix_witness(M))
    return VerifyReport("local-ineq", trials, rec.failures, rec.worst, tol,
                        seed, 0, rec.witness)


def check_props52(trials: int, seed: int = 42) -> VerifyReport:
    """The two reformulations of the local inequality on their own."""
    tol = 1e-9
    rec = _Recorder()
    for i in range(trials):
        rng = _trial_rng(seed, "props52", i)
        T = normalize_radius(random_matrix(rng))
        x = random_unit_vector(rng, T.shape[0])
        Tx = T @ x
        p = complex(np.vdot(x, Tx))
        norm_tx = float(np.linalg.norm(Tx))
        if norm_tx > 1e-12:
            cos_a = min(1.0, abs(p) / norm_tx)
            bound = max(2.0 * math.sqrt(1.0 - cos_a ** 2), math.sqrt(2.0))
            rec.record(norm_tx - bound, tol,
                       lambda: _matrix_witness(T, vector=[format_complex(v) for v in x]))
        M = normalize_radius(random_matrix(rng, dim=2))
        a, c = complex(M[0, 0]), complex(M[1, 0])
        rec.record(abs(c) - (1.0 + math.sqrt(max(0.0, 1.0 - abs(a) ** 2))), tol,
                   lambda: _matrix_witness(M))
    return VerifyReport("props52", trials, rec.failures, rec.worst, tol, seed,
                        0, rec.witness)


def check_operator_inequality(trials: int, seed: int = 42) -> VerifyReport:
    """Q(T, t, t^2 - 1/4) >= 0 for t in [0, 1/2] and w(T) = 1."""
    tol = 1e-8
    t_grid = np.linspace(0.0, 0.5, 21)
    rec = _Recorder()
    for i in range(trials):
        rng = _trial_rng(seed, "operator-ineq", i)
        T = normalize_radius(random_matrix(rng))
        for t in t_grid:
            lam = min_eigenvalue(regions.q_form(T, t, t * t - 0.25))
            rec.record(-lam, tol, lambda: _matrix_witness(T, t=float(t), lam_min=lam))
    return VerifyReport("operator-ineq", trials, rec.failures, rec.worst, tol,
                        seed, 0, rec.witness)


def _teardrop_margin(alpha: complex, points: np.ndarray) -> float:
    """max over boundary points of their support-function excess over td(alpha)."""
    points = np.asarray(points, dtype=complex)
    phis = 2.0 * np.pi * np.arange(720) / 720
    supports = np.asarray(regions.teardrop_support(alpha, phis))
    dirs = np.exp(-1j * phis)
    excess = np.real(np.outer(points, dirs)) - supports[None, :]
    margin = float(excess.max())
    # analytically critical directions arg(z) and arg(z - alpha), per point
    for shifted in (points, points - alpha):
        mask = shifted != 0
        if not np.any(mask):
            continue
        crit = np.angle(shifted[mask])
        sup = np.asarray(regions.teardrop_support(alpha, crit))
        proj = np.real(np.exp(-1j * crit) * points[mask])
        margin = max(margin, float((proj - sup).max()))
    return margin


def check_drury(trials: int, seed: int = 42) -> VerifyReport:
    """W(f(T)) inside td(f(0)) and w(f(T)) <= 1 + |f(0)| - |f(0)|^2."""
    tol = 1e-6
    rec = _Recorder()
    retries = 0
    for i in range(trials):
        rng = _trial_rng(seed, "drury", i)
        T = normalize_radius(random_matrix(rng))
        r = 0.95 * math.sqrt(rng.uniform())
        alpha = r * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
        B = random_blaschke(rng, max_degree=4)
        f = Compose(mobius_automorphism(alpha), Blaschke(B))
        FT, retried = _eval_with_scale_retry(f, T)
        retries += retried
        curve = boundary(FT, 360)
        margin = _teardrop_margin(alpha, curve.points)
        rec.record(margin, tol, lambda: _matrix_witness(
            T, alpha=format_complex(alpha),
            zeros=[format_complex(a) for a in B.zeros]))
        value = numerical_radius(FT, tol=RADIUS_TOL)
        bound = 1.0 + abs(alpha) - abs(alpha) ** 2
        rec.record(value - bound, tol, lambda: _matrix_witness(
            T, alpha=format_complex(alpha), value=value))
    return VerifyReport("drury", trials, rec.failures, rec.worst, tol, seed,
                        retries, rec.witness)


def check_region_S(trials: int, grid_density: int = 21, seed: int = 42) -> VerifyReport:
    """Boundary membership and below-boundary sharpness of the region S.

    Membership: Q(T, t, s) is PSD on the three boundary branches for random
    normalized T. Sharpness: at offset 0.01 below each branch, the proof's
    counterexample matrix produces a negative minimum eigenvalue.
    """
    if grid_density < 10:
        raise ValueError(f"grid_density must be >= 10, got {grid_density}")
    tol = 1e-8
    rec = _Recorder()

    branch1 = [(t, t * t - 0.25) for t in np.linspace(0.0, 0.5, grid_density)]
    branch2 = [(t, 2.0 * t - 1.0) for t in np.linspace(0.5, 1.0, grid_density)]
    branch3 = [(t, t * t) for t in np.linspace(1.0, 2.0, grid_density)]
    boundary_grid = branch1 + branch2 + branch3

    for i in range(trials):
        rng = _trial_rng(seed, "region-s", i)
        T = normalize_radius(random_matrix(rng))
        for t, s in boundary_grid:
            lam = min_eigenvalue(regions.q_form(T, t, s))
            rec.record(-lam, tol, lambda: _matrix_witness(
                T, t=float(t), s=float(s), lam_min=lam))

    # sharpness witnesses (offset 0.01 below each branch)
    shift = np.array([[0.0, 2.0], [0.0, 0.0]], dtype=complex)
    for t in np.linspace(0.025, 0.475, grid_density):
        lam = min_eigenvalue(regions.q_form(shift, t, t * t - 0.25 - 0.01))
        rec.record(lam, 0.0, lambda: _matrix_witness(shift, t=float(t), lam_min=lam))
    for t in np.linspace(0.51, 1.0, grid_density):
        lam = min_eigenvalue(regions.q_form(-np.eye(2, dtype=complex), t,
                                            2.0 * t - 1.0 - 0.01))
        rec.record(lam, 0.0, lambda: _matrix_witness(
            -np.eye(2, dtype=complex), t=float(t), lam_min=lam))
    for t in np.linspace(1.1, 2.0, grid_density):
        s = t * t - 0.01
        lam = min_eigenvalue(regions.q_form(-(t / s) * np.eye(2, dtype=complex), t, s))
        rec.record(lam, 0.0, lambda: _matrix_witness(
            -(t / s) * np.eye(2, dtype=complex), t=float(t), s=float(s), lam_min=lam))

    return VerifyReport("region-s", trials, rec.failures, rec.worst, tol, seed,
                        0, rec.witness)


def extremal_search(f: DiskFunction, dim: int, iterations: int, seed: int = 42,
                    initial_candidates: tuple = ()) -> tuple[float, np.ndarray]:
    """Hill-climbing search for matrices maximizing w(f(T)) subject to w(T) = 1.

    Random restarts plus coordinate-wise perturbation: step 0.3 per real
    parameter, halved after 20 consecutive non-improvements, restart when
    the step drops below 1e-4. Deterministic for a fixed seed.
    """
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")
    rng = np.random.default_rng([int(seed), _SUITE_IDS["search"]])
    n_params = 2 * dim * dim

    def to_matrix(v: np.ndarray) -> np.ndarray:
        return (v[: dim * dim] + 1j * v[dim * dim:]).reshape(dim, dim)

    def objective(v: np.ndarray):
        T = to_matrix(v)
        try:
            Tn = normalize_radius(T)
            FT = eval_matrix(f, Tn)
            return numerical_radius(FT, tol=RADIUS_TOL), Tn
        except (NumericError, ValueError):
            return None

    def random_start():
        while True:
            v = rng.uniform(-1.0, 1.0, n_params)
            res = objective(v)
            if res is not None:
                return v, res

    best_w = -math.inf
    best_T = None
    for cand in initial_candidates:
        v = np.concatenate([np.asarray(cand, dtype=complex).real.ravel(),
                            np.asarray(cand, dtype=complex).imag.ravel()])
        res = objective(v)
        if res is not None and res[0] > best_w:
            best_w, best_T = res[0], res[1]
            current, cur_val = v, res[0]
    if best_T is None:
        current, (cur_val, best_T) = random_start()
        best_w = cur_val

    step = 0.3
    stall = 0
    for it in range(iterations):
        k = it % n_params
        improved = False
        for sign in (1.0, -1.0):
            cand = current.copy()
            cand[k] += sign * step
            res = objective(cand)
            if res is not None and res[0] > cur_val + 1e-12:
                current, cur_val = cand, res[0]
                if res[0] > best_w:
                    best_w, best_T = res[0], res[1]
                improved = True
                break
        stall = 0 if improved else stall + 1
        if stall >= 20:
            step /= 2.0
            stall = 0
        if step < 1e-4:
            current, (cur_val, T_here) = random_start()
            if cur_val > best_w:
                best_w, best_T = cur_val, T_here
            step = 0.3
    return best_w, best_T


SUITES = {
    "berger-stampfli": lambda trials, seed: check_berger_stampfli(trials, seed),
    "power": lambda trials, seed: check_power_inequality(trials, seed=seed),
    "local-ineq": lambda trials, seed: check_local_inequality(trials, seed),
    "operator-ineq": lambda trials, seed: check_operator_inequality(trials, seed),
    "region-s": lambda trials, seed: check_region_S(trials, seed=seed),
    "drury": lambda trials, seed: check_drury(trials, seed),
    "props52": lambda trials, seed: check_props52(trials, seed),
}


def run_suites(names, trials: int, seed: int) -> list[VerifyReport]:
    return [SUITES[name](trials, seed) for name in names]
