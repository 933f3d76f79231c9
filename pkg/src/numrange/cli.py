"""Command-line front end.

Subcommands: range, radius, clark, teardrop, verify, search.
Exit codes are a stable contract:
    0 success, 1 verification failure, 2 usage/parse error,
    3 numeric failure, 4 precondition violation.
The environment variable NUMRANGE_SEED sets the default --seed.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import blaschke as bl
from . import formats, fov, verify
from .diskfun import Blaschke, Polynomial
from .errors import (
    NumericError,
    ParseError,
    PreconditionError,
    RequiresVanishingAtZeroError,
)

ALL_SUITES = ["berger-stampfli", "power", "local-ineq", "operator-ineq",
              "region-s", "drury", "props52"]


def _default_seed() -> int:
    env = os.environ.get("NUMRANGE_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return 42


def _read_matrix(path: str) -> np.ndarray:
    if path == "-":
        return formats.parse_matrix(sys.stdin.read())
    with open(path, "r", encoding="ascii") as fh:
        return formats.parse_matrix(fh.read())


def _write_output(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _svg_document(paths: list[str]) -> str:
    """Self-contained 800x800 SVG mapping the square [-2,2]^2."""
    body = "\n".join(paths)
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" '
        'viewBox="0 0 800 800">\n'
        '<rect width="800" height="800" fill="white"/>\n'
        f"{body}\n"
        "</svg>\n"
    )


def _px(z: complex) -> tuple[float, float]:
    return (z.real + 2.0) / 4.0 * 800.0, (2.0 - z.imag) / 4.0 * 800.0


def _svg_polyline(points, color: str, close: bool = False) -> str:
    coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in (_px(z) for z in points))
    tag = "polygon" if close else "polyline"
    return (f'<{tag} points="{coords}" fill="none" stroke="{color}" '
            'stroke-width="1.5"/>')


_SVG_UNIT_CIRCLE = ('<circle cx="400" cy="400" r="200" fill="none" '
                    'stroke="#bbbbbb" stroke-width="1" stroke-dasharray="4 4"/>')


def cmd_range(args) -> int:
    T = _read_matrix(args.matrix)
    curve = fov.boundary(T, args.angles)
    if args.out == "csv":
        lines = ["theta,support,re,im"]
        for theta, sup, pt in zip(curve.thetas, curve.supports, curve.points):
            lines.append(f"{theta:.17g},{sup:.17g},{pt.real:.17g},{pt.imag:.17g}")
        _write_output(args.output, "\n".join(lines) + "\n")
    else:
        paths = [_SVG_UNIT_CIRCLE, _svg_polyline(curve.points, "#c02020", close=True)]
        _write_output(args.output, _svg_document(paths))
    return 0


def cmd_radius(args) -> int:
    T = _read_matrix(args.matrix)
    w = fov.numerical_radius(T, tol=args.tol)
    print(f"{w:.15f}")
    return 0


def _clark_check_points(n: int) -> np.ndarray:
    """Deterministic low-discrepancy points filling |z| <= 0.9."""
    j = np.arange(n)
    radii = 0.9 * np.sqrt((j + 0.5) / n)
    angles = 2.0 * np.pi * ((j * 0.61803398874989479) % 1.0)
    return radii * np.exp(1j * angles)


def cmd_clark(args) -> int:
    f = formats.parse_function(args.function)
    if not isinstance(f, Blaschke):
        raise RequiresVanishingAtZeroError(
            "clark needs a Blaschke product expression with a zero at the origin"
        )
    B = f.product
    gamma = formats.parse_complex(args.gamma)
    decomp = bl.clark_decomposition(B, gamma)
    for zeta, c in zip(decomp.zetas, decomp.weights):
        print(f"{formats.format_complex(zeta)} {c:.17g}")
    print(f"sum_weights: {float(decomp.weights.sum()):.17g}")
    zs = _clark_check_points(args.check_points)
    lhs = 1.0 / (1.0 - np.conj(decomp.gamma) * bl.evaluate(B, zs))
    residual = float(np.abs(lhs - decomp.resolvent_sum(zs)).max())
    print(f"max_identity_residual: {residual:.17g}")
    return 0


def _teardrop_boundary(alpha: complex, n_grid: int = 720, n_seg: int = 21):
    """Ordered (phi, point) samples of the td(alpha) boundary.

    Unit-circle arc where the unit disk supports dominate, an arc of
    D(alpha, 1-|alpha|^2) where the second disk dominates, and the two
    common tangent segments at the crossing directions.
    """
    a = abs(alpha)
    r2 = 1.0 - a * a
    rows = []
    if a < 1e-12 or r2 < 1e-12:
        for phi in 2.0 * np.pi * np.arange(n_grid) / n_grid:
            rows.append((float(phi), np.exp(1j * phi)))
        return rows
    psi = math.atan2(alpha.imag, alpha.real)
    delta = math.acos(a)

    def point_at(phi: float) -> complex:
        if math.cos(phi - psi) >= a:
            return alpha + r2 * np.exp(1j * phi)
        return np.exp(1j * phi)

    crossings = sorted(((psi - delta) % (2.0 * np.pi), (psi + delta) % (2.0 * np.pi)))
    grid = list(2.0 * np.pi * np.arange(n_grid) / n_grid)
    events = [(phi, [point_at(phi)]) for phi in grid]
    for phi_c in crossings:
        seg = [np.exp(1j * phi_c) + u * (alpha + r2 * np.exp(1j * phi_c) - np.exp(1j * phi_c))
               for u in np.linspace(0.0, 1.0, n_seg)]
        events.append((phi_c, seg))
    events.sort(key=lambda item: item[0])
    for phi, pts in events:
        for z in pts:
            rows.append((float(phi), complex(z)))
    return rows


def cmd_teardrop(args) -> int:
    try:
        alpha = formats.parse_complex(args.alpha)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if abs(alpha) > 1.0 + 1e-12:
        raise ParseError(f"|alpha| must be <= 1, got {abs(alpha)!r}")
    rows = _teardrop_boundary(alpha)
    if args.out == "csv":
        lines = ["phi,re,im"]
        for phi, z in rows:
            lines.append(f"{phi:.17g},{z.real:.17g},{z.imag:.17g}")
        _write_output(args.output, "\n".join(lines) + "\n")
    else:
        points = [z for _, z in rows]
        paths = [_SVG_UNIT_CIRCLE, _svg_polyline(points, "#2040c0", close=True)]
        _write_output(args.output, _svg_document(paths))
    return 0


def cmd_verify(args) -> int:
    names = ALL_SUITES if args.suite == "all" else [args.suite]
    reports = verify.run_suites(names, args.trials, args.seed)
    if args.json:
        text = json.dumps([r.to_json_dict() for r in reports], sort_keys=True,
                          indent=2) + "\n"
    else:
        text = "\n".join(r.to_text() for r in reports)
    _write_output(args.output, text)
    return 0 if all(r.passed for r in reports) else 1


def cmd_search(args) -> int:
    f = formats.parse_function(args.function)
    candidates = []
    if args.dim == 2:
        candidates.append(np.array([[0.0, 2.0], [0.0, 0.0]], dtype=complex))
    best_w, best_T = verify.extremal_search(
        f, args.dim, args.iters, args.seed, tuple(candidates))
    print(f"best_w: {best_w:.15f}")
    witness = formats.serialize_matrix(best_T)
    if args.output and args.output != "-":
        _write_output(args.output, witness)
    else:
        sys.stdout.write(witness)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numrange",
        description="Numerical ranges, radii, Blaschke/Clark decompositions "
                    "and teardrop mapping bounds for complex matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("range", help="boundary of the numerical range W(T)")
    p.add_argument("matrix", help="matrix file (or - for stdin)")
    p.add_argument("--angles", type=int, default=360)
    p.add_argument("--out", choices=["csv", "svg"], default="csv")
    p.add_argument("--output", default="-", help="output file (default stdout)")
    p.set_defaults(func=cmd_range)

    p = sub.add_parser("radius", help="numerical radius w(T)")
    p.add_argument("matrix", help="matrix file (or - for stdin)")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("clark", help="Clark decomposition of a Blaschke product")
    p.add_argument("function", help="blaschke expression with a zero at the origin")
    p.add_argument("--gamma", required=True, help="unimodular target, re+imi")
    p.add_argument("--check-points", type=int, default=100, dest="check_points")
    p.set_defaults(func=cmd_clark)

    p = sub.add_parser("teardrop", help="boundary of the teardrop region td(alpha)")
    p.add_argument("--alpha", required=True, help="complex literal, |alpha| <= 1")
    p.add_argument("--out", choices=["csv", "svg"], default="csv")
    p.add_argument("--output", default="-", help="output file (default stdout)")
    p.set_defaults(func=cmd_teardrop)

    p = sub.add_parser("verify", help="run the theorem verification suites")
    p.add_argument("--suite", choices=ALL_SUITES + ["all"], required=True)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", default="-", help="report file (default stdout)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="hill-climb for matrices maximizing w(f(T))")
    p.add_argument("function", help="disk-function expression")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--iters", type=int, default=100)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--output", default="-", help="witness matrix file")
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 3
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
