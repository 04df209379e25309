"""Batch command-line surface over the library.

Subcommands: update, deflate, shift, eigs, verify, demo. Reports go to
stdout as single JSON lines (complex values rendered as canonical
literals, bare numbers when purely real); spectra print one canonical
literal per line, ordered by modulus descending then phase ascending.

Exit codes are a stable contract:
  0 ok, 2 parse error, 3 dimension error, 4 no convergence,
  5 theorem check failed at tolerance, 6 not an eigenvector.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .core import as_matrix, require_square
from .errors import (
    BrauerError,
    DimensionMismatch,
    DimensionTooLarge,
    DimensionTooSmall,
    NoConvergence,
    NotAnEigenvector,
    ParseError,
    ResidualTooLarge,
    RootsNoConvergence,
    ZeroCollision,
    ZeroVector,
)
from .matfile import (
    format_complex,
    parse_complex,
    read_matrix,
    read_vector,
    write_matrix,
)
from .oracle import eig_oracle
from .solver import PowerOptions, brauer_annihilate_and_continue, power_iteration, spectrum_by_deflation
from .spectrum import Spectrum
from .theorem import EigenPair, brauer_update, inner_y_star_x, shift_eigenvalue, similarity_deflate, verify_brauer

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DIMS = 3
EXIT_NO_CONVERGENCE = 4
EXIT_CHECK_FAILED = 5
EXIT_NOT_EIGENVECTOR = 6


def _jsonable(z: complex):
    """Complex value for a JSON report: bare number when purely real."""
    z = complex(z)
    if z.imag == 0.0:
        if float(z.real).is_integer() and abs(z.real) < 1e15:
            return int(z.real)
        return z.real
    return format_complex(z)


def _spectrum_lines(sigma: Spectrum) -> str:
    return "\n".join(format_complex(z) for z in sigma.canonical())


def _report(payload: dict) -> None:
    print(json.dumps(payload))


def cmd_update(args) -> int:
    a = read_matrix(args.a)
    require_square(as_matrix(a))
    x = read_vector(args.x)
    y = read_vector(args.y)
    if x.shape[0] != a.shape[0]:
        raise DimensionMismatch(f"{args.x}: vector dim {x.shape[0]} does not match matrix side {a.shape[0]}")
    if y.shape[0] != a.shape[0]:
        raise DimensionMismatch(f"{args.y}: vector dim {y.shape[0]} does not match matrix side {a.shape[0]}")
    updated = brauer_update(a, x, y)
    write_matrix(args.out, updated)
    inner = inner_y_star_x(x, y)
    _report(
        {
            "y_star_x": _jsonable(inner),
            "predicted_shift": _jsonable(inner),
            "out": str(args.out),
        }
    )
    return EXIT_OK


def cmd_deflate(args) -> int:
    a = read_matrix(args.a)
    require_square(as_matrix(a))
    opts = PowerOptions(tolerance=args.tol, seed=args.seed)
    pair = power_iteration(a, opts)
    result = similarity_deflate(a, pair)
    write_matrix(args.out, result.deflated)
    _report(
        {
            "lambda": _jsonable(result.eigenvalue),
            "block_residual": result.block_residual,
            "power_residual": pair.residual,
            "out": str(args.out),
        }
    )
    return EXIT_OK


def cmd_shift(args) -> int:
    mu = parse_complex(args.mu, where="--mu")
    a = read_matrix(args.a)
    require_square(as_matrix(a))
    opts = PowerOptions(tolerance=args.tol, seed=args.seed)
    pair = power_iteration(a, opts)
    shifted, y = shift_eigenvalue(a, pair, mu)
    write_matrix(args.out, shifted)
    _report(
        {
            "lambda": _jsonable(pair.eigenvalue),
            "mu": _jsonable(mu),
            "y": [format_complex(complex(v)) for v in y],
            "out": str(args.out),
        }
    )
    return EXIT_OK


def cmd_eigs(args) -> int:
    a = read_matrix(args.a)
    require_square(as_matrix(a))
    if args.method == "oracle":
        sigma = eig_oracle(a)
    else:
        opts = PowerOptions(tolerance=args.tol, seed=args.seed)
        driver = (
            spectrum_by_deflation if args.method == "deflation"
            else brauer_annihilate_and_continue
        )
        sigma = driver(a, opts).spectrum
    print(_spectrum_lines(sigma))
    return EXIT_OK


def cmd_verify(args) -> int:
    a = read_matrix(args.a)
    require_square(as_matrix(a))
    x = read_vector(args.x)
    y = read_vector(args.y)
    report = verify_brauer(a, x, y, args.tol)
    _report(
        {
            "lambda": _jsonable(report.eigenvalue),
            "y_star_x": _jsonable(report.inner),
            "rayleigh_residual": report.rayleigh_residual,
            "spectrum_a": [format_complex(z) for z in report.spectrum_original.canonical()],
            "spectrum_updated": [format_complex(z) for z in report.spectrum_updated.canonical()],
            "predicted": [format_complex(z) for z in report.predicted.canonical()],
            "pairing": [list(p) for p in report.pairing],
            "max_error": report.max_error,
            "tolerance": report.tolerance,
            "matched": report.passed,
        }
    )
    if not report.passed:
        print(
            "theorem check FAILED: predicted and oracle spectra differ by "
            f"{report.max_error:.3e} (> {report.tolerance:.3e}); this indicates an "
            "implementation bug or a violated precondition",
            file=sys.stderr,
        )
        return EXIT_CHECK_FAILED
    return EXIT_OK


DEMO_MATRIX = np.array(
    [[0, 1, 1], [1, 0, 1], [1, 1, 0]], dtype=np.complex128
)


def cmd_demo(args) -> int:
    """Raise the Perron root of a nonnegative matrix, keeping nonnegativity.

    The 3x3 zero-diagonal ones matrix has Perron pair (2, (1,1,1)/sqrt(3)).
    Shifting the Perron root upward along the minimum-norm direction adds
    shift/3 to every entry, so the matrix stays entrywise nonnegative.
    """
    shift = args.shift
    a = DEMO_MATRIX.copy()
    x = np.full(3, 1.0 / np.sqrt(3.0), dtype=np.complex128)
    lam = 2.0 + 0.0j
    residual = float(np.linalg.norm(a @ x - lam * x))
    pair = EigenPair(lam, x, residual)
    mu = lam + shift
    shifted, y = shift_eigenvalue(a, pair, mu)

    def matrix_lines(m):
        return "\n".join(
            "  " + " ".join(format_complex(complex(v)) for v in row) for row in m
        )

    before = eig_oracle(a)
    after = eig_oracle(shifted)
    print("nonnegative matrix A with Perron pair (2, (1,1,1)/sqrt(3)):")
    print(matrix_lines(a))
    print("spectrum(A):")
    print(_spectrum_lines(before))
    print(f"shifting the Perron root by {format_complex(complex(shift))} "
          f"with the minimum-norm update y = conj(mu - lambda) x:")
    print(matrix_lines(shifted))
    print("spectrum(A + xy*):")
    print(_spectrum_lines(after))
    perron_after = max(after, key=abs)
    err = abs(perron_after - mu)
    _report(
        {
            "perron_before": _jsonable(lam),
            "shift": _jsonable(complex(shift)),
            "perron_after": _jsonable(perron_after),
            "error": err,
            "nonnegative": bool(np.all(shifted.real >= 0) and np.allclose(shifted.imag, 0)),
            "ok": bool(err <= 1e-8),
        }
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brauer",
        description="Rank-one eigenvalue perturbation, similarity deflation, "
        "and oracle-verified spectra for dense complex matrices.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("update", help="write A + xy* and report y*x")
    p.add_argument("a", help="matrix file (complex-matrix)")
    p.add_argument("x", help="eigenvector file (complex-vector)")
    p.add_argument("y", help="perturbation vector file (complex-vector)")
    p.add_argument("out", help="output matrix file")
    p.set_defaults(func=cmd_update)

    p = sub.add_parser("deflate", help="extract the dominant eigenvalue and write the deflated block")
    p.add_argument("a", help="matrix file")
    p.add_argument("out", help="output file for the (n-1)x(n-1) block")
    p.add_argument("--tol", type=float, default=1e-10, help="power-iteration tolerance")
    p.add_argument("--seed", type=int, default=0, help="start-vector seed")
    p.set_defaults(func=cmd_deflate)

    p = sub.add_parser("shift", help="move the dominant eigenvalue to mu via a rank-one update")
    p.add_argument("a", help="matrix file")
    p.add_argument("mu", help="target eigenvalue (complex literal)")
    p.add_argument("out", help="output matrix file")
    p.add_argument("--tol", type=float, default=1e-10, help="power-iteration tolerance")
    p.add_argument("--seed", type=int, default=0, help="start-vector seed")
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("eigs", help="print the spectrum, one literal per line")
    p.add_argument("a", help="matrix file")
    p.add_argument(
        "--method",
        choices=["oracle", "deflation", "annihilate"],
        default="deflation",
        help="oracle: characteristic polynomial roots; deflation: shrinking "
        "similarity recursion (default); annihilate: same-size rank-one shifts",
    )
    p.add_argument("--tol", type=float, default=1e-10, help="power-iteration tolerance")
    p.add_argument("--seed", type=int, default=0, help="start-vector seed")
    p.set_defaults(func=cmd_eigs)

    p = sub.add_parser("verify", help="check the rank-one update law against the oracle")
    p.add_argument("a", help="matrix file")
    p.add_argument("x", help="candidate eigenvector file")
    p.add_argument("y", help="perturbation vector file")
    p.add_argument("--tol", type=float, default=1e-6, help="verification tolerance")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("demo", help="scripted Perron-root shift on a nonnegative matrix")
    p.add_argument("--shift", type=float, default=3.0, help="amount to raise the Perron root by")
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except (DimensionMismatch, DimensionTooSmall, DimensionTooLarge) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DIMS
    except (NoConvergence, ZeroCollision, RootsNoConvergence, ResidualTooLarge) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except NotAnEigenvector as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NOT_EIGENVECTOR
    except (BrauerError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
