"""Shared test generators: exact integer similarity constructions and CLI driving.

A = V D V^{-1} with V = L U for unit-triangular integer L, U (entries in
{-1,0,1} off the diagonal) is an exact integer matrix: det V = 1, V^{-1} is
integer (computed by the nilpotent series), and every product stays far
below 2^53, so the columns of V are eigenvectors of A with residual exactly
zero in double precision.
"""

from __future__ import annotations

import contextlib
import io

import numpy as np

from brauer.cli import main as cli_main


def _unit_inv(t: np.ndarray) -> np.ndarray:
    # inverse of a unit-triangular integer matrix: I - N + N^2 - ...
    n = t.shape[0]
    nil = t - np.eye(n, dtype=np.int64)
    inv = np.eye(n, dtype=np.int64)
    term = np.eye(n, dtype=np.int64)
    for _ in range(n - 1):
        term = -term @ nil
        inv = inv + term
    return inv


def unimodular(rng: np.random.Generator, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Random integer V with det V = 1 and its exact integer inverse."""
    lower = np.eye(n, dtype=np.int64)
    upper = np.eye(n, dtype=np.int64)
    k = n * (n - 1) // 2
    lower[np.tril_indices(n, -1)] = rng.integers(-1, 2, size=k)
    upper[np.triu_indices(n, 1)] = rng.integers(-1, 2, size=k)
    v = lower @ upper
    v_inv = _unit_inv(upper) @ _unit_inv(lower)
    return v, v_inv


def integer_similarity(
    rng: np.random.Generator, diag
) -> tuple[np.ndarray, np.ndarray]:
    """Exact integer A = V diag V^{-1}; returns (A, V) as complex arrays."""
    d = np.asarray(diag, dtype=np.int64)
    n = d.shape[0]
    v, v_inv = unimodular(rng, n)
    a = v @ np.diag(d) @ v_inv
    return a.astype(np.complex128), v.astype(np.complex128)


def distinct_int_diag(rng: np.random.Generator, n: int) -> np.ndarray:
    """n distinct integers with |value| <= 9."""
    return rng.choice(np.arange(-9, 10), size=n, replace=False)


def distinct_modulus_diag(rng: np.random.Generator, n: int) -> np.ndarray:
    """n nonzero integers with pairwise distinct absolute values, <= 9."""
    mags = rng.choice(np.arange(1, 10), size=n, replace=False)
    signs = rng.choice(np.array([-1, 1]), size=n)
    return mags * signs


def random_unit_box(rng: np.random.Generator, n: int) -> np.ndarray:
    """Complex entries with real and imaginary parts uniform in [-1, 1]."""
    return rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)


def run_cli(*argv: str) -> tuple[int, str, str]:
    """Invoke the CLI in-process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli_main(list(argv))
    return code, out.getvalue(), err.getvalue()
