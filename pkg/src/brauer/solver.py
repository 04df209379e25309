"""Desk-scale spectrum computation by repeated dominant-pair extraction.

Two drivers, both this library's own realizations of classical deflation:

* ``spectrum_by_deflation`` shrinks the problem: extract the dominant
  eigenpair, conjugate by a unitary completion, recurse on the trailing
  block. This mirrors the constructive similarity step exactly.
* ``brauer_annihilate_and_continue`` keeps the matrix size fixed: each
  extracted eigenvalue is shifted to 0 by a rank-one update and power
  iteration re-runs on the same-size matrix.

Neither driver accelerates power iteration (no shifts, no restarts);
spectra with tied dominant moduli report NoConvergence honestly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .core import as_matrix, frobenius_norm, require_square
from .errors import NoConvergence, ZeroCollision
from .spectrum import Spectrum
from .theorem import EigenPair, shift_eigenvalue, similarity_deflate


@dataclass(frozen=True)
class PowerOptions:
    """Knobs for power iteration; the seed drives the start-vector generator."""

    max_iterations: int = 10000
    tolerance: float = 1e-10
    seed: int = 0

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if not self.tolerance > 0.0:
            raise ValueError("tolerance must be positive")


@dataclass(frozen=True)
class StageRecord:
    """Per-stage bookkeeping: extracted eigenvalue and residuals.

    ``block_residual`` is the subdiagonal-block norm from similarity
    deflation; the annihilation driver has no block and records 0.0.
    """

    eigenvalue: complex
    eigen_residual: float
    block_residual: float


@dataclass(frozen=True)
class SpectrumResult:
    """Collected eigenvalues plus the error trail, one entry per stage."""

    spectrum: Spectrum
    per_stage_residuals: tuple[float, ...]
    stages: tuple[StageRecord, ...]


def _start_vector(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed % 2**64)
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    norm = float(np.linalg.norm(v))
    while norm == 0.0:  # measure zero, but keep determinism if it ever fires
        v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        norm = float(np.linalg.norm(v))
    return v / norm


def power_iteration(a, opts: PowerOptions = PowerOptions()) -> EigenPair:
    """Dominant eigenpair by normalized iteration, Rayleigh-quotient estimate.

    Converges when ||A v - lam v||_2 <= tolerance * ||A||_F with v the unit
    iterate; deterministic given the seed. Raises NoConvergence (with the
    final residual and iteration count) when the budget runs out, the
    expected outcome when the two largest eigenvalue moduli tie.
    """
    a = as_matrix(a)
    n = require_square(a)
    gate = opts.tolerance * frobenius_norm(a)
    v = _start_vector(n, opts.seed)
    residual = float("inf")
    for _ in range(opts.max_iterations):
        w = a @ v
        lam = complex(np.vdot(v, w))
        residual = float(np.linalg.norm(w - lam * v))
        if residual <= gate:
            return EigenPair(lam, v, residual)
        norm_w = float(np.linalg.norm(w))
        if norm_w == 0.0:
            # v is in the nullspace: an exact eigenpair for 0
            return EigenPair(0.0j, v, 0.0)
        v = w / norm_w
    raise NoConvergence(residual, opts.max_iterations)


def spectrum_by_deflation(a, opts: PowerOptions = PowerOptions()) -> SpectrumResult:
    """Full spectrum via the shrinking similarity recursion.

    Stage k runs power iteration on the current (n-k) x (n-k) block with
    seed (opts.seed + k), deflates, and recurses on the trailing block;
    the final 1x1 block contributes its entry directly. Exactly n
    eigenvalues and n stage records are produced. NoConvergence is
    re-raised with the failing stage index attached.
    """
    a = as_matrix(a)
    n = require_square(a)
    values: list[complex] = []
    residuals: list[float] = []
    stages: list[StageRecord] = []
    block = a
    for stage in range(n):
        if block.shape[0] == 1:
            lam = complex(block[0, 0])
            values.append(lam)
            residuals.append(0.0)
            stages.append(StageRecord(lam, 0.0, 0.0))
            break
        stage_opts = replace(opts, seed=opts.seed + stage)
        try:
            pair = power_iteration(block, stage_opts)
        except NoConvergence as err:
            err.stage = stage
            raise
        result = similarity_deflate(block, pair)
        values.append(result.eigenvalue)
        residuals.append(pair.residual)
        stages.append(
            StageRecord(result.eigenvalue, pair.residual, result.block_residual)
        )
        block = result.deflated
    return SpectrumResult(Spectrum.of(values), tuple(residuals), tuple(stages))


def brauer_annihilate_and_continue(
    a, opts: PowerOptions = PowerOptions()
) -> SpectrumResult:
    """Full spectrum via same-size rank-one annihilation.

    Each stage extracts the dominant pair, records its eigenvalue, and
    shifts it to 0 (minimum-norm rank-one update), so the working matrix
    keeps its size while its spectrum loses one eigenvalue to 0 per stage.
    Requires eigenvalues distinct in modulus and nonzero except possibly
    one: when the dominant modulus falls below tolerance * (1 + ||A||_F)
    with exactly one eigenvalue left, that one is recorded as 0; with more
    than one left, the remaining originals cannot be told apart from the
    annihilated zeros and ZeroCollision is raised.
    """
    a = as_matrix(a)
    n = require_square(a)
    zero_tol = opts.tolerance * (1.0 + frobenius_norm(a))
    work = a.copy()
    values: list[complex] = []
    residuals: list[float] = []
    stages: list[StageRecord] = []
    for stage in range(n):
        remaining = n - stage
        if frobenius_norm(work) <= zero_tol:
            if remaining == 1:
                values.append(0.0j)
                residuals.append(0.0)
                stages.append(StageRecord(0.0j, 0.0, 0.0))
                break
            raise ZeroCollision(stage, frobenius_norm(work))
        stage_opts = replace(opts, seed=opts.seed + stage)
        try:
            pair = power_iteration(work, stage_opts)
        except NoConvergence as err:
            err.stage = stage
            raise
        if abs(pair.eigenvalue) <= zero_tol:
            if remaining == 1:
                values.append(0.0j)
                residuals.append(pair.residual)
                stages.append(StageRecord(0.0j, pair.residual, 0.0))
                break
            raise ZeroCollision(stage, abs(pair.eigenvalue))
        values.append(pair.eigenvalue)
        residuals.append(pair.residual)
        stages.append(StageRecord(pair.eigenvalue, pair.residual, 0.0))
        work, _ = shift_eigenvalue(work, pair, 0.0j)
    return SpectrumResult(Spectrum.of(values), tuple(residuals), tuple(stages))
