"""Rank-one eigenvalue perturbation and constructive similarity deflation.

The central fact: if x is an eigenvector of A for eigenvalue lam, then for
any vector y the matrix A + xy* has the same eigenvalues as A except that
lam is replaced by lam + y*x. The constructive side builds an invertible
matrix whose first column is (proportional to) x; conjugating A by it
exposes lam in the (0,0) corner, a zero column block below it, and a
deflated (n-1) x (n-1) trailing block C with the remaining eigenvalues, so
the spectrum of A is {lam} union spectrum(C).

``completion`` realizes the invertible matrix as a unitary Householder
reflector (perfect conditioning, inverse = conjugate transpose);
``naive_completion`` is the pedagogical alternative: the identity with its
first column replaced by x, pivoted for invertibility.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    EPS,
    as_matrix,
    as_vector,
    conj_transpose,
    frobenius_norm,
    outer,
    require_square,
)
from .errors import (
    DimensionMismatch,
    DimensionTooSmall,
    LambdaNotInSpectrum,
    NotAnEigenvector,
    ResidualTooLarge,
    ZeroVector,
)
from .oracle import eig_oracle, match_multisets
from .spectrum import Spectrum

DEFLATION_RESIDUAL_FACTOR = 1e-8
DEFAULT_MATCH_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class EigenPair:
    """An eigenvalue with its eigenvector and the residual certifying them.

    ``residual`` is ||A x - lam x||_2 / ||x||_2, recorded against the matrix
    the pair was computed from.
    """

    eigenvalue: complex
    eigenvector: np.ndarray
    residual: float

    def __post_init__(self):
        vec = as_vector(self.eigenvector)
        object.__setattr__(self, "eigenvector", vec)
        object.__setattr__(self, "eigenvalue", complex(self.eigenvalue))
        object.__setattr__(self, "residual", float(self.residual))
        if not np.any(vec != 0):
            raise ZeroVector("eigenvector must be nonzero")
        if not (self.residual >= 0.0 and np.isfinite(self.residual)):
            raise ValueError("residual must be finite and non-negative")


@dataclass(frozen=True, eq=False)
class DeflationResult:
    """Artifacts of one similarity deflation step.

    ``eigenvalue`` is the (0,0) entry of M = Q* A Q, ``u_star`` the rest of
    M's first row, ``deflated`` the trailing (n-1) x (n-1) block C, ``q``
    the unitary completion used, and ``block_residual`` the norm of
    M[1:, 0], which exact arithmetic would make zero.
    """

    eigenvalue: complex
    u_star: np.ndarray
    deflated: np.ndarray
    q: np.ndarray
    block_residual: float

    def __post_init__(self):
        if self.block_residual < 0.0:
            raise ValueError("block_residual must be non-negative")
        side = self.deflated.shape[0]
        if self.deflated.shape != (side, side):
            raise DimensionMismatch("deflated block must be square")


@dataclass(frozen=True, eq=False)
class VerificationReport:
    """Everything the rank-one update claim predicts, against oracle truth."""

    eigenvalue: complex
    inner: complex
    rayleigh_residual: float
    spectrum_original: Spectrum
    spectrum_updated: Spectrum
    predicted: Spectrum
    pairing: tuple[tuple[int, int], ...]
    max_error: float
    tolerance: float
    passed: bool


def brauer_update(a, x, y) -> np.ndarray:
    """A + x y*. A zero y returns a bitwise copy of A."""
    a = as_matrix(a)
    n = require_square(a)
    x = as_vector(x)
    y = as_vector(y)
    if x.shape[0] != n or y.shape[0] != n:
        raise DimensionMismatch(
            f"matrix side {n} but vector dims {x.shape[0]} and {y.shape[0]}"
        )
    if not np.any(y != 0):
        return a.copy()
    return a + outer(x, y)


def inner_y_star_x(x, y) -> complex:
    """y* x = sum_j conj(y_j) x_j."""
    x = as_vector(x)
    y = as_vector(y)
    if x.shape[0] != y.shape[0]:
        raise DimensionMismatch(
            f"inner product needs equal dims, got {x.shape[0]} and {y.shape[0]}"
        )
    return complex(np.vdot(y, x))


def predict_spectrum(
    sigma: Spectrum, lam: complex, inner: complex, tol: float | None = None
) -> Spectrum:
    """Replace one copy of lam in sigma by lam + inner.

    The element removed is the one nearest to lam (ties broken by lowest
    index). If the nearest element is farther than ``tol`` away,
    LambdaNotInSpectrum is raised. ``tol`` defaults to
    1e-6 * (1 + max modulus over sigma).
    """
    lam = complex(lam)
    values = list(sigma)
    if not values:
        raise LambdaNotInSpectrum(float("inf"), 0.0)
    if tol is None:
        tol = DEFAULT_MATCH_TOL * (1.0 + max(abs(v) for v in values))
    k = min(range(len(values)), key=lambda i: abs(values[i] - lam))
    dist = abs(values[k] - lam)
    if dist > tol:
        raise LambdaNotInSpectrum(dist, tol)
    values.pop(k)
    values.append(lam + complex(inner))
    return Spectrum.of(values)


def completion(x) -> np.ndarray:
    """Unitary matrix whose first column is x/||x|| up to a unit-modulus factor.

    Householder construction: with s = x_0/|x_0| (s = 1 when x_0 = 0) and
    alpha = -s ||x||, the reflector I - 2 w w*/(w*w) with w = x - alpha e_1
    is Hermitian, unitary, and has first column x/alpha. The sign choice
    makes w cancellation-free. Input is pre-scaled by its largest component
    so norms anywhere in the double-precision range are safe; only the
    exactly-zero vector is rejected.
    """
    x = as_vector(x)
    n = x.shape[0]
    scale = float(np.max(np.abs(x)))
    if scale == 0.0:
        raise ZeroVector("cannot complete the zero vector to a basis")
    u = x / scale
    norm_u = float(np.linalg.norm(u))
    s = u[0] / abs(u[0]) if u[0] != 0 else 1.0 + 0.0j
    alpha = -s * norm_u
    w = u.copy()
    w[0] -= alpha
    beta = 2.0 / float(np.vdot(w, w).real)
    return np.eye(n, dtype=np.complex128) - beta * np.outer(w, np.conj(w))


def naive_completion(x) -> np.ndarray:
    """Pedagogical completion: identity with first column x, pivoted.

    The first column is exactly x (no normalization), so Q^{-1} x = e_1
    holds literally; the remaining columns are the identity columns except
    the one indexed by x's largest component, which keeps det Q = +/- x_p
    away from zero. Invertible, but in general badly conditioned; prefer
    ``completion``.
    """
    x = as_vector(x)
    n = x.shape[0]
    p = int(np.argmax(np.abs(x)))
    if abs(x[p]) == 0.0:
        raise ZeroVector("cannot complete the zero vector to a basis")
    q = np.zeros((n, n), dtype=np.complex128)
    q[:, 0] = x
    cols = [j for j in range(n) if j != p]
    for k, j in enumerate(cols):
        q[j, k + 1] = 1.0
    return q


def similarity_deflate(a, pair: EigenPair, tol: float | None = None) -> DeflationResult:
    """Conjugate A by a unitary completion of the eigenvector and split off lam.

    Computes M = Q* A Q with Q = completion(pair.eigenvector) and returns
    lam = M[0,0], the first-row tail u*, the trailing block C, Q, and the
    norm of the first-column tail (zero in exact arithmetic; here bounded
    by rounding at scale n*eps*||A||_F plus the pair's own residual).

    The pair's residual must be within ``tol`` (default
    1e-8 * ||A||_F); eigenvalues of C are then the non-deflated eigenvalues
    of A to the same accuracy.
    """
    a = as_matrix(a)
    n = require_square(a)
    if n < 2:
        raise DimensionTooSmall(f"deflation needs n >= 2, got {n}")
    if pair.eigenvector.shape[0] != n:
        raise DimensionMismatch(
            f"eigenvector dim {pair.eigenvector.shape[0]} does not match side {n}"
        )
    gate = DEFLATION_RESIDUAL_FACTOR * frobenius_norm(a) if tol is None else float(tol)
    if pair.residual > gate:
        raise ResidualTooLarge(pair.residual, gate)
    q = completion(pair.eigenvector)
    m = conj_transpose(q) @ a @ q
    lam = complex(m[0, 0])
    u_star = m[0, 1:].copy()
    c = m[1:, 1:].copy()
    block_residual = float(np.linalg.norm(m[1:, 0]))
    return DeflationResult(lam, u_star, c, q, block_residual)


def shift_eigenvalue(
    a, pair: EigenPair, mu: complex, tol: float | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Move the pair's eigenvalue to mu by a minimum-norm rank-one update.

    Chooses y = conj((mu - lam)/||x||^2) x, the unique minimum-norm solution
    of y*x = mu - lam, and returns (A + x y*, y). With mu equal to the
    pair's eigenvalue, y is exactly zero and the returned matrix is a
    bitwise copy of A. The pair's residual must pass the same gate as
    ``similarity_deflate``.
    """
    a = as_matrix(a)
    n = require_square(a)
    x = pair.eigenvector
    if x.shape[0] != n:
        raise DimensionMismatch(
            f"eigenvector dim {x.shape[0]} does not match side {n}"
        )
    gate = DEFLATION_RESIDUAL_FACTOR * frobenius_norm(a) if tol is None else float(tol)
    if pair.residual > gate:
        raise ResidualTooLarge(pair.residual, gate)
    norm_sq = float(np.vdot(x, x).real)
    if norm_sq == 0.0:
        raise ZeroVector("eigenvector must be nonzero")
    c = (complex(mu) - pair.eigenvalue) / norm_sq
    if c == 0:
        y = np.zeros(n, dtype=np.complex128)
    else:
        y = np.conj(c) * x
    return brauer_update(a, x, y), y


def verify_brauer(a, x, y, tol: float) -> VerificationReport:
    """Check the rank-one update claim end to end against the oracle.

    lam is estimated as the Rayleigh quotient x*Ax/x*x rather than trusted
    from the caller; the vector must satisfy ||Ax - lam x||/||x|| <=
    tol * (1 + ||A||_F) or NotAnEigenvector is raised. The oracle spectrum
    of A + xy* is then matched (optimal assignment) against the predicted
    spectrum at tolerance tol * (1 + ||A||_F + ||x|| ||y||).
    """
    a = as_matrix(a)
    n = require_square(a)
    x = as_vector(x)
    y = as_vector(y)
    if x.shape[0] != n or y.shape[0] != n:
        raise DimensionMismatch(
            f"matrix side {n} but vector dims {x.shape[0]} and {y.shape[0]}"
        )
    norm_sq = float(np.vdot(x, x).real)
    if norm_sq == 0.0:
        raise ZeroVector("candidate eigenvector must be nonzero")
    ax = a @ x
    lam = complex(np.vdot(x, ax) / norm_sq)
    residual = float(np.linalg.norm(ax - lam * x) / np.sqrt(norm_sq))
    norm_a = frobenius_norm(a)
    gate = tol * (1.0 + norm_a)
    if residual > gate:
        raise NotAnEigenvector(residual, gate)

    inner = inner_y_star_x(x, y)
    before = eig_oracle(a)
    after = eig_oracle(brauer_update(a, x, y))
    scale = 1.0 + norm_a + float(np.linalg.norm(x) * np.linalg.norm(y))
    match_tol = tol * scale
    predicted = predict_spectrum(before, lam, inner, tol=match_tol)
    report = match_multisets(predicted, after, match_tol)
    return VerificationReport(
        eigenvalue=lam,
        inner=inner,
        rayleigh_residual=residual,
        spectrum_original=before,
        spectrum_updated=after,
        predicted=predicted,
        pairing=report.pairing,
        max_error=report.max_error,
        tolerance=match_tol,
        passed=report.matched,
    )
