"""Independent ground-truth spectra and tolerance-aware multiset matching.

The spectrum here is computed from the characteristic polynomial
(Faddeev-LeVerrier trace recursion) and a simultaneous root iteration
(Durand-Kerner). Neither path touches the Householder or LU code that the
rest of the library is built on, so a bug there cannot certify itself.

Accuracy caveat: a root of multiplicity m is inherently eps^(1/m) sensitive
to coefficient noise. The root finder compensates by refining detected
clusters with Newton's method on the (m-1)th derivative, which restores
machine precision for genuine multiple roots, but spectra with distinct
eigenvalues closer than ~1e-5 apart may be reported as merged. Matching is
by optimal assignment, not greedy pairing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import EPS, as_matrix, require_square
from .errors import CardinalityMismatch, DimensionTooLarge, RootsNoConvergence
from .spectrum import Spectrum

MAX_ORACLE_DIM = 16
_MAX_SWEEPS = 500
_EXHAUSTIVE_LIMIT = 8
_CLUSTER_RADIUS = 1e-5


def char_poly(a) -> np.ndarray:
    """Monic coefficients of det(zI - A), highest degree first.

    Uses the Faddeev-LeVerrier recursion: only traces and matrix products,
    so the result is independent of every factorization in this library.
    Restricted to n <= 16.
    """
    a = as_matrix(a)
    n = require_square(a)
    if n > MAX_ORACLE_DIM:
        raise DimensionTooLarge(f"char_poly supports n <= {MAX_ORACLE_DIM}, got {n}")
    coeffs = np.zeros(n + 1, dtype=np.complex128)
    coeffs[0] = 1.0
    eye = np.eye(n, dtype=np.complex128)
    m = eye.copy()
    for k in range(1, n + 1):
        m = a @ m
        c = -np.trace(m) / k
        coeffs[k] = c
        m = m + c * eye
    return coeffs


def poly_from_roots(roots) -> np.ndarray:
    """Expand a root multiset into monic coefficients (highest degree first)."""
    coeffs = np.array([1.0 + 0.0j])
    for r in roots:
        coeffs = np.convolve(coeffs, np.array([1.0, -complex(r)]))
    return coeffs


def _polyval(coeffs: np.ndarray, z):
    vals = np.full_like(np.asarray(z, dtype=np.complex128), coeffs[0])
    for c in coeffs[1:]:
        vals = vals * z + c
    return vals


def _derivative(coeffs: np.ndarray) -> np.ndarray:
    deg = len(coeffs) - 1
    return coeffs[:-1] * np.arange(deg, 0, -1)


def _newton_simple_root(coeffs: np.ndarray, z0: complex, max_iter: int = 60) -> complex:
    """Newton iteration assuming a simple root near z0."""
    d = _derivative(coeffs)
    z = complex(z0)
    for _ in range(max_iter):
        fp = complex(_polyval(d, z))
        if fp == 0:
            break
        step = complex(_polyval(coeffs, z)) / fp
        z -= step
        if abs(step) <= EPS * (1.0 + abs(z)):
            break
    return z


def _refine_clusters(coeffs: np.ndarray, roots: np.ndarray, gate: float) -> np.ndarray:
    """Collapse root clusters onto the matching root of a derivative.

    An m-fold root of p is a simple root of p^(m-1); Newton there converges
    quadratically where the cluster members themselves stall at eps^(1/m).
    A refinement is kept only if the polynomial residual at the refined
    point still meets the per-root gate, so close-but-distinct roots are
    left alone.
    """
    n = len(roots)
    radius = _CLUSTER_RADIUS * (1.0 + float(np.max(np.abs(roots))))
    visited = [False] * n
    out = roots.copy()
    for i in range(n):
        if visited[i]:
            continue
        # grow the cluster transitively
        members = [i]
        visited[i] = True
        frontier = [i]
        while frontier:
            j = frontier.pop()
            for k in range(n):
                if not visited[k] and abs(roots[j] - roots[k]) <= radius:
                    visited[k] = True
                    members.append(k)
                    frontier.append(k)
        m = len(members)
        if m < 2:
            continue
        d = coeffs
        for _ in range(m - 1):
            d = _derivative(d)
        center = complex(np.mean(roots[members]))
        refined = _newton_simple_root(d, center)
        if abs(refined - center) <= radius and abs(complex(_polyval(coeffs, refined))) <= gate:
            out[members] = refined
    return out


def poly_roots(p) -> Spectrum:
    """All roots of a monic polynomial, with multiplicity.

    Durand-Kerner simultaneous iteration from the standard deterministic
    starts (0.4+0.9i)^k, capped at 500 sweeps, followed by a guarded Newton
    polish and cluster refinement. Every returned root satisfies
    |p(root)| <= 1e-10 * (1 + max |coeff|); otherwise RootsNoConvergence is
    raised with the worst residual.
    """
    coeffs = np.asarray(p, dtype=np.complex128)
    if coeffs.ndim != 1 or len(coeffs) < 2:
        raise ValueError("expected coefficients of a polynomial of degree >= 1")
    if coeffs[0] != 1.0:
        raise ValueError("polynomial must be monic (leading coefficient exactly 1)")
    if not np.isfinite(coeffs).all():
        raise ValueError("polynomial coefficients must be finite")
    deg = len(coeffs) - 1
    if deg > MAX_ORACLE_DIM:
        raise DimensionTooLarge(f"poly_roots supports degree <= {MAX_ORACLE_DIM}")
    gate = 1e-10 * (1.0 + float(np.max(np.abs(coeffs))))

    z = np.array([(0.4 + 0.9j) ** k for k in range(1, deg + 1)])
    for _ in range(_MAX_SWEEPS):
        vals = _polyval(coeffs, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        denom = diff.prod(axis=1)
        safe = denom != 0
        step = np.where(safe, vals / np.where(safe, denom, 1.0), 0.0)
        z = z - step
        if np.all(np.abs(step) <= 5e-14 * (1.0 + np.abs(z))):
            break

    # polish: one guarded Newton pass per root, kept only if it helps
    dcoeffs = _derivative(coeffs)
    for _ in range(2):
        fp = _polyval(dcoeffs, z)
        ok = fp != 0
        candidate = z - np.where(ok, _polyval(coeffs, z) / np.where(ok, fp, 1.0), 0.0)
        better = np.abs(_polyval(coeffs, candidate)) <= np.abs(_polyval(coeffs, z))
        z = np.where(better, candidate, z)

    residuals = np.abs(_polyval(coeffs, z))
    if float(residuals.max()) > gate:
        raise RootsNoConvergence(float(residuals.max()), _MAX_SWEEPS)

    z = _refine_clusters(coeffs, z, gate)
    return Spectrum.of(z)


def eig_oracle(a) -> Spectrum:
    """Ground-truth spectrum: roots of the characteristic polynomial."""
    return poly_roots(char_poly(a))


@dataclass(frozen=True)
class MatchReport:
    """Outcome of optimally pairing two equal-cardinality spectra."""

    pairing: tuple[tuple[int, int], ...]
    max_error: float
    total_error: float
    matched: bool


@lru_cache(maxsize=None)
def _all_permutations(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp)


def _assign_exhaustive(cost: np.ndarray) -> np.ndarray:
    n = cost.shape[0]
    perms = _all_permutations(n)
    totals = cost[np.arange(n)[None, :], perms].sum(axis=1)
    return perms[int(np.argmin(totals))]

def _assign_hungarian(cost: np.ndarray) -> np.ndarray:
    """O(n^3) assignment via potentials and shortest augmenting paths."""
    n = cost.shape[0]
    inf = float("inf")
    u = [0.0] * (n + 1)
    v = [0.0] * (n + 1)
    match_row = [0] * (n + 1)  # match_row[j] = row assigned to column j (1-based)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        match_row[0] = i
        j0 = 0
        minv = [inf] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match_row[j0]
            delta = inf
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = float(cost[i0 - 1, j - 1]) - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[match_row[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match_row[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match_row[j0] = match_row[j1]
            j0 = j1
    assign = np.zeros(n, dtype=np.intp)
    for j in range(1, n + 1):
        assign[match_row[j] - 1] = j - 1
    return assign


def match_multisets(s1: Spectrum, s2: Spectrum, tol: float) -> MatchReport:
    """Minimum-total-cost perfect matching under cost |s1_i - s2_j|.

    Exhaustive over permutations up to n = 8 (trivially optimal), Hungarian
    method beyond. ``matched`` is true when the worst matched distance is
    within ``tol``.
    """
    a = np.asarray(list(s1), dtype=np.complex128)
    b = np.asarray(list(s2), dtype=np.complex128)
    if a.shape[0] != b.shape[0]:
        raise CardinalityMismatch(
            f"spectra have cardinalities {a.shape[0]} and {b.shape[0]}"
        )
    cost = np.abs(a[:, None] - b[None, :])
    n = a.shape[0]
    if n <= _EXHAUSTIVE_LIMIT:
        assign = _assign_exhaustive(cost)
    else:
        assign = _assign_hungarian(cost)
    errors = cost[np.arange(n), assign]
    max_error = float(errors.max()) if n else 0.0
    total_error = float(errors.sum())
    pairing = tuple((int(i), int(assign[i])) for i in range(n))
    return MatchReport(pairing, max_error, total_error, max_error <= tol)
