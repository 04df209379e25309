"""Minimal dense complex linear algebra used by every other module.

Matrices and vectors are numpy ``complex128`` arrays (row-major, explicit
dims); the helpers here validate shape and finiteness at the API boundary
and keep everything else a pure function of its inputs. The only
factorization is LU with partial pivoting, which exists so that inverses
are never formed explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, SingularMatrix

EPS = float(np.finfo(np.float64).eps)


def as_matrix(a) -> np.ndarray:
    """Coerce to a finite 2-D complex128 array (copies only if needed)."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got array of shape {m.shape}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise DimensionMismatch(f"matrix dimensions must be positive, got {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    return m


def as_vector(v) -> np.ndarray:
    """Coerce to a finite 1-D complex128 array."""
    w = np.asarray(v, dtype=np.complex128)
    if w.ndim != 1:
        raise DimensionMismatch(f"expected a vector, got array of shape {w.shape}")
    if w.shape[0] < 1:
        raise DimensionMismatch("vector dimension must be positive")
    if not np.isfinite(w).all():
        raise ValueError("vector entries must be finite (no NaN/Inf)")
    return w


def require_square(a: np.ndarray) -> int:
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    return a.shape[0]


def matmul(a, b) -> np.ndarray:
    """Matrix product with an explicit conformability check."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(
            f"cannot multiply shapes {a.shape} and {b.shape}"
        )
    return a @ b


def conj_transpose(a) -> np.ndarray:
    """Conjugate transpose (the * in A + xy*)."""
    a = as_matrix(a)
    return np.ascontiguousarray(a.conj().T)


def outer(x, y) -> np.ndarray:
    """Rank-one matrix x y* with entries x_i * conj(y_j)."""
    x = as_vector(x)
    y = as_vector(y)
    if x.shape[0] != y.shape[0]:
        raise DimensionMismatch(
            f"outer product needs equal dims, got {x.shape[0]} and {y.shape[0]}"
        )
    return np.outer(x, np.conj(y))


def matvec(a, v) -> np.ndarray:
    """Matrix-vector product with a conformability check."""
    a = as_matrix(a)
    v = as_vector(v)
    if a.shape[1] != v.shape[0]:
        raise DimensionMismatch(
            f"cannot apply shape {a.shape} to vector of dim {v.shape[0]}"
        )
    return a @ v


def frobenius_norm(a) -> float:
    """sqrt of the sum of squared entry moduli."""
    return float(np.linalg.norm(as_matrix(a)))


@dataclass(frozen=True, eq=False)
class LUFactorization:
    """Packed partial-pivoting LU of a square matrix.

    ``l_u_packed`` stores the unit-lower factor strictly below the diagonal
    and the upper factor on and above it. ``pivot`` is the row permutation:
    row ``i`` of the permuted matrix P A is row ``pivot[i]`` of A. ``sign``
    is the permutation's parity, so det A = sign * prod(diag(U)).
    """

    l_u_packed: np.ndarray
    pivot: tuple[int, ...]
    sign: int

    @property
    def n(self) -> int:
        return self.l_u_packed.shape[0]


def lu_factor(a) -> LUFactorization:
    """Factor P A = L U with partial pivoting.

    A pivot of magnitude below n * eps * ||A||_inf (induced infinity norm,
    max absolute row sum), or exactly zero, raises SingularMatrix carrying
    the failing pivot index.
    """
    a = as_matrix(a)
    n = require_square(a)
    lu = a.copy()
    perm = list(range(n))
    sign = 1
    inf_norm = float(np.max(np.sum(np.abs(lu), axis=1)))
    threshold = n * EPS * inf_norm
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        piv = float(np.abs(lu[p, k]))
        if piv < threshold or piv == 0.0:
            raise SingularMatrix(k, piv, threshold)
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            perm[k], perm[p] = perm[p], perm[k]
            sign = -sign
        lu[k + 1 :, k] /= lu[k, k]
        if k + 1 < n:
            lu[k + 1 :, k + 1 :] -= np.outer(lu[k + 1 :, k], lu[k, k + 1 :])
    return LUFactorization(lu, tuple(perm), sign)


def lu_solve(f: LUFactorization, b) -> np.ndarray:
    """Solve A z = b from a factorization of A."""
    b = as_vector(b)
    n = f.n
    if b.shape[0] != n:
        raise DimensionMismatch(
            f"right-hand side dim {b.shape[0]} does not match matrix side {n}"
        )
    lu = f.l_u_packed
    z = b[list(f.pivot)].copy()
    for i in range(1, n):
        z[i] -= lu[i, :i] @ z[:i]
    for i in range(n - 1, -1, -1):
        if i + 1 < n:
            z[i] -= lu[i, i + 1 :] @ z[i + 1 :]
        z[i] /= lu[i, i]
    return z


def lu_det(f: LUFactorization) -> complex:
    """Determinant from the factorization: sign * prod of pivots."""
    return complex(f.sign * np.prod(np.diag(f.l_u_packed)))
