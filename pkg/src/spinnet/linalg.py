"""Self-contained dense linear algebra for small symmetric matrices.

Two routes to the propagator live here and stay independent of each other:
a cyclic Jacobi eigensolver (used by the spectral propagator) and a
Taylor-series matrix exponential with scaling and squaring (used as an
oracle to cross-check the spectral route).  Neither calls out to LAPACK.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EigensolverDiverged

__all__ = [
    "DEFAULT_TOL",
    "EigenDecomposition",
    "symmetric_eigendecomposition",
    "matrix_exponential_series",
]

DEFAULT_TOL = 1e-12

_SWEEP_LIMIT = 100
_SERIES_CUTOFF = 1e-18


def _as_symmetric_array(h: np.ndarray) -> np.ndarray:
    a = np.asarray(h)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    return np.array(a, dtype=np.float64)


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenpairs of a real symmetric matrix.

    values are ascending; column k of vectors is the eigenvector for
    values[k].  Columns are orthonormal to roughly machine precision.
    Degenerate eigenspaces carry no canonical basis; consumers must use
    full-matrix products or spectral projectors, never individual columns.
    """

    values: np.ndarray
    vectors: np.ndarray


def _offdiagonal_norm(a: np.ndarray) -> float:
    lower = np.tril(a, k=-1)
    return math.sqrt(2.0 * float(np.sum(lower * lower)))


def symmetric_eigendecomposition(h: np.ndarray, tol: float = DEFAULT_TOL) -> EigenDecomposition:
    """Diagonalize a symmetric matrix by cyclic Jacobi rotations.

    Sweeps rotate away each off-diagonal entry in turn until the
    off-diagonal Frobenius norm drops below tol times the Frobenius norm
    of the input.  Works on a private copy of h.  Raises
    EigensolverDiverged if the sweep limit is exhausted (not expected for
    any symmetric input: convergence is quadratic).
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    a = _as_symmetric_array(h)
    n = a.shape[0]
    v = np.eye(n, dtype=np.float64)
    threshold = tol * math.sqrt(float(np.sum(a * a)))

    for _ in range(_SWEEP_LIMIT):
        if _offdiagonal_norm(a) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                # Smaller-magnitude root of t^2 + 2*theta*t - 1 = 0: keeps
                # the rotation angle below pi/4 for stability.
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                # The rotation annihilates (p, q) exactly; write the
                # analytic values instead of the rounded ones.
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0

                v_p = v[:, p].copy()
                v_q = v[:, q].copy()
                v[:, p] = c * v_p - s * v_q
                v[:, q] = s * v_p + c * v_q

    if _offdiagonal_norm(a) > threshold:
        raise EigensolverDiverged(
            f"Jacobi sweeps did not converge in {_SWEEP_LIMIT} sweeps "
            f"(off-diagonal norm {_offdiagonal_norm(a):.3e} > {threshold:.3e})"
        )

    values = np.diag(a).copy()
    order = np.argsort(values, kind="stable")
    return EigenDecomposition(values=values[order], vectors=v[:, order])


def matrix_exponential_series(h: np.ndarray, t: float) -> np.ndarray:
    """Evaluate exp(-i*t*h) by Taylor series with scaling and squaring.

    The argument is scaled by 2**s until its infinity norm is at most 0.5,
    the series sum_k (-i*t*h/2**s)**k / k! is truncated once a term falls
    below 1e-18 in max magnitude, and the result is squared s times.
    Independent of the eigendecomposition route by construction.
    """
    if not math.isfinite(t):
        raise ValueError(f"time must be finite, got {t}")
    a = _as_symmetric_array(h)
    n = a.shape[0]
    scaled = (-1j * t) * a
    norm = float(np.max(np.sum(np.abs(scaled), axis=1), initial=0.0))
    squarings = 0
    while norm > 0.5:
        norm /= 2.0
        squarings += 1
    scaled /= 2.0**squarings

    u = np.eye(n, dtype=np.complex128)
    term = np.eye(n, dtype=np.complex128)
    k = 1
    while True:
        term = term @ scaled / k
        u += term
        if float(np.max(np.abs(term), initial=0.0)) < _SERIES_CUTOFF:
            break
        k += 1
        if k > 128:  # unreachable with the 0.5 norm bound; guards misuse
            raise RuntimeError("exponential series failed to terminate")
    for _ in range(squarings):
        u = u @ u
    return u
