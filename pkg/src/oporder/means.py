"""Geometric mean of PSD matrices and the associated Riccati solve.

The mean of invertible B with PSD C is the closed formula
B#C = B^(1/2) (B^(-1/2) C B^(-1/2))^(1/2) B^(1/2); it is the unique PSD
solution X of X B^(-1) X = C and the maximal PSD X with [[B, X], [X, C]]
PSD. The quadratic equation X* B^(-1) X - T X - X T = C with B PSD
invertible, BT Hermitian and C PSD has the Hermitian solution
X = (T* B T + C) # B + B T.
"""

from __future__ import annotations

import warnings

import numpy as np

from .core import (
    DEFAULT_TOL,
    NotPSDError,
    ShapeError,
    Tolerance,
    as_matrix,
    fnorm,
    matrix_rank,
    psd_sqrt,
)

__all__ = [
    "SingularMeanWarning",
    "BSingularError",
    "BTNotHermitianError",
    "geometric_mean",
    "riccati_solve",
    "riccati_residual",
]


class SingularMeanWarning(UserWarning):
    """Raised (as a warning) when the mean falls back to regularization."""


class BSingularError(ValueError):
    """The B argument of the Riccati solve must be invertible."""


class BTNotHermitianError(ValueError):
    """The Riccati solve requires BT Hermitian."""


def _herm(M: np.ndarray) -> np.ndarray:
    return (M + M.conj().T) / 2.0


def _check_psd(M, tol: Tolerance, name: str) -> np.ndarray:
    M = as_matrix(M)
    if M.shape[0] != M.shape[1]:
        raise ShapeError(f"{name} must be square")
    if M.shape[0] == 0:
        return M
    if fnorm(M - M.conj().T) > tol.eq_bound(M, M.conj().T):
        raise NotPSDError(f"{name} is not Hermitian")
    w = np.linalg.eigvalsh(_herm(M))
    if w.min() < -(tol.eq_abs + tol.eq_rel * fnorm(M)):
        raise NotPSDError(f"{name} has negative eigenvalue {w.min():.3e}")
    return M


def geometric_mean(B, C, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """B # C for PSD B, C of equal size.

    Invertible B uses the closed formula. Singular B falls back to
    B + eps*I with eps = 1e-8 * trace(B) / n and emits SingularMeanWarning;
    B == 0 short-circuits to the exact limit 0.
    """
    B = _check_psd(B, tol, "B")
    C = _check_psd(C, tol, "C")
    if B.shape != C.shape:
        raise ShapeError(f"size mismatch: {B.shape} vs {C.shape}")
    n = B.shape[0]
    if n == 0:
        return B.copy()
    if matrix_rank(B, tol) < n:
        trace = float(np.trace(B).real)
        if trace <= 0.0:
            warnings.warn("B is zero; mean is exactly zero", SingularMeanWarning)
            return np.zeros_like(B)
        eps = 1e-8 * trace / n
        warnings.warn(
            f"B singular; regularized with eps={eps:.3e}", SingularMeanWarning
        )
        B = _herm(B) + eps * np.eye(n)
    w, V = np.linalg.eigh(_herm(B))
    # B passed the invertibility gate; keep eigenvalues off zero so the
    # inverse root stays finite even under clamp-level drift
    floor = float(w.max()) * tol.rank_rel * n
    w = np.clip(w, max(floor, np.finfo(float).tiny), None)
    root = np.sqrt(w)
    B_half = (V * root) @ V.conj().T
    B_ihalf = (V * (1.0 / root)) @ V.conj().T
    middle = psd_sqrt(_herm(B_ihalf @ C @ B_ihalf), tol)
    return _herm(B_half @ middle @ B_half)


def riccati_solve(B, T, C, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Hermitian solution X = (T*BT + C) # B + BT of X* B^(-1) X - T*X - XT = C.

    Preconditions: B PSD invertible (BSingularError), BT Hermitian
    (BTNotHermitianError), C PSD (NotPSDError).
    """
    B = _check_psd(B, tol, "B")
    C = _check_psd(C, tol, "C")
    T = as_matrix(T)
    n = B.shape[0]
    if T.shape != B.shape or C.shape != B.shape:
        raise ShapeError("B, T, C must share one square shape")
    if matrix_rank(B, tol) < n:
        raise BSingularError("B must be invertible")
    BT = B @ T
    if fnorm(BT - BT.conj().T) > tol.eq_bound(BT, BT.conj().T):
        raise BTNotHermitianError("BT must be Hermitian")
    D = _herm(T.conj().T @ B @ T + C)
    X = geometric_mean(D, B, tol) + BT
    return _herm(X)


def riccati_residual(X, B, T, C, tol: Tolerance = DEFAULT_TOL) -> float:
    """||X* B^(-1) X - T*X - XT - C||_F for a candidate solution X."""
    X = as_matrix(X)
    B = as_matrix(B)
    T = as_matrix(T)
    C = as_matrix(C)
    Binv = np.linalg.inv(B)
    return fnorm(X.conj().T @ Binv @ X - T.conj().T @ X - X @ T - C)
