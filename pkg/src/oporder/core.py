"""Dense complex-matrix primitives.

Everything downstream (order checks, shorted operators, means, generators)
is built on the helpers in this module: an SVD-backed pseudoinverse with a
single rank threshold, orthonormal bases for the four canonical subspaces of
an operator, range-inclusion tests, PSD square roots, polar decomposition,
and the block decomposition of a pair (A, B) relative to A's subspaces.

All functions are pure; matrices are numpy arrays with dtype complex128 and
are never mutated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "ShapeError",
    "NotPSDError",
    "as_matrix",
    "fnorm",
    "is_hermitian",
    "matrix_rank",
    "pinv",
    "range_basis",
    "row_basis",
    "kernel_basis",
    "cokernel_basis",
    "complement_basis",
    "proj_range",
    "range_included",
    "psd_sqrt",
    "PolarParts",
    "polar",
    "BlockDecomposition",
    "block_decompose",
    "MatrixClass",
    "classify",
]


class ShapeError(ValueError):
    """Operands have incompatible shapes."""


class NotPSDError(ValueError):
    """A matrix required to be positive semidefinite is not."""


@dataclass(frozen=True)
class Tolerance:
    """Numerical policy shared by every predicate.

    rank_rel
        Singular values at or below ``rank_rel * sigma_max * max(m, n)``
        count as zero.
    eq_abs, eq_rel
        Matrix equality: ``||X - Y||_F <= eq_abs + eq_rel * (||X||_F + ||Y||_F)``.
    """

    rank_rel: float = 1e-10
    eq_abs: float = 1e-9
    eq_rel: float = 1e-9

    def __post_init__(self) -> None:
        if self.rank_rel < 0 or self.eq_abs < 0 or self.eq_rel < 0:
            raise ValueError("tolerance fields must be nonnegative")

    def eq_bound(self, X: np.ndarray, Y: np.ndarray) -> float:
        return self.eq_abs + self.eq_rel * (fnorm(X) + fnorm(Y))

    def eq(self, X, Y) -> bool:
        X = as_matrix(X)
        Y = as_matrix(Y)
        if X.shape != Y.shape:
            return False
        return fnorm(X - Y) <= self.eq_bound(X, Y)

    def rank_cut(self, s: np.ndarray, shape: tuple[int, int]) -> float:
        smax = float(s[0]) if s.size else 0.0
        return self.rank_rel * smax * max(shape) if max(shape, default=0) else 0.0


DEFAULT_TOL = Tolerance()


def as_matrix(M) -> np.ndarray:
    """Coerce to a finite 2-D complex128 array."""
    A = np.asarray(M, dtype=np.complex128)
    if A.ndim != 2:
        raise ShapeError(f"expected a 2-D matrix, got ndim={A.ndim}")
    if A.size and not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    return A


def fnorm(M) -> float:
    M = np.asarray(M)
    return float(np.linalg.norm(M)) if M.size else 0.0


def is_hermitian(M, tol: Tolerance = DEFAULT_TOL) -> bool:
    M = as_matrix(M)
    if M.shape[0] != M.shape[1]:
        return False
    return tol.eq(M, M.conj().T)


def _svd(M: np.ndarray):
    # full_matrices so kernel/cokernel bases come out of the same factorization
    return np.linalg.svd(M, full_matrices=True)


def _rank_from_s(s: np.ndarray, shape, tol: Tolerance) -> int:
    return int(np.count_nonzero(s > tol.rank_cut(s, shape)))


def spectral_norm(M) -> float:
    M = as_matrix(M)
    if min(M.shape) == 0:
        return 0.0
    return float(np.linalg.svd(M, compute_uv=False)[0])


def matrix_rank(M, tol: Tolerance = DEFAULT_TOL, scale: float = 0.0) -> int:
    """Numerical rank with the shared threshold.

    `scale` raises the reference singular value: a difference like B - A
    that is zero up to rounding must be ranked against the scale of A and
    B, not against its own noise floor.
    """
    M = as_matrix(M)
    if min(M.shape) == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    smax = max(float(s[0]) if s.size else 0.0, scale)
    cut = tol.rank_rel * smax * max(M.shape)
    return int(np.count_nonzero(s > cut))


def pinv(M, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose inverse with the shared rank threshold."""
    M = as_matrix(M)
    m, n = M.shape
    if min(m, n) == 0:
        return np.zeros((n, m), dtype=np.complex128)
    U, s, Vh = np.linalg.svd(M, full_matrices=False)
    r = _rank_from_s(s, M.shape, tol)
    if r == 0:
        return np.zeros((n, m), dtype=np.complex128)
    return (Vh[:r].conj().T / s[:r]) @ U[:, :r].conj().T


def _bases(M: np.ndarray, tol: Tolerance):
    """(U_r, U_0, V_r, V_0, s_r) from a full SVD of M."""
    m, n = M.shape
    if min(m, n) == 0:
        return (
            np.zeros((m, 0), np.complex128),
            np.eye(m, dtype=np.complex128),
            np.zeros((n, 0), np.complex128),
            np.eye(n, dtype=np.complex128),
            np.zeros(0),
        )
    U, s, Vh = _svd(M)
    r = _rank_from_s(s, M.shape, tol)
    V = Vh.conj().T
    return U[:, :r], U[:, r:], V[:, :r], V[:, r:], s[:r]


def range_basis(M, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal columns spanning R(M)."""
    return _bases(as_matrix(M), tol)[0]


def cokernel_basis(M, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal columns spanning N(M*) = R(M)-perp."""
    return _bases(as_matrix(M), tol)[1]


def row_basis(M, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal columns spanning R(M*)."""
    return _bases(as_matrix(M), tol)[2]


def kernel_basis(M, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal columns spanning N(M)."""
    return _bases(as_matrix(M), tol)[3]


def complement_basis(V, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the orthogonal complement of span(V).

    V must have orthonormal columns (n x k); the result is n x (n-k).
    """
    V = as_matrix(V)
    return kernel_basis(V.conj().T, tol)


def proj_range(M, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthogonal projection onto R(M)."""
    U = range_basis(M, tol)
    return U @ U.conj().T


def oblique_projection(onto, along, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Projection with range span(onto) and nullspace span(along).

    The two column families must form a direct sum of the whole space.
    """
    onto = as_matrix(onto)
    along = as_matrix(along)
    n = onto.shape[0]
    if along.shape[0] != n or onto.shape[1] + along.shape[1] != n:
        raise ShapeError("onto and along must split the space")
    P = np.hstack([onto, along])
    if n and matrix_rank(P, tol) < n:
        raise ValueError("onto and along do not form a direct sum")
    D = np.zeros((n, n), dtype=np.complex128)
    r = onto.shape[1]
    D[:r, :r] = np.eye(r)
    return P @ D @ np.linalg.inv(P) if n else np.zeros((0, 0), np.complex128)


def range_included(A, B, tol: Tolerance = DEFAULT_TOL) -> bool:
    """R(A) subset of R(B), decided as P_B A == A."""
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape[0] != B.shape[0]:
        raise ShapeError(f"row counts differ: {A.shape[0]} vs {B.shape[0]}")
    return tol.eq(proj_range(B, tol) @ A, A)


def range_inclusion_residual(A, B, tol: Tolerance = DEFAULT_TOL) -> float:
    """||P_B A - A||_F, the defect of the inclusion R(A) subset R(B)."""
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape[0] != B.shape[0]:
        raise ShapeError(f"row counts differ: {A.shape[0]} vs {B.shape[0]}")
    return fnorm(proj_range(B, tol) @ A - A)


def psd_sqrt(M, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Square root of a Hermitian PSD matrix via eigh.

    Eigenvalues in [-bound, 0) are clamped to 0; anything below
    -(eq_abs + eq_rel*||M||_F) raises NotPSDError.
    """
    M = as_matrix(M)
    if M.shape[0] != M.shape[1]:
        raise ShapeError("psd_sqrt needs a square matrix")
    if M.shape[0] == 0:
        return M.copy()
    if fnorm(M - M.conj().T) > tol.eq_bound(M, M.conj().T):
        raise NotPSDError("matrix is not Hermitian")
    w, V = np.linalg.eigh((M + M.conj().T) / 2.0)
    bound = tol.eq_abs + tol.eq_rel * fnorm(M)
    if w.min() < -bound:
        raise NotPSDError(f"negative eigenvalue {w.min():.3e} below -{bound:.3e}")
    w = np.clip(w, 0.0, None)
    return (V * np.sqrt(w)) @ V.conj().T


@dataclass(frozen=True)
class PolarParts:
    """T = modulus_star @ isometry with N(isometry) == N(T)."""

    modulus_star: np.ndarray
    isometry: np.ndarray


def polar(T, tol: Tolerance = DEFAULT_TOL) -> PolarParts:
    """Polar decomposition T = |T*| V_T from one SVD.

    |T*| = U diag(s) U* keeps all singular values; V_T = U_r V_r* uses only
    the above-threshold ones, so V_T is an exact partial isometry and the
    product reproduces T up to the rank cut.
    """
    T = as_matrix(T)
    m, n = T.shape
    if min(m, n) == 0:
        return PolarParts(np.zeros((m, m), np.complex128), np.zeros((m, n), np.complex128))
    U, s, Vh = np.linalg.svd(T, full_matrices=False)
    r = _rank_from_s(s, T.shape, tol)
    modulus = (U * s) @ U.conj().T
    iso = U[:, :r] @ Vh[:r]
    return PolarParts(modulus, iso)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks of B relative to A's canonical subspace splittings.

    Domain H = R(A*) + N(A), codomain K = R(A) + N(A*); in these bases
    A = [[a, 0], [0, 0]] with a = diag of A's nonzero singular values, and
    B = [[b11, b12], [b21, b22]].
    """

    basis_rowA: np.ndarray
    basis_kerA: np.ndarray
    basis_colA: np.ndarray
    basis_cokerA: np.ndarray
    a: np.ndarray
    b11: np.ndarray
    b12: np.ndarray
    b21: np.ndarray
    b22: np.ndarray

    @property
    def rank(self) -> int:
        return self.a.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.basis_colA.shape[0], self.basis_rowA.shape[0])

    def assemble(self, c11, c12, c21, c22) -> np.ndarray:
        """Map block coordinates back to the ambient spaces."""
        col, cok = self.basis_colA, self.basis_cokerA
        row, ker = self.basis_rowA, self.basis_kerA
        out = np.zeros(self.shape, dtype=np.complex128)
        for basisL, block, basisR in (
            (col, c11, row),
            (col, c12, ker),
            (cok, c21, row),
            (cok, c22, ker),
        ):
            if block is None:
                continue
            block = as_matrix(block)
            if block.size:
                out += basisL @ block @ basisR.conj().T
        return out

    def embed_core(self, c11) -> np.ndarray:
        """Ambient matrix supported on R(A*) -> R(A) with core c11."""
        return self.assemble(c11, None, None, None)

    def a_matrix(self) -> np.ndarray:
        return self.embed_core(self.a)

    def b_matrix(self) -> np.ndarray:
        return self.assemble(self.b11, self.b12, self.b21, self.b22)


def block_decompose(A, B, tol: Tolerance = DEFAULT_TOL) -> BlockDecomposition:
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape:
        raise ShapeError(f"shape mismatch: {A.shape} vs {B.shape}")
    U_r, U_0, V_r, V_0, s_r = _bases(A, tol)
    a = np.diag(s_r).astype(np.complex128)
    return BlockDecomposition(
        basis_rowA=V_r,
        basis_kerA=V_0,
        basis_colA=U_r,
        basis_cokerA=U_0,
        a=a,
        b11=U_r.conj().T @ B @ V_r,
        b12=U_r.conj().T @ B @ V_0,
        b21=U_0.conj().T @ B @ V_r,
        b22=U_0.conj().T @ B @ V_0,
    )


@dataclass(frozen=True)
class MatrixClass:
    is_projection: bool
    is_orth_projection: bool
    is_partial_isometry: bool
    is_psd: bool


def classify(M, tol: Tolerance = DEFAULT_TOL) -> MatrixClass:
    """Membership flags for the projection / partial-isometry / PSD classes."""
    M = as_matrix(M)
    square = M.shape[0] == M.shape[1]
    is_proj = bool(square and tol.eq(M @ M, M))
    is_orth = bool(is_proj and tol.eq(M, M.conj().T))
    is_piso = bool(tol.eq(M @ M.conj().T @ M, M))
    is_psd = False
    if square and is_hermitian(M, tol):
        if M.shape[0] == 0:
            is_psd = True
        else:
            w = np.linalg.eigvalsh((M + M.conj().T) / 2.0)
            is_psd = bool(w.min() >= -(tol.eq_abs + tol.eq_rel * fnorm(M)))
    return MatrixClass(is_proj, is_orth, is_piso, is_psd)
