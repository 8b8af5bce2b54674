"""Constructors for matrices that sit above a given A in each order.

Each generator takes explicit block parameters relative to A's canonical
splitting (domain = R(A*) + N(A), codomain = R(A) + N(A*)) and assembles an
ambient B whose order relation to A holds by construction.  `generate` is a
seeded convenience wrapper that draws the parameters at random.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    DEFAULT_TOL,
    BlockDecomposition,
    NotPSDError,
    ShapeError,
    Tolerance,
    as_matrix,
    block_decompose,
    fnorm,
    is_hermitian,
    matrix_rank,
    pinv,
    range_included,
)
from .means import geometric_mean
from .orders import OrderKind

__all__ = [
    "GenSpec",
    "DiamondPsdParams",
    "gen_left_star",
    "gen_star",
    "gen_minus",
    "gen_diamond_psd",
    "gen_diamond_psd_ambient",
    "gen_plus",
    "generate",
    "extract_minus_params",
    "extract_diamond_psd_params",
    "crandn",
    "rand_rank",
    "random_orth_projection",
    "random_oblique_projection",
    "random_partial_isometry",
]


def crandn(rng: np.random.Generator, m: int, n: int) -> np.ndarray:
    """Complex Gaussian matrix, independent N(0,1) real and imaginary parts."""
    return rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))


def rand_rank(rng: np.random.Generator, m: int, n: int, r: int) -> np.ndarray:
    """Random m x n matrix of rank exactly r."""
    if not 0 <= r <= min(m, n):
        raise ValueError(f"rank {r} out of range for shape ({m}, {n})")
    if r == 0:
        return np.zeros((m, n), dtype=np.complex128)
    return crandn(rng, m, r) @ crandn(rng, r, n)


def random_orth_projection(rng: np.random.Generator, n: int, r: int) -> np.ndarray:
    """Orthogonal projection of rank r on C^n."""
    if not 0 <= r <= n:
        raise ValueError(f"rank {r} out of range for dimension {n}")
    if r == 0:
        return np.zeros((n, n), dtype=np.complex128)
    Q, _ = np.linalg.qr(crandn(rng, n, r))
    return Q @ Q.conj().T


def random_oblique_projection(rng: np.random.Generator, n: int, r: int) -> np.ndarray:
    """Idempotent of rank r on C^n, generically non-Hermitian."""
    if not 0 <= r <= n:
        raise ValueError(f"rank {r} out of range for dimension {n}")
    if r == 0:
        return np.zeros((n, n), dtype=np.complex128)
    # Q = X (Y X)^(-1) Y projects onto R(X) along N(Y).
    while True:
        X = crandn(rng, n, r)
        Y = crandn(rng, r, n)
        YX = Y @ X
        if matrix_rank(YX) == r:
            return X @ np.linalg.inv(YX) @ Y


def random_partial_isometry(rng: np.random.Generator, m: int, n: int, r: int) -> np.ndarray:
    """Partial isometry m x n of rank r (product of two orthonormal frames)."""
    if not 0 <= r <= min(m, n):
        raise ValueError(f"rank {r} out of range for shape ({m}, {n})")
    if r == 0:
        return np.zeros((m, n), dtype=np.complex128)
    U, _ = np.linalg.qr(crandn(rng, m, r))
    V, _ = np.linalg.qr(crandn(rng, n, r))
    return U @ V.conj().T


def _decompose(A, tol: Tolerance) -> BlockDecomposition:
    A = as_matrix(A)
    return block_decompose(A, A, tol)


def _expect_shape(name: str, M: np.ndarray, shape: tuple[int, int]) -> np.ndarray:
    M = as_matrix(M)
    if M.shape != shape:
        raise ShapeError(f"{name} must have shape {shape}, got {M.shape}")
    return M


def gen_left_star(A, x, b22, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """B = [[a, 0], [b22 x, b22]] in A's canonical bases.

    x maps R(A*) coordinates to N(A) coordinates, b22 maps N(A) to N(A*);
    the returned B satisfies A left-star B.
    """
    d = _decompose(A, tol)
    r = d.rank
    m, n = d.shape
    x = _expect_shape("x", x, (n - r, r))
    b22 = _expect_shape("b22", b22, (m - r, n - r))
    return d.assemble(d.a, None, b22 @ x, b22)


def gen_star(A, b22, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """B = [[a, 0], [0, b22]]: the star order above A."""
    d = _decompose(A, tol)
    r = d.rank
    m, n = d.shape
    b22 = _expect_shape("b22", b22, (m - r, n - r))
    return d.assemble(d.a, None, None, b22)


def gen_minus(A, x, y, b22, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """B = [[a + y b22 x, y b22], [b22 x, b22]]: the minus order above A."""
    d = _decompose(A, tol)
    r = d.rank
    m, n = d.shape
    x = _expect_shape("x", x, (n - r, r))
    y = _expect_shape("y", y, (r, m - r))
    b22 = _expect_shape("b22", b22, (m - r, n - r))
    return d.assemble(d.a + y @ b22 @ x, y @ b22, b22 @ x, b22)


def gen_diamond_psd(a, y, b22, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """PSD B = [[a, G^(-1) y* b22], [b22 y G^(-1)*, b22]] above A = diag(a, 0).

    a is PSD invertible on the range block, y maps range coordinates to null
    coordinates, b22 is PSD on the null block, and
    G = 1/2 + [(y* b22 y + a/4) # a] a^(-1).
    """
    a = as_matrix(a)
    b22 = as_matrix(b22)
    r = a.shape[0]
    k = b22.shape[0]
    if a.shape != (r, r) or b22.shape != (k, k):
        raise ShapeError("a and b22 must be square")
    y = _expect_shape("y", y, (k, r))
    if not is_hermitian(a, tol):
        raise NotPSDError("a must be Hermitian PSD")
    if not is_hermitian(b22, tol):
        raise NotPSDError("b22 must be Hermitian PSD")
    if r:
        wa = np.linalg.eigvalsh((a + a.conj().T) / 2.0)
        if wa.min() <= tol.rank_rel * max(wa.max(), 0.0) * r:
            raise ValueError("a must be invertible")
        if wa.min() < -(tol.eq_abs + tol.eq_rel * fnorm(a)):
            raise NotPSDError("a must be PSD")
    if k:
        wb = np.linalg.eigvalsh((b22 + b22.conj().T) / 2.0)
        if wb.min() < -(tol.eq_abs + tol.eq_rel * fnorm(b22)):
            raise NotPSDError("b22 must be PSD")
    if r == 0:
        return b22.astype(np.complex128).copy()
    D = y.conj().T @ b22 @ y + a / 4.0
    G = 0.5 * np.eye(r) + geometric_mean((D + D.conj().T) / 2.0, a, tol) @ np.linalg.inv(a)
    b12 = np.linalg.solve(G, y.conj().T @ b22)
    B = np.block([[a, b12], [b12.conj().T, b22]])
    return (B + B.conj().T) / 2.0


def gen_diamond_psd_ambient(A, y, b22, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """gen_diamond_psd with parameters given in the eigenbasis of a PSD A.

    y has shape (null dim, rank) and b22 (null dim, null dim); the result is
    rotated back so that it sits diamond-above A itself.
    """
    A = as_matrix(A)
    if A.shape[0] != A.shape[1] or not is_hermitian(A, tol):
        raise NotPSDError("A must be Hermitian PSD")
    V_r, V_0, w_r = _psd_eigenbasis(A, tol)
    Bc = gen_diamond_psd(np.diag(w_r).astype(np.complex128), y, b22, tol)
    U = np.hstack([V_r, V_0])
    B = U @ Bc @ U.conj().T
    return (B + B.conj().T) / 2.0


def gen_plus(A, x, y, w, z, b22, tol: Tolerance = DEFAULT_TOL) -> Optional[np.ndarray]:
    """Assemble the plus-order block form above A and verify its constraints.

    B = [[a + y b22 x + y w + z x, y b22 + z], [b22 x + w, b22]].  Returns B
    when R([[y w, 0], [w, 0]]) lies in R(B), the adjoint range of
    [[z x, z], [0, 0]] lies in R(B*), and the sandwich Q~ B Q == A holds for
    the projections built from x and y; otherwise None.
    """
    d = _decompose(A, tol)
    r = d.rank
    m, n = d.shape
    x = _expect_shape("x", x, (n - r, r))
    y = _expect_shape("y", y, (r, m - r))
    w = _expect_shape("w", w, (m - r, r))
    z = _expect_shape("z", z, (r, n - r))
    b22 = _expect_shape("b22", b22, (m - r, n - r))
    B = d.assemble(
        d.a + y @ b22 @ x + y @ w + z @ x,
        y @ b22 + z,
        b22 @ x + w,
        b22,
    )
    M1 = d.assemble(y @ w, None, w, None)
    M2 = d.assemble(z @ x, z, None, None)
    if not range_included(M1, B, tol):
        return None
    if not range_included(M2.conj().T, B.conj().T, tol):
        return None
    col, cok = d.basis_colA, d.basis_cokerA
    row, ker = d.basis_rowA, d.basis_kerA
    q_tilde = col @ col.conj().T - col @ y @ cok.conj().T
    q = row @ row.conj().T - ker @ x @ row.conj().T
    if not tol.eq(q_tilde @ B @ q, d.a_matrix()):
        return None
    return B


@dataclass(frozen=True)
class GenSpec:
    """Seeded random draw of generator parameters.

    b22_rank of None means the largest admissible rank; scale multiplies the
    Gaussian parameter entries.
    """

    kind: OrderKind
    seed: int = 0
    b22_rank: Optional[int] = None
    scale: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", OrderKind(self.kind))
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if not self.scale > 0:
            raise ValueError("scale must be positive")


def _b22_rank(spec: GenSpec, k2: int, k1: int) -> int:
    cap = min(k2, k1)
    if spec.b22_rank is None:
        return cap
    if not 0 <= spec.b22_rank <= cap:
        raise ValueError(f"b22_rank {spec.b22_rank} exceeds null dimensions ({k2}, {k1})")
    return spec.b22_rank


def _psd_eigenbasis(A: np.ndarray, tol: Tolerance):
    """Split C^n into range and null eigenspaces of a PSD matrix."""
    n = A.shape[0]
    w, V = np.linalg.eigh((A + A.conj().T) / 2.0)
    if n and w.min() < -(tol.eq_abs + tol.eq_rel * fnorm(A)):
        raise NotPSDError("matrix must be PSD")
    cut = tol.rank_rel * (w.max() if n else 0.0) * n
    keep = w > max(cut, 0.0)
    return V[:, keep], V[:, ~keep], np.clip(w[keep], 0.0, None)


def generate(A, spec: GenSpec, tol: Tolerance = DEFAULT_TOL, max_tries: int = 64) -> np.ndarray:
    """Draw a random B above A in the order spec.kind."""
    A = as_matrix(A)
    rng = np.random.default_rng(spec.seed)
    sc = spec.scale
    m, n = A.shape
    kind = spec.kind
    if kind is OrderKind.loewner:
        if m != n or not is_hermitian(A, tol):
            raise ValueError("loewner generation needs a Hermitian A")
        k = spec.b22_rank if spec.b22_rank is not None else n
        if not 0 <= k <= n:
            raise ValueError(f"b22_rank {k} out of range for dimension {n}")
        L = sc * crandn(rng, n, k)
        return A + L @ L.conj().T
    if kind is OrderKind.diamond:
        if m != n:
            raise ValueError("diamond generation needs a square PSD A")
        V_r, V_0, w_r = _psd_eigenbasis(A, tol)
        r, k = V_r.shape[1], V_0.shape[1]
        rank = _b22_rank(spec, k, k)
        y = sc * crandn(rng, k, r)
        L = sc * crandn(rng, k, rank) if rank else np.zeros((k, 0), np.complex128)
        b22 = L @ L.conj().T
        Bc = gen_diamond_psd(np.diag(w_r).astype(np.complex128), y, b22, tol)
        U = np.hstack([V_r, V_0])
        B = U @ Bc @ U.conj().T
        return (B + B.conj().T) / 2.0
    d = _decompose(A, tol)
    r = d.rank
    k2, k1 = m - r, n - r
    if kind is OrderKind.space:
        rank = _b22_rank(spec, k2, k1)
        while True:
            c11 = sc * crandn(rng, r, r)
            if matrix_rank(c11, tol) == r:
                break
        return d.assemble(c11, None, None, sc * rand_rank(rng, k2, k1, rank))
    if kind is OrderKind.left_star:
        rank = _b22_rank(spec, k2, k1)
        return gen_left_star(A, sc * crandn(rng, k1, r), sc * rand_rank(rng, k2, k1, rank), tol)
    if kind is OrderKind.right_star:
        rank = _b22_rank(spec, k1, k2)
        B_adj = gen_left_star(
            A.conj().T, sc * crandn(rng, k2, r), sc * rand_rank(rng, k1, k2, rank), tol
        )
        return B_adj.conj().T
    if kind is OrderKind.star:
        rank = _b22_rank(spec, k2, k1)
        return gen_star(A, sc * rand_rank(rng, k2, k1, rank), tol)
    if kind is OrderKind.minus:
        rank = _b22_rank(spec, k2, k1)
        return gen_minus(
            A,
            sc * crandn(rng, k1, r),
            sc * crandn(rng, r, k2),
            sc * rand_rank(rng, k2, k1, rank),
            tol,
        )
    if kind is OrderKind.plus:
        rank = _b22_rank(spec, k2, k1)
        for _ in range(max_tries):
            B = gen_plus(
                A,
                sc * crandn(rng, k1, r),
                sc * crandn(rng, r, k2),
                sc * crandn(rng, k2, r),
                sc * crandn(rng, r, k1),
                sc * rand_rank(rng, k2, k1, rank),
                tol,
            )
            if B is not None:
                return B
        # w = z = 0 always satisfies the constraints (minus case).
        return gen_minus(
            A,
            sc * crandn(rng, k1, r),
            sc * crandn(rng, r, k2),
            sc * rand_rank(rng, k2, k1, rank),
            tol,
        )
    raise ValueError(f"no generator for kind {kind}")


def extract_minus_params(A, B, tol: Tolerance = DEFAULT_TOL):
    """Recover (x, y, b22) with B == gen_minus(A, x, y, b22) for a minus pair.

    x is the minimum-norm solution of b22 x == b21; the N(b22) ambiguity does
    not affect the reassembled B.
    """
    d = block_decompose(A, B, tol)
    b22p = pinv(d.b22, tol)
    return b22p @ d.b21, d.b12 @ b22p, d.b22


@dataclass(frozen=True)
class DiamondPsdParams:
    """Parameters (a, y, b22) of a PSD diamond pair in A's eigenbasis."""

    a: np.ndarray
    y: np.ndarray
    b22: np.ndarray
    basis_range: np.ndarray
    basis_null: np.ndarray

    def reassemble(self, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
        U = np.hstack([self.basis_range, self.basis_null])
        Bc = gen_diamond_psd(self.a, self.y, self.b22, tol)
        B = U @ Bc @ U.conj().T
        return (B + B.conj().T) / 2.0


def extract_diamond_psd_params(A, B, tol: Tolerance = DEFAULT_TOL) -> DiamondPsdParams:
    """Invert gen_diamond_psd: read (a, y, b22) off a PSD pair A diamond B.

    y solves S y == b12* for the corner Schur complement
    S = b22 - b21 a^(-1) b12 (minimum-norm solution).
    """
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape or A.shape[0] != A.shape[1]:
        raise ShapeError("A and B must be square with one shape")
    if not is_hermitian(A, tol) or not is_hermitian(B, tol):
        raise NotPSDError("A and B must be Hermitian PSD")
    V_r, V_0, w_r = _psd_eigenbasis(A, tol)
    a = np.diag(w_r).astype(np.complex128)
    b11 = V_r.conj().T @ B @ V_r
    if not tol.eq(b11, a):
        raise ValueError("range block of B does not match A")
    b12 = V_r.conj().T @ B @ V_0
    b21 = b12.conj().T
    b22 = V_0.conj().T @ B @ V_0
    r = a.shape[0]
    if r:
        S = b22 - b21 @ np.linalg.inv(a) @ b12
        S = (S + S.conj().T) / 2.0
        y = pinv(S, tol) @ b21
    else:
        y = np.zeros((b22.shape[0], 0), dtype=np.complex128)
    return DiamondPsdParams(a, y, b22, V_r, V_0)
