"""Complementability and the bilateral shorted operator.

Given A : H -> K and a pair of subspaces S of H, T of K, split
H = S + S_perp and K = T + T_perp so that A = [[b, c], [d, e]]
(b : S -> T, c : S_perp -> T, d : S -> T_perp, e : S_perp -> T_perp).

A is weakly complementable w.r.t. (S, T) when R(c*) lies in R(|e|^(1/2))
and R(d) lies in R(|e*|^(1/2)); complementable when the stronger inclusions
R(c*) in R(e*) and R(d) in R(e) hold. Under weak complementability the
shorted operator is b - g*f with f = (|e*|^(1/2) u)† d, g = (|e|^(1/2))† c*
for the polar factorization e = |e*| u, embedded back as a map vanishing on
S_perp and into T.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    DEFAULT_TOL,
    ShapeError,
    Tolerance,
    as_matrix,
    block_decompose,
    complement_basis,
    fnorm,
    pinv,
    proj_range,
    range_included,
)

__all__ = [
    "SubspacePair",
    "ShortedResult",
    "NotWeaklyComplementableError",
    "NotComplementableError",
    "BasisNotOrthonormalError",
    "complementability",
    "shorted_operator",
    "schur_complement_corner",
    "diamond_via_shorted",
]


class BasisNotOrthonormalError(ValueError):
    """A SubspacePair basis does not have orthonormal columns."""


class NotWeaklyComplementableError(ValueError):
    """The weak complementability range conditions fail."""


class NotComplementableError(ValueError):
    """The complementability range conditions fail."""


@dataclass(frozen=True)
class SubspacePair:
    """Orthonormal bases of S (domain side) and T (codomain side)."""

    s_basis: np.ndarray
    t_basis: np.ndarray


@dataclass(frozen=True)
class ShortedResult:
    complementable: bool
    weakly_complementable: bool
    shorted: Optional[np.ndarray]
    f: np.ndarray
    g: np.ndarray


def _check_orthonormal(V: np.ndarray, tol: Tolerance, name: str) -> None:
    gram = V.conj().T @ V
    if fnorm(gram - np.eye(V.shape[1])) > tol.eq_bound(gram, np.eye(V.shape[1])):
        raise BasisNotOrthonormalError(f"{name} columns are not orthonormal")


def _split_blocks(A: np.ndarray, pair: SubspacePair, tol: Tolerance):
    S = as_matrix(pair.s_basis)
    T = as_matrix(pair.t_basis)
    m, n = A.shape
    if S.shape[0] != n:
        raise ShapeError(f"S basis lives in dim {S.shape[0]}, domain is {n}")
    if T.shape[0] != m:
        raise ShapeError(f"T basis lives in dim {T.shape[0]}, codomain is {m}")
    _check_orthonormal(S, tol, "S basis")
    _check_orthonormal(T, tol, "T basis")
    Sp = complement_basis(S, tol)
    Tp = complement_basis(T, tol)
    b = T.conj().T @ A @ S
    c = T.conj().T @ A @ Sp
    d = Tp.conj().T @ A @ S
    e = Tp.conj().T @ A @ Sp
    return S, Sp, T, Tp, b, c, d, e


def _half_factors(e: np.ndarray, tol: Tolerance):
    """(|e*|^(1/2) u, |e|^(1/2)) from one SVD of e.

    With e = U diag(s) V*: |e*|^(1/2) u = U_r diag(sqrt s_r) V_r* and
    |e|^(1/2) = V diag(sqrt s) V*.
    """
    if min(e.shape) == 0:
        half_left = np.zeros(e.shape, np.complex128)
        half_mod = np.zeros((e.shape[1], e.shape[1]), np.complex128)
        return half_left, half_mod
    U, s, Vh = np.linalg.svd(e, full_matrices=False)
    cut = tol.rank_cut(s, e.shape)
    r = int(np.count_nonzero(s > cut))
    root = np.sqrt(s)
    half_left = (U[:, :r] * root[:r]) @ Vh[:r]
    half_mod = (Vh.conj().T * root) @ Vh
    return half_left, half_mod


def complementability(A, pair: SubspacePair, tol: Tolerance = DEFAULT_TOL) -> tuple[bool, bool]:
    """(complementable, weakly_complementable) flags for A w.r.t. (S, T)."""
    A = as_matrix(A)
    _, _, _, _, _, c, d, e = _split_blocks(A, pair, tol)
    comp = range_included(c.conj().T, e.conj().T, tol) and range_included(d, e, tol)
    half_left, half_mod = _half_factors(e, tol)
    weak = range_included(c.conj().T, half_mod, tol) and range_included(d, half_left, tol)
    # the strict inclusions imply the weak ones; numerically enforce the hierarchy
    weak = weak or comp
    return comp, weak


def shorted_operator(A, pair: SubspacePair, tol: Tolerance = DEFAULT_TOL) -> ShortedResult:
    """Bilateral shorted operator of A w.r.t. (S, T).

    Raises NotWeaklyComplementableError when the defining range conditions
    fail; otherwise returns the shorted matrix in ambient coordinates along
    with the solving factors f, g (block coordinates).
    """
    A = as_matrix(A)
    S, Sp, T, Tp, b, c, d, e = _split_blocks(A, pair, tol)
    comp = range_included(c.conj().T, e.conj().T, tol) and range_included(d, e, tol)
    half_left, half_mod = _half_factors(e, tol)
    weak = comp or (
        range_included(c.conj().T, half_mod, tol) and range_included(d, half_left, tol)
    )
    if not weak:
        raise NotWeaklyComplementableError(
            "off-diagonal blocks are not absorbed by the corner block"
        )
    f = pinv(half_left, tol) @ d
    g = pinv(half_mod, tol) @ c.conj().T
    core = b - g.conj().T @ f
    shorted = T @ core @ S.conj().T
    return ShortedResult(
        complementable=comp,
        weakly_complementable=True,
        shorted=shorted,
        f=f,
        g=g,
    )


def schur_complement_corner(A, pair: SubspacePair, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Classical b - c e† d in ambient coordinates (complementable path).

    Used as the cross-check oracle for shorted_operator; only meaningful
    when the complementability inclusions hold.
    """
    A = as_matrix(A)
    S, _, T, _, b, c, d, e = _split_blocks(A, pair, tol)
    core = b - c @ pinv(e, tol) @ d
    return T @ core @ S.conj().T


def diamond_via_shorted(A, B, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Diamond test through the shorted operator of B to (N(A), N(A*)).

    With S := B shorted to (N(A), N(A*)), the relation holds iff the core
    block of B on R(A*) -> R(A) equals a, R(b21) lies in R(S) and R(b12*)
    lies in R(S*). Raises NotComplementableError when B is not
    complementable w.r.t. that subspace pair.
    """
    d = block_decompose(A, B, tol)
    pair = SubspacePair(s_basis=d.basis_kerA, t_basis=d.basis_cokerA)
    comp, _ = complementability(B, pair, tol)
    if not comp:
        raise NotComplementableError(
            "B is not complementable w.r.t. (N(A), N(A*))"
        )
    res = shorted_operator(B, pair, tol)
    S_amb = res.shorted
    if not tol.eq(d.b11, d.a):
        return False
    b21_amb = d.assemble(None, None, d.b21, None)
    b12_amb = d.assemble(None, d.b12, None, None)
    return range_included(b21_amb, S_amb, tol) and range_included(
        b12_amb.conj().T, S_amb.conj().T, tol
    )
