"""Structure results around products of projections and polar factors.

Covers membership in the product classes (orthogonal projections and
oblique projections), the plus-to-minus transfer of factorizations of a
product of projections, the order coincidences on partial isometries, the
polar-factor transfer propositions, and the inner-product reweighting that
turns a plus relation into a diamond relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .core import (
    DEFAULT_TOL,
    ShapeError,
    Tolerance,
    as_matrix,
    classify,
    fnorm,
    kernel_basis,
    matrix_rank,
    oblique_projection,
    pinv,
    polar,
    proj_range,
    range_basis,
    range_included,
)
from .generators import random_oblique_projection
from .orders import OrderKind, WitnessError, check

__all__ = [
    "QQFactorization",
    "PolarTransferReport",
    "ReweightReport",
    "NotPPError",
    "NotPartialIsometryError",
    "InvariantViolation",
    "pp_membership",
    "pp_diamond",
    "random_qq_factorization",
    "qq_plus_to_minus",
    "qq_minus_to_plus",
    "isometry_order_coincidence",
    "polar_order_transfer",
    "partial_converse_modulus",
    "reweight_to_diamond",
]


class NotPPError(ValueError):
    """Operand is not a product of two orthogonal projections."""


class NotPartialIsometryError(ValueError):
    """Operand is not a partial isometry."""


class InvariantViolation(RuntimeError):
    """A theorem-backed invariant failed numerically."""


@dataclass(frozen=True)
class QQFactorization:
    """T = E @ F with E, F idempotent, R(E) = R(T) and N(F) = N(T)."""

    E: np.ndarray
    F: np.ndarray


@dataclass(frozen=True)
class PolarTransferReport:
    kind: OrderKind
    hyp_modulus: bool
    hyp_isometry: bool
    conclusion: bool


@dataclass(frozen=True)
class ReweightReport:
    W_H: np.ndarray
    W_K: np.ndarray
    diamond_weighted: bool
    cond_W_H: float
    cond_W_K: float


def pp_membership(T, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when T equals P_T P_{T*}, the canonical product of orthogonal projections."""
    T = as_matrix(T)
    if T.shape[0] != T.shape[1]:
        raise ShapeError("T must be square")
    P_T = proj_range(T, tol)
    P_Tstar = proj_range(T.conj().T, tol)
    return bool(tol.eq(T, P_T @ P_Tstar))


def pp_diamond(T, T2, tol: Tolerance = DEFAULT_TOL) -> Tuple[bool, bool]:
    """(diamond, space) verdicts for two products of orthogonal projections.

    On this class the two relations coincide; a mismatch raises
    InvariantViolation.
    """
    if not pp_membership(T, tol):
        raise NotPPError("T is not a product of two orthogonal projections")
    if not pp_membership(T2, tol):
        raise NotPPError("T2 is not a product of two orthogonal projections")
    diamond = check(OrderKind.diamond, T, T2, tol).holds
    space = check(OrderKind.space, T, T2, tol).holds
    if diamond != space:
        raise InvariantViolation(
            f"diamond ({diamond}) and space ({space}) disagree on a PP pair"
        )
    return diamond, space


def random_qq_factorization(
    rng: np.random.Generator, n: int, r: int, tol: Tolerance = DEFAULT_TOL
) -> Tuple[np.ndarray, QQFactorization]:
    """Random T = E F with (E, F) a rank-r canonical factorization on C^n."""
    if not 0 <= r <= n:
        raise ValueError(f"rank {r} out of range for dimension {n}")
    while True:
        E = random_oblique_projection(rng, n, r)
        F = random_oblique_projection(rng, n, r)
        T = E @ F
        # rank preservation makes R(E) = R(T) and N(F) = N(T) automatic
        if matrix_rank(T, tol) == r:
            return T, QQFactorization(E=E, F=F)


def _check_projection(name: str, Q: np.ndarray, tol: Tolerance) -> None:
    if Q.shape[0] != Q.shape[1]:
        raise ShapeError(f"{name} must be square")
    if not tol.eq(Q @ Q, Q):
        raise WitnessError(f"{name} is not idempotent")


def _same_range(X: np.ndarray, Y: np.ndarray, tol: Tolerance) -> bool:
    return range_included(X, Y, tol) and range_included(Y, X, tol)


def qq_plus_to_minus(
    T, T2, Ep, Fp, Q_tilde, Q, tol: Tolerance = DEFAULT_TOL
) -> QQFactorization:
    """Push a plus relation T below T2 onto factors of T2 = Ep Fp.

    (Q_tilde, Q) must be a sandwich witness with R(Q_tilde) = R(T) and
    R(Q*) = R(T*); (Ep, Fp) must be a canonical factorization of T2.  The
    returned E = Q_tilde Ep and F = Fp Q form a canonical factorization of T
    with E minus-below Ep and F minus-below Fp.
    """
    T = as_matrix(T)
    T2 = as_matrix(T2)
    Ep = as_matrix(Ep)
    Fp = as_matrix(Fp)
    Q_tilde = as_matrix(Q_tilde)
    Q = as_matrix(Q)
    _check_projection("Ep", Ep, tol)
    _check_projection("Fp", Fp, tol)
    if not tol.eq(Ep @ Fp, T2):
        raise InvariantViolation("T2 != Ep @ Fp")
    if not _same_range(Ep, T2, tol):
        raise InvariantViolation("R(Ep) != R(T2)")
    ker_T2 = kernel_basis(T2, tol)
    if fnorm(Fp @ ker_T2) > tol.eq_abs + tol.eq_rel * fnorm(Fp) or matrix_rank(
        Fp, tol
    ) != matrix_rank(T2, tol):
        raise InvariantViolation("N(Fp) != N(T2)")
    _check_projection("Q_tilde", Q_tilde, tol)
    _check_projection("Q", Q, tol)
    if not tol.eq(Q_tilde @ T2 @ Q, T):
        raise WitnessError("Q_tilde @ T2 @ Q != T")
    if not _same_range(Q_tilde, T, tol):
        raise WitnessError("R(Q_tilde) != R(T)")
    if not _same_range(Q.conj().T, T.conj().T, tol):
        raise WitnessError("R(Q*) != R(T*)")
    E = Q_tilde @ Ep
    F = Fp @ Q
    for name, M in (("E", E), ("F", F)):
        if not tol.eq(M @ M, M):
            raise InvariantViolation(f"{name} is not idempotent")
    if not tol.eq(E @ F, T):
        raise InvariantViolation("E @ F != T")
    if not _same_range(E, T, tol):
        raise InvariantViolation("R(E) != R(T)")
    if not check(OrderKind.minus, E, Ep, tol).holds:
        raise InvariantViolation("E is not minus-below Ep")
    if not check(OrderKind.minus, F, Fp, tol).holds:
        raise InvariantViolation("F is not minus-below Fp")
    return QQFactorization(E=E, F=F)


def qq_minus_to_plus(
    T, T2, E, F, Ep, Fp, tol: Tolerance = DEFAULT_TOL
) -> Tuple[np.ndarray, np.ndarray]:
    """Assemble a sandwich witness for T below T2 from minus-ordered factors.

    Given T = E F, T2 = Ep Fp with E minus-below Ep and F minus-below Fp,
    returns projections (Q_tilde, Q) with T == Q_tilde @ T2 @ Q.
    """
    T = as_matrix(T)
    T2 = as_matrix(T2)
    E = as_matrix(E)
    F = as_matrix(F)
    Ep = as_matrix(Ep)
    Fp = as_matrix(Fp)
    if not tol.eq(E @ F, T):
        raise InvariantViolation("E @ F != T")
    if not tol.eq(Ep @ Fp, T2):
        raise InvariantViolation("Ep @ Fp != T2")
    if not check(OrderKind.minus, E, Ep, tol).holds:
        raise InvariantViolation("E is not minus-below Ep")
    if not check(OrderKind.minus, F, Fp, tol).holds:
        raise InvariantViolation("F is not minus-below Fp")
    Q_tilde = E @ pinv(Ep, tol)
    Q = pinv(Fp, tol) @ F
    _check_projection("Q_tilde", Q_tilde, tol)
    _check_projection("Q", Q, tol)
    if not tol.eq(Q_tilde @ T2 @ Q, T):
        raise InvariantViolation("assembled witness does not reproduce T")
    return Q_tilde, Q


def isometry_order_coincidence(
    F, G, tol: Tolerance = DEFAULT_TOL
) -> Tuple[bool, bool, bool, bool]:
    """(star, minus, diamond, plus) verdicts for two partial isometries.

    Star, minus and diamond coincide on partial isometries; a mismatch
    raises InvariantViolation.  Plus is genuinely weaker.
    """
    F = as_matrix(F)
    G = as_matrix(G)
    if not classify(F, tol).is_partial_isometry:
        raise NotPartialIsometryError("F is not a partial isometry")
    if not classify(G, tol).is_partial_isometry:
        raise NotPartialIsometryError("G is not a partial isometry")
    star = check(OrderKind.star, F, G, tol).holds
    minus = check(OrderKind.minus, F, G, tol).holds
    diamond = check(OrderKind.diamond, F, G, tol).holds
    plus = check(OrderKind.plus, F, G, tol).holds
    if not (star == minus == diamond):
        raise InvariantViolation(
            f"star ({star}), minus ({minus}), diamond ({diamond}) "
            "disagree on a partial-isometry pair"
        )
    return star, minus, diamond, plus


def polar_order_transfer(A, B, kind, tol: Tolerance = DEFAULT_TOL) -> PolarTransferReport:
    """Test a polar-factor transfer implication on (A, B).

    kind=diamond: modulus diamond-below and isometry diamond-below imply
    A diamond-below B.  kind=plus: modulus star-below and isometry
    plus-below imply A plus-below B.  The implication is asserted; its
    converse is not (and fails in general).
    """
    kind = OrderKind(kind)
    if kind not in (OrderKind.diamond, OrderKind.plus):
        raise ValueError("kind must be diamond or plus")
    A = as_matrix(A)
    B = as_matrix(B)
    pa = polar(A, tol)
    pb = polar(B, tol)
    modulus_kind = OrderKind.diamond if kind is OrderKind.diamond else OrderKind.star
    hyp_modulus = check(modulus_kind, pa.modulus_star, pb.modulus_star, tol).holds
    hyp_isometry = check(kind, pa.isometry, pb.isometry, tol).holds
    conclusion = check(kind, A, B, tol).holds
    if hyp_modulus and hyp_isometry and not conclusion:
        raise InvariantViolation(f"polar transfer implication failed for {kind.value}")
    return PolarTransferReport(
        kind=kind,
        hyp_modulus=hyp_modulus,
        hyp_isometry=hyp_isometry,
        conclusion=conclusion,
    )


def partial_converse_modulus(A, B, tol: Tolerance = DEFAULT_TOL) -> Optional[bool]:
    """Modulus diamond relation when A diamond-below B and the isometries compare.

    Returns None when the hypotheses fail (vacuous case); otherwise returns
    the verdict diamond(|A*|, |B*|), asserting it is true.
    """
    A = as_matrix(A)
    B = as_matrix(B)
    if not check(OrderKind.diamond, A, B, tol).holds:
        return None
    pa = polar(A, tol)
    pb = polar(B, tol)
    if not check(OrderKind.diamond, pa.isometry, pb.isometry, tol).holds:
        return None
    verdict = check(OrderKind.diamond, pa.modulus_star, pb.modulus_star, tol).holds
    if not verdict:
        raise InvariantViolation("modulus diamond relation failed under both hypotheses")
    return verdict


def reweight_to_diamond(A, B, Q_tilde, Q, tol: Tolerance = DEFAULT_TOL) -> ReweightReport:
    """Weighted inner products under which a plus pair becomes a diamond pair.

    For a sandwich witness A == Q_tilde @ B @ Q, the weights
    W_H = Q*Q + (I-Q*)(I-Q) on the domain and the analog W_K for Q_tilde
    on the codomain are Hermitian positive definite, Q and Q_tilde become
    orthogonal in the weighted geometry, and with the weighted adjoint
    X^# = W_H^(-1) X* W_K the diamond conditions hold for (A, B).
    """
    A = as_matrix(A)
    B = as_matrix(B)
    Q_tilde = as_matrix(Q_tilde)
    Q = as_matrix(Q)
    if A.shape != B.shape:
        raise ShapeError(f"shape mismatch: {A.shape} vs {B.shape}")
    m, n = A.shape
    if Q.shape != (n, n) or Q_tilde.shape != (m, m):
        raise ShapeError("witness projections do not match the pair's spaces")
    _check_projection("Q", Q, tol)
    _check_projection("Q_tilde", Q_tilde, tol)
    if not tol.eq(Q_tilde @ B @ Q, A):
        raise WitnessError("Q_tilde @ B @ Q != A")
    I_n = np.eye(n)
    I_m = np.eye(m)
    W_H = Q.conj().T @ Q + (I_n - Q.conj().T) @ (I_n - Q)
    W_K = Q_tilde.conj().T @ Q_tilde + (I_m - Q_tilde.conj().T) @ (I_m - Q_tilde)
    W_H = (W_H + W_H.conj().T) / 2.0
    W_K = (W_K + W_K.conj().T) / 2.0
    for name, W in (("W_H", W_H), ("W_K", W_K)):
        if W.shape[0] and np.linalg.eigvalsh(W).min() <= 0:
            raise InvariantViolation(f"{name} is not positive definite")
    def wadj(X):
        return np.linalg.solve(W_H, X.conj().T @ W_K)

    core_eq = tol.eq(A @ wadj(A) @ A, A @ wadj(B) @ A)
    space_ok = range_included(A, B, tol) and range_included(
        A.conj().T, B.conj().T, tol
    )
    return ReweightReport(
        W_H=W_H,
        W_K=W_K,
        diamond_weighted=bool(core_eq and space_ok),
        cond_W_H=float(np.linalg.cond(W_H)) if n else 1.0,
        cond_W_K=float(np.linalg.cond(W_K)) if m else 1.0,
    )
