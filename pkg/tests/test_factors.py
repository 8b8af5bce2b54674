"""Projection products, partial isometries, polar transfer, reweighting."""

import numpy as np
import pytest

from oporder.core import (
    ShapeError,
    fnorm,
    matrix_rank,
    oblique_projection,
    range_basis,
    row_basis,
)
from oporder.factors import (
    InvariantViolation,
    NotPartialIsometryError,
    NotPPError,
    isometry_order_coincidence,
    partial_converse_modulus,
    polar_order_transfer,
    pp_diamond,
    pp_membership,
    qq_minus_to_plus,
    qq_plus_to_minus,
    random_qq_factorization,
    reweight_to_diamond,
)
from oporder.generators import crandn, random_orth_projection, random_partial_isometry
from oporder.orders import WitnessError, check, find_sandwich_witness

RT2 = np.sqrt(2.0)
F = np.array([[RT2 / 2, 0.0], [RT2 / 2, 0.0]])
G = np.array([[0.0, 1.0], [1.0, 0.0]])


def test_pp_membership():
    rng = np.random.default_rng(0)
    P = random_orth_projection(rng, 4, 2)
    assert pp_membership(P)
    assert pp_membership(np.eye(3))
    assert pp_membership(np.zeros((3, 3)))
    Q = random_orth_projection(rng, 4, 3)
    assert pp_membership(P @ Q)
    # a partial isometry with tilted range is not such a product
    assert not pp_membership(F)
    assert not pp_membership(G)
    with pytest.raises(ShapeError):
        pp_membership(np.zeros((2, 3)))


def test_pp_diamond_matches_space():
    rng = np.random.default_rng(1)
    P = random_orth_projection(rng, 4, 2)
    Q = random_orth_projection(rng, 4, 3)
    T = P @ Q
    assert pp_diamond(T, np.eye(4)) == (True, True)
    e11 = np.diag([1.0, 0.0])
    e22 = np.diag([0.0, 1.0])
    assert pp_diamond(e11, e22) == (False, False)
    with pytest.raises(NotPPError):
        pp_diamond(F, G)


def _qq_plus_instance(seed, n, r2, r):
    rng = np.random.default_rng(seed)
    T2, fac2 = random_qq_factorization(rng, n, r2)
    colT2 = range_basis(T2)
    rowT2 = row_basis(T2)
    for _ in range(50):
        qmix, _ = np.linalg.qr(colT2 @ crandn(rng, r2, r))
        qmixr, _ = np.linalg.qr(rowT2 @ crandn(rng, r2, r))
        try:
            Qt = oblique_projection(qmix, crandn(rng, n, n - r))
            Qd = oblique_projection(qmixr, crandn(rng, n, n - r)).conj().T
        except ValueError:
            continue
        T = Qt @ T2 @ Qd
        if matrix_rank(T) == r:
            return T, T2, fac2
    raise AssertionError("no instance at this seed")


def test_qq_factorization_round_trip():
    T, T2, fac2 = _qq_plus_instance(seed=11, n=5, r2=3, r=2)
    wit = find_sandwich_witness(T, T2)
    assert wit is not None
    fac = qq_plus_to_minus(T, T2, fac2.E, fac2.F, wit.q_tilde, wit.q)
    assert fnorm(fac.E @ fac.F - T) <= 1e-8 * (1 + fnorm(T))
    assert check("minus", fac.E, fac2.E).holds
    assert check("minus", fac.F, fac2.F).holds
    q_tilde, q = qq_minus_to_plus(T, T2, fac.E, fac.F, fac2.E, fac2.F)
    assert fnorm(q_tilde @ T2 @ q - T) <= 1e-8 * (1 + fnorm(T))


def test_qq_transfer_input_validation():
    T, T2, fac2 = _qq_plus_instance(seed=11, n=5, r2=3, r=2)
    wit = find_sandwich_witness(T, T2)
    with pytest.raises(InvariantViolation, match="Ep @ Fp"):
        qq_plus_to_minus(T, T2, fac2.E, np.eye(5), wit.q_tilde, wit.q)
    with pytest.raises(WitnessError):
        qq_plus_to_minus(T, T2, fac2.E, fac2.F, np.eye(5), np.eye(5))
    with pytest.raises(InvariantViolation, match="minus-below"):
        qq_minus_to_plus(T, T2, np.eye(5), T, fac2.E, fac2.F)


def test_isometry_coincidence_framed_pair():
    rng = np.random.default_rng(2)
    U, _ = np.linalg.qr(crandn(rng, 4, 4))
    W, _ = np.linalg.qr(crandn(rng, 4, 4))
    Fi = U[:, :2] @ W[:, :2].conj().T
    Gi = U[:, :3] @ W[:, :3].conj().T
    assert isometry_order_coincidence(Fi, Gi) == (True, True, True, True)


def test_isometry_coincidence_plus_only_pair():
    assert isometry_order_coincidence(F, G) == (False, False, False, True)


def test_isometry_coincidence_rejects_non_isometry():
    rng = np.random.default_rng(3)
    with pytest.raises(NotPartialIsometryError):
        isometry_order_coincidence(2.0 * np.eye(3), np.eye(3))
    W = random_partial_isometry(rng, 3, 3, 2)
    with pytest.raises(NotPartialIsometryError):
        isometry_order_coincidence(W, crandn(rng, 3, 3))


def test_polar_transfer_on_truncation_pair():
    rng = np.random.default_rng(4)
    B = crandn(rng, 5, 4)
    U, s, Vh = np.linalg.svd(B, full_matrices=False)
    A = (U[:, :2] * s[:2]) @ Vh[:2]
    for kind in ("diamond", "plus"):
        rep = polar_order_transfer(A, B, kind)
        assert rep.hyp_modulus and rep.hyp_isometry and rep.conclusion
    with pytest.raises(ValueError):
        polar_order_transfer(A, B, "star")


def test_polar_transfer_reports_failed_hypotheses():
    rng = np.random.default_rng(5)
    A = crandn(rng, 3, 3)
    B = crandn(rng, 3, 3)
    rep = polar_order_transfer(A, B, "diamond")
    assert not (rep.hyp_modulus and rep.hyp_isometry)
    assert not rep.conclusion


def test_partial_converse_modulus_cases():
    # hypotheses hold on a truncation pair: the modulus relation follows
    rng = np.random.default_rng(6)
    B = crandn(rng, 4, 4)
    U, s, Vh = np.linalg.svd(B)
    A = (U[:, :2] * s[:2]) @ Vh[:2]
    assert partial_converse_modulus(A, B) is True
    # vacuous when the pair is not diamond-related at all
    assert partial_converse_modulus(np.eye(2), 3.0 * np.eye(2)) is None
    # vacuous when the isometries do not compare, even though A diamond B
    A2 = np.array([[1.0, 0.0], [1.0, 0.0]])
    B2 = np.array([[0.0, 2.0], [2.0, 0.0]])
    assert check("diamond", A2, B2).holds
    assert partial_converse_modulus(A2, B2) is None


def test_reweight_turns_plus_pair_into_weighted_diamond():
    q_tilde = 0.5 * np.ones((2, 2))
    q = np.array([[1.0, 0.0], [RT2 - 1.0, 0.0]])
    assert fnorm(q_tilde @ G @ q - F) <= 1e-12
    rep = reweight_to_diamond(F, G, q_tilde, q)
    assert rep.diamond_weighted
    assert rep.cond_W_K == pytest.approx(1.0)  # q_tilde is orthogonal already
    assert rep.cond_W_H > 1.0 + 1e-6  # q is genuinely oblique
    assert np.linalg.eigvalsh(rep.W_H).min() > 0


def test_reweight_identity_weights_for_orthogonal_witnesses():
    A = np.diag([1.0, 0.0])
    B = np.diag([1.0, 2.0])
    w = check("star", A, B).witnesses
    rep = reweight_to_diamond(A, B, w.q_tilde, w.q)
    assert rep.diamond_weighted
    assert rep.cond_W_H == pytest.approx(1.0)
    assert rep.cond_W_K == pytest.approx(1.0)


def test_reweight_input_validation():
    q_tilde = 0.5 * np.ones((2, 2))
    q = np.array([[1.0, 0.0], [RT2 - 1.0, 0.0]])
    with pytest.raises(WitnessError, match="!= A"):
        reweight_to_diamond(G, G, q_tilde, q)
    with pytest.raises(WitnessError, match="idempotent"):
        reweight_to_diamond(F, G, 0.7 * np.ones((2, 2)), q)
    with pytest.raises(ShapeError):
        reweight_to_diamond(F, G, np.eye(3), q)
