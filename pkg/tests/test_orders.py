"""Order decisions: definitional checks, route suites, witnesses, the chain."""

import numpy as np
import pytest

from oporder.core import DEFAULT_TOL, ShapeError, fnorm, pinv
from oporder.generators import GenSpec, crandn, generate, rand_rank
from oporder.orders import (
    OrderKind,
    PlusSearchConfig,
    WitnessError,
    check,
    diamond_routes,
    equation_routes,
    find_sandwich_witness,
    implication_chain,
    minus_routes,
    star_routes,
    witness_to_inner_inverse,
)

RT2 = np.sqrt(2.0)
F = np.array([[RT2 / 2, 0.0], [RT2 / 2, 0.0]])
G = np.array([[0.0, 1.0], [1.0, 0.0]])


def test_kind_coercion_and_unknown_kind():
    A = np.eye(2)
    assert check("star", A, A).holds
    assert check(OrderKind.minus, A, A).holds
    with pytest.raises(ValueError):
        check("sharp", A, A)


def test_shape_mismatch_rejected():
    with pytest.raises(ShapeError):
        check("star", np.eye(2), np.eye(3))


def test_reflexivity_all_kinds():
    rng = np.random.default_rng(0)
    A = rand_rank(rng, 4, 3, 2)
    for kind in OrderKind:
        if kind is OrderKind.loewner:
            continue
        assert check(kind, A, A).holds, kind.value


def test_loewner_requires_hermitian_pair():
    assert check("loewner", np.diag([1.0, 1.0]), np.diag([1.0, 2.0])).holds
    assert not check("loewner", np.diag([1.0, 2.0]), np.diag([1.0, 1.0])).holds
    with pytest.raises(ValueError):
        check("loewner", np.array([[0.0, 1.0], [0.0, 0.0]]), np.eye(2))


def test_known_plus_but_not_diamond_pair():
    rep = check("plus", F, G)
    assert rep.holds
    w = rep.witnesses
    assert fnorm(F - w.q_tilde @ G @ w.q) <= 1e-10
    # witness projections are idempotent and reproduce F as an inner inverse
    np.testing.assert_allclose(w.q_tilde @ w.q_tilde, w.q_tilde, atol=1e-9)
    np.testing.assert_allclose(w.q @ w.q, w.q, atol=1e-9)
    assert not check("diamond", F, G).holds
    assert not check("minus", F, G).holds
    assert not check("star", F, G).holds
    assert check("space", F, G).holds


def test_minus_without_star():
    A = np.array([[1.0, 0.0], [0.0, 0.0]])
    B = np.array([[1.0, 1.0], [0.0, 1.0]])
    assert check("minus", A, B).holds
    assert not check("star", A, B).holds
    assert check("plus", A, B).holds


def test_one_sided_star_orders():
    A = np.array([[1.0, 0.0], [0.0, 0.0]])
    B = np.array([[1.0, 0.0], [1.0, 1.0]])
    # A*A == A*B but AA* != BA*
    assert check("left_star", A, B).holds
    assert not check("right_star", A, B).holds
    assert not check("star", A, B).holds
    assert check("right_star", A.conj().T, B.conj().T).holds


def test_route_suites_agree_on_generated_pairs():
    rng = np.random.default_rng(1)
    for t in range(10):
        m, n = int(rng.integers(2, 6)), int(rng.integers(2, 6))
        A = rand_rank(rng, m, n, int(rng.integers(1, min(m, n) + 1)))
        for kind, fn in (
            (OrderKind.star, star_routes),
            (OrderKind.minus, minus_routes),
        ):
            B = generate(A, GenSpec(kind=kind, seed=t))
            rep = fn(A, B)
            assert rep.holds
            assert all(rt.verdict for rt in rep.routes), [
                (rt.name, rt.verdict) for rt in rep.routes
            ]
            neg = fn(A, A + crandn(rng, m, n))
            assert not neg.holds
            assert not any(rt.verdict for rt in neg.routes)


def test_diamond_routes_on_psd_pair():
    rng = np.random.default_rng(2)
    L = crandn(rng, 4, 2)
    A = L @ L.conj().T / 4
    B = generate(A, GenSpec(kind="diamond", seed=3))
    rep = diamond_routes(A, B)
    assert rep.holds and all(rt.verdict for rt in rep.routes)
    assert rep.witnesses is not None


def test_equation_routes_names_and_consistency():
    rng = np.random.default_rng(3)
    A = rand_rank(rng, 4, 4, 2)
    B = generate(A, GenSpec(kind="minus", seed=5))
    rep = equation_routes(A, B)
    names = [rt.name for rt in rep.routes]
    assert names == ["left_star_equation", "minus_equations", "core_orthogonality"]
    by_name = dict(zip(names, rep.routes))
    assert by_name["minus_equations"].verdict == check("minus", A, B).holds
    assert by_name["left_star_equation"].verdict == check("left_star", A, B).holds


def test_sandwich_search_rejects_degenerate_block_cancellation():
    # star-shaped pairs once produced exploding parameters whose block
    # residual vanished through cancellation; the ambient acceptance test
    # must keep the witness projections bounded and idempotent
    rng = np.random.default_rng(4)
    for t in range(10):
        m, n = int(rng.integers(2, 6)), int(rng.integers(2, 6))
        B = crandn(rng, m, n)
        U, s, Vh = np.linalg.svd(B, full_matrices=False)
        keep = np.zeros(len(s))
        keep[: max(1, len(s) // 2)] = 1
        A = (U * (s * keep)) @ Vh
        wit = find_sandwich_witness(A, B)
        assert wit is not None
        np.testing.assert_allclose(
            wit.q_tilde @ wit.q_tilde, wit.q_tilde, atol=1e-7 * (1 + fnorm(wit.q_tilde))
        )
        assert fnorm(wit.q_tilde @ B @ wit.q - A) <= 1e-8 * (1 + fnorm(A))


def test_sandwich_search_zero_matrix():
    wit = find_sandwich_witness(np.zeros((3, 2)), np.ones((3, 2)))
    assert wit is not None and wit.residual == 0.0


def test_plus_short_circuits_when_space_fails():
    rep = check("plus", np.diag([1.0, 0.0]), np.diag([0.0, 1.0]))
    assert not rep.holds
    assert rep.search_exhausted is False
    assert rep.routes[-1].name == "sandwich_witness"
    assert not rep.routes[-1].verdict


def test_plus_search_exhausted_flag():
    # space holds but no exact sandwich exists: rank(A) = rank(B) = 2, A != B
    A = np.diag([1.0, 1.0, 0.0])
    B = np.diag([1.0, 2.0, 0.0])
    rep = check("plus", A, B, cfg=PlusSearchConfig(restarts=2, max_iters=10))
    assert not rep.holds
    assert rep.search_exhausted


def test_witness_to_inner_inverse_properties():
    rng = np.random.default_rng(5)
    A = rand_rank(rng, 4, 5, 2)
    B = generate(A, GenSpec(kind="minus", seed=9))
    rep = check("minus", A, B)
    assert rep.holds
    G = rep.witnesses.inner_inverse
    np.testing.assert_allclose(A @ G @ A, A, atol=1e-8 * (1 + fnorm(A)))
    np.testing.assert_allclose(G @ A @ G, G, atol=1e-8 * (1 + fnorm(G)))
    # the witness pair reproduces the same inner inverse
    G2 = witness_to_inner_inverse(A, rep.witnesses.q_tilde, rep.witnesses.q)
    np.testing.assert_allclose(G2, G, atol=1e-8 * (1 + fnorm(G)))


def test_witness_to_inner_inverse_rejects_bad_projections():
    A = np.diag([1.0, 0.0])
    with pytest.raises(WitnessError):
        witness_to_inner_inverse(A, np.eye(2), np.eye(2))
    with pytest.raises(ShapeError):
        witness_to_inner_inverse(A, np.eye(3), np.eye(2))


def test_implication_chain_reports_all_kinds():
    rng = np.random.default_rng(6)
    A = rand_rank(rng, 3, 3, 1)
    B = generate(A, GenSpec(kind="star", seed=2))
    verdicts = dict(implication_chain(A, B))
    assert verdicts[OrderKind.star]
    assert verdicts[OrderKind.minus]
    assert verdicts[OrderKind.diamond]
    assert verdicts[OrderKind.plus]
    assert verdicts[OrderKind.space]
    assert OrderKind.loewner not in verdicts  # pair is not Hermitian
    H = np.diag([1.0, 0.0])
    verdicts = dict(implication_chain(H, np.diag([1.0, 3.0])))
    assert OrderKind.loewner in verdicts


def test_dagger_duality_spot_checks():
    rng = np.random.default_rng(7)
    for t in range(5):
        A = rand_rank(rng, 4, 4, 2)
        B = generate(A, GenSpec(kind="star", seed=t))
        assert check("star", pinv(A), pinv(B)).holds
        Bm = generate(A, GenSpec(kind="minus", seed=t))
        assert check("diamond", pinv(A), pinv(Bm)).holds == check("minus", A, Bm).holds
