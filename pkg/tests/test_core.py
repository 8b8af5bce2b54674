"""Primitive layer: pseudoinverse, bases, projections, polar, block form."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oporder.core import (
    DEFAULT_TOL,
    ShapeError,
    NotPSDError,
    Tolerance,
    as_matrix,
    block_decompose,
    classify,
    cokernel_basis,
    complement_basis,
    fnorm,
    is_hermitian,
    kernel_basis,
    matrix_rank,
    oblique_projection,
    pinv,
    polar,
    proj_range,
    psd_sqrt,
    range_basis,
    range_included,
    row_basis,
    spectral_norm,
)


def crandn(rng, m, n):
    return rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))


def rand_rank(rng, m, n, r):
    if r == 0:
        return np.zeros((m, n), dtype=complex)
    return crandn(rng, m, r) @ crandn(rng, r, n)


def test_tolerance_validation():
    with pytest.raises(ValueError):
        Tolerance(eq_abs=-1.0)
    tol = Tolerance()
    assert tol.eq(np.eye(2), np.eye(2) + 1e-12)
    assert not tol.eq(np.eye(2), np.zeros((2, 2)))
    assert not tol.eq(np.eye(2), np.eye(3))


def test_as_matrix_rejects_non_2d():
    with pytest.raises(ShapeError):
        as_matrix(np.zeros(3))
    with pytest.raises(ShapeError):
        as_matrix(np.zeros((2, 2, 2)))
    assert as_matrix([[1, 2]]).dtype == np.complex128


def test_matrix_rank_against_numpy():
    rng = np.random.default_rng(0)
    for t in range(30):
        m, n = int(rng.integers(1, 7)), int(rng.integers(1, 7))
        r = int(rng.integers(0, min(m, n) + 1))
        M = rand_rank(rng, m, n, r)
        assert matrix_rank(M) == r
        assert matrix_rank(M) == np.linalg.matrix_rank(M)


def test_matrix_rank_scale_kills_roundoff_differences():
    # B - A for B == A up to rounding must rank 0 against scale, not against
    # its own noise floor
    rng = np.random.default_rng(1)
    A = crandn(rng, 4, 4) * 1e6
    perturbation = 1e-12 * crandn(rng, 4, 4)
    D = (A + perturbation) - A
    assert matrix_rank(D, scale=spectral_norm(A)) == 0
    assert matrix_rank(D) > 0  # without the scale the noise looks like signal


def test_spectral_norm():
    assert spectral_norm(np.zeros((0, 3))) == 0.0
    assert spectral_norm(np.diag([3.0, -7.0])) == pytest.approx(7.0)


def test_pinv_matches_numpy_and_penrose():
    rng = np.random.default_rng(2)
    for t in range(20):
        m, n = int(rng.integers(1, 7)), int(rng.integers(1, 7))
        M = rand_rank(rng, m, n, int(rng.integers(0, min(m, n) + 1)))
        G = pinv(M)
        np.testing.assert_allclose(G, np.linalg.pinv(M), atol=1e-8)
        np.testing.assert_allclose(M @ G @ M, M, atol=1e-9 * (1 + fnorm(M)))
        np.testing.assert_allclose(G @ M @ G, G, atol=1e-9 * (1 + fnorm(G)))
        assert is_hermitian(M @ G)
        assert is_hermitian(G @ M)


@settings(max_examples=40, deadline=None)
@given(
    m=st.integers(1, 5),
    n=st.integers(1, 5),
    seed=st.integers(0, 10_000),
)
def test_pinv_of_pinv_property(m, n, seed):
    rng = np.random.default_rng(seed)
    M = rand_rank(rng, m, n, int(rng.integers(0, min(m, n) + 1)))
    np.testing.assert_allclose(pinv(pinv(M)), M, atol=1e-8 * (1 + fnorm(M)))


def test_bases_are_orthonormal_and_complementary():
    rng = np.random.default_rng(3)
    M = rand_rank(rng, 5, 4, 2)
    for basis, dim in (
        (range_basis(M), 2),
        (cokernel_basis(M), 3),
        (row_basis(M), 2),
        (kernel_basis(M), 2),
    ):
        assert basis.shape[1] == dim
        np.testing.assert_allclose(
            basis.conj().T @ basis, np.eye(dim), atol=1e-12
        )
    # range + cokernel span the codomain
    U = np.hstack([range_basis(M), cokernel_basis(M)])
    np.testing.assert_allclose(U @ U.conj().T, np.eye(5), atol=1e-12)
    np.testing.assert_allclose(M @ kernel_basis(M), 0, atol=1e-9)
    np.testing.assert_allclose(M.conj().T @ cokernel_basis(M), 0, atol=1e-9)


def test_complement_basis():
    rng = np.random.default_rng(4)
    V, _ = np.linalg.qr(crandn(rng, 5, 2))
    W = complement_basis(V)
    assert W.shape == (5, 3)
    np.testing.assert_allclose(V.conj().T @ W, 0, atol=1e-12)


def test_proj_range_and_inclusion():
    rng = np.random.default_rng(5)
    M = rand_rank(rng, 5, 3, 2)
    P = proj_range(M)
    assert classify(P).is_orth_projection
    np.testing.assert_allclose(P @ M, M, atol=1e-9)
    sub = M[:, :1]
    assert range_included(sub, M)
    assert not range_included(crandn(rng, 5, 1), M)
    assert range_included(np.zeros((5, 2)), M)
    assert not range_included(M, np.zeros((5, 2)))


def test_oblique_projection():
    rng = np.random.default_rng(6)
    onto = crandn(rng, 5, 2)
    along = crandn(rng, 5, 3)
    Q = oblique_projection(onto, along)
    np.testing.assert_allclose(Q @ Q, Q, atol=1e-9)
    np.testing.assert_allclose(Q @ onto, onto, atol=1e-9)
    np.testing.assert_allclose(Q @ along, 0, atol=1e-9)
    with pytest.raises(ShapeError):
        oblique_projection(crandn(rng, 5, 2), crandn(rng, 5, 2))
    with pytest.raises(ValueError):
        # overlapping spaces: not a direct sum
        oblique_projection(onto, np.hstack([onto[:, :1], along[:, :2]]))


def test_psd_sqrt():
    rng = np.random.default_rng(7)
    L = crandn(rng, 4, 2)
    M = L @ L.conj().T
    R = psd_sqrt(M)
    np.testing.assert_allclose(R @ R, M, atol=1e-9 * (1 + fnorm(M)))
    assert classify(R).is_psd
    with pytest.raises(NotPSDError):
        psd_sqrt(-np.eye(2))


def test_polar_decomposition():
    rng = np.random.default_rng(8)
    for t in range(10):
        m, n = int(rng.integers(1, 6)), int(rng.integers(1, 6))
        T = rand_rank(rng, m, n, int(rng.integers(0, min(m, n) + 1)))
        parts = polar(T)
        np.testing.assert_allclose(
            parts.modulus_star @ parts.isometry, T, atol=1e-8 * (1 + fnorm(T))
        )
        assert classify(parts.isometry).is_partial_isometry
        assert classify(parts.modulus_star).is_psd


def test_block_decompose_reconstructs():
    rng = np.random.default_rng(9)
    A = rand_rank(rng, 5, 4, 2)
    B = crandn(rng, 5, 4)
    d = block_decompose(A, B)
    assert d.rank == 2
    np.testing.assert_allclose(d.a_matrix(), A, atol=1e-9 * (1 + fnorm(A)))
    np.testing.assert_allclose(d.b_matrix(), B, atol=1e-9 * (1 + fnorm(B)))
    # the core block is the diagonal of singular values
    s = np.linalg.svd(A, compute_uv=False)[:2]
    np.testing.assert_allclose(np.diag(d.a), s, atol=1e-9)
    with pytest.raises(ShapeError):
        block_decompose(A, crandn(rng, 4, 4))


def test_classify_known_matrices():
    P = np.diag([1.0, 0.0])
    c = classify(P)
    assert c.is_projection and c.is_orth_projection and c.is_partial_isometry and c.is_psd
    Q = np.array([[1.0, 1.0], [0.0, 0.0]])  # idempotent, not Hermitian
    c = classify(Q)
    assert c.is_projection and not c.is_orth_projection
    V = np.array([[0.0, 1.0], [1.0, 0.0]])
    assert classify(V).is_partial_isometry
    assert not classify(np.array([[2.0]])).is_partial_isometry


def test_empty_and_zero_edge_cases():
    Z = np.zeros((3, 2))
    assert matrix_rank(Z) == 0
    assert pinv(Z).shape == (2, 3)
    assert fnorm(Z) == 0.0
    E = np.zeros((0, 4))
    assert matrix_rank(E) == 0
    assert range_basis(E).shape == (0, 0)
    assert kernel_basis(E).shape == (4, 4)
