"""Acceptance gate: the eleven criteria, one test and one summary line each.

Every criterion re-runs the shared verification suites with pinned seed
ranges (or checks the closed-form pairs directly), asserts the instance
counts the gate demands, and enforces the stated time budgets.
"""

import time

import numpy as np

from conftest import record_criterion
from oporder.core import fnorm
from oporder.factors import partial_converse_modulus, polar_order_transfer
from oporder.orders import OrderKind, check
from oporder.verify import run_suite


def _criterion(index: int, description: str, budget: float, fn) -> None:
    start = time.perf_counter()
    passed = False
    try:
        fn()
        elapsed = time.perf_counter() - start
        assert elapsed < budget, f"took {elapsed:.2f}s, budget {budget:.0f}s"
        passed = True
    finally:
        record_criterion(index, description, passed, time.perf_counter() - start)


def _suite_criterion(index, description, budget, name, seeds, expect_checked):
    def body():
        res = run_suite(name, seeds)
        assert res.checked == expect_checked, (
            f"{name} covered {res.checked} instances, expected {expect_checked}"
        )
        assert res.passed, f"{name} failures: {res.failures}"

    _criterion(index, description, budget, body)


def test_c01_certified_plus_pair_2x2():
    def body():
        rt2 = np.sqrt(2.0)
        F = np.array([[rt2 / 2, 0.0], [rt2 / 2, 0.0]])
        G = np.array([[0.0, 1.0], [1.0, 0.0]])
        rep = check(OrderKind.plus, F, G)
        assert rep.holds and rep.witnesses is not None
        w = rep.witnesses
        assert fnorm(F - w.q_tilde @ G @ w.q) <= 1e-10
        for kind in (OrderKind.diamond, OrderKind.minus, OrderKind.star):
            assert not check(kind, F, G).holds, f"{kind.value} must fail"
        assert check(OrderKind.space, F, G).holds

    _criterion(1, "2x2 plus pair: certified witness, diamond/minus/star fail", 1.0, body)


def test_c02_diamond_pair_with_incomparable_isometries():
    def body():
        A = np.array([[1.0, 0.0], [1.0, 0.0]])
        B = np.array([[0.0, 2.0], [2.0, 0.0]])
        assert check(OrderKind.diamond, A, B).holds
        rep = polar_order_transfer(A, B, OrderKind.diamond)
        assert not rep.hyp_isometry
        assert rep.conclusion
        assert partial_converse_modulus(A, B) is None
        assert partial_converse_modulus(A, A) is True

    _criterion(2, "2x2 diamond pair: isometries incomparable, converse vacuous", 1.0, body)


def test_c03_route_agreement():
    _suite_criterion(
        3,
        "route agreement on 500 pairs for each of star/minus/diamond",
        30.0,
        "route_agreement",
        range(100),
        1500,
    )


def test_c04_implication_chain():
    _suite_criterion(
        4,
        "order hierarchy holds on 700 pairs incl. 200 plus-generated",
        30.0,
        "implication_chain",
        range(100),
        700,
    )


def test_c05_dagger_duality():
    _suite_criterion(
        5,
        "pseudoinverse dualities star<->star, diamond<->minus on 300 pairs",
        30.0,
        "dagger_duality",
        range(100),
        300,
    )


def test_c06_shorted_roundtrip():
    _suite_criterion(
        6,
        "shorted operator: 300 round trips + 200 Schur oracle matches",
        30.0,
        "shorted_roundtrip",
        range(100),
        500,
    )


def test_c07_psd_diamond():
    _suite_criterion(
        7,
        "PSD diamond: 200 constructions/extractions + 200 Riccati solves",
        30.0,
        "psd_diamond",
        range(100),
        400,
    )


def test_c08_geometric_mean():
    _suite_criterion(
        8,
        "geometric mean identities on 200 pairs + 100 scalar cases",
        30.0,
        "geometric_mean",
        range(100),
        300,
    )


def test_c09_factor_structure():
    _suite_criterion(
        9,
        "200 projection pairs, 200 isometry pairs, 200 two-sided factor pairs",
        60.0,
        "factor_structure",
        range(100),
        600,
    )


def test_c10_plus_oracle():
    _suite_criterion(
        10,
        "grid+Newton sandwich oracle agrees with the search on 100 pairs",
        30.0,
        "plus_oracle",
        range(100),
        100,
    )


def test_c11_hasse_diagrams():
    _suite_criterion(
        11,
        "50 diagrams: reduction matches the closure oracle, DOT deterministic",
        30.0,
        "hasse_diagram",
        range(50),
        50,
    )
