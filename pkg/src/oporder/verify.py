"""Randomized property suites shared by the CLI verify command and the tests.

Each suite draws seeded instances, exercises one family of theorems, and
returns counts plus the worst residual seen.  The acceptance tests call the
same functions with pinned seed ranges, so the CLI table and the test suite
can never drift apart.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .core import (
    DEFAULT_TOL,
    Tolerance,
    block_decompose,
    fnorm,
    oblique_projection,
    matrix_rank,
    pinv,
    polar,
    proj_range,
    range_basis,
    row_basis,
)
from .factors import (
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
from .generators import (
    GenSpec,
    crandn,
    extract_diamond_psd_params,
    extract_minus_params,
    gen_diamond_psd,
    gen_minus,
    generate,
    rand_rank,
    random_orth_projection,
    random_partial_isometry,
)
from .hasse import build_hasse, to_dot, transitive_closure
from .means import geometric_mean, riccati_residual, riccati_solve
from .orders import (
    ChainViolation,
    OrderKind,
    PlusSearchConfig,
    check,
    diamond_routes,
    equation_routes,
    find_sandwich_witness,
    implication_chain,
    minus_routes,
    star_routes,
)
from .shorted import (
    SubspacePair,
    complementability,
    schur_complement_corner,
    shorted_operator,
)

__all__ = ["SuiteResult", "SUITES", "run_suite", "run_all", "plus_oracle_2x2"]

_MAX_RECORDED = 8


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checked: int
    failures: Tuple[str, ...]
    worst: float
    seconds: float


class _Log:
    """Failure collector: caps recorded messages, tracks the worst residual."""

    def __init__(self) -> None:
        self.checked = 0
        self.failed = 0
        self.failures: List[str] = []
        self.worst = 0.0

    def instance(self) -> None:
        self.checked += 1

    def residual(self, value: float) -> None:
        self.worst = max(self.worst, float(value))

    def expect(self, cond: bool, msg: str) -> bool:
        if not cond:
            self.failed += 1
            if len(self.failures) < _MAX_RECORDED:
                self.failures.append(msg)
        return cond

    def bounded(self, value: float, bound: float, msg: str) -> bool:
        self.residual(value)
        return self.expect(value <= bound, f"{msg}: {value:.3e} > {bound:.3e}")


def _psd_rand(rng: np.random.Generator, n: int, r: int) -> np.ndarray:
    L = crandn(rng, n, r)
    M = L @ L.conj().T / max(n, 1)
    return (M + M.conj().T) / 2.0


# ---------------------------------------------------------------------------
# golden pairs: the two canonical 2x2 examples plus a few closed-form values


def _suite_golden_pairs(seeds: Sequence[int], tol: Tolerance, cfg) -> _Log:
    log = _Log()
    rt2 = np.sqrt(2.0)
    F = np.array([[rt2 / 2, 0.0], [rt2 / 2, 0.0]])
    G = np.array([[0.0, 1.0], [1.0, 0.0]])

    log.instance()
    rep = check(OrderKind.plus, F, G, tol, cfg)
    if log.expect(rep.holds and rep.witnesses is not None, "F plus-below G"):
        w = rep.witnesses
        log.bounded(
            fnorm(F - w.q_tilde @ G @ w.q), 1e-10, "F sandwich reconstruction"
        )
    for kind in (OrderKind.diamond, OrderKind.minus, OrderKind.star):
        log.expect(not check(kind, F, G, tol).holds, f"{kind.value} must fail on (F, G)")
    log.expect(check(OrderKind.space, F, G, tol).holds, "space must hold on (F, G)")
    log.expect(not pp_membership(F, tol), "F is not a projection product")

    log.instance()
    A = np.array([[1.0, 0.0], [1.0, 0.0]])
    B = np.array([[0.0, 2.0], [2.0, 0.0]])
    log.expect(check(OrderKind.diamond, A, B, tol).holds, "A diamond-below B")
    rep2 = polar_order_transfer(A, B, OrderKind.diamond, tol)
    log.expect(not rep2.hyp_isometry, "isometries of (A, B) must not compare")
    log.expect(rep2.conclusion, "diamond conclusion on (A, B)")
    log.expect(
        partial_converse_modulus(A, B, tol) is None,
        "partial converse must be vacuous on (A, B)",
    )
    log.expect(partial_converse_modulus(A, A, tol) is True, "reflexive partial converse")

    # rank-one PSD corner: the off-diagonal solves g + g^2 = 1
    log.instance()
    one = np.array([[1.0 + 0.0j]])
    Bc = gen_diamond_psd(one, one, one, tol)
    golden = (np.sqrt(5.0) - 1.0) / 2.0
    log.bounded(abs(Bc[0, 1] - golden), 1e-12, "scalar diamond corner")
    log.expect(
        check(OrderKind.diamond, np.diag([1.0, 0.0]), Bc, tol).holds,
        "scalar diamond instance",
    )

    log.instance()
    M = geometric_mean(np.diag([4.0, 4.0]), np.diag([9.0, 9.0]), tol)
    log.bounded(fnorm(M - np.diag([6.0, 6.0])), 1e-12, "mean of 4I and 9I")

    log.instance()
    Am = np.array([[1.0, 0.0], [0.0, 0.0]])
    Bm = np.array([[1.0, 0.0], [1.0, 1.0]])
    log.expect(check(OrderKind.minus, Am, Bm, tol).holds, "minus example")
    log.expect(not check(OrderKind.star, Am, Bm, tol).holds, "minus-not-star example")
    Dl = np.diag([1.0, 1.0])
    Dh = np.diag([1.0, 2.0])
    log.expect(check(OrderKind.loewner, Dl, Dh, tol).holds, "loewner example")
    log.expect(
        not check(OrderKind.plus, Dl, Dh, tol, cfg).holds,
        "loewner must not imply plus on invertible pairs",
    )
    return log


# ---------------------------------------------------------------------------
# route agreement across every characterization of star / minus / diamond


_ROUTE_FNS: Dict[OrderKind, Callable] = {
    OrderKind.star: star_routes,
    OrderKind.minus: minus_routes,
    OrderKind.diamond: diamond_routes,
}


def _route_pairs(rng: np.random.Generator, kind: OrderKind, seed: int):
    m = int(rng.integers(2, 7))
    n = int(rng.integers(2, 7))
    r = int(rng.integers(1, min(m, n) + 1))
    A = rand_rank(rng, m, n, r)
    pairs = []
    if kind is OrderKind.diamond:
        n0 = int(rng.integers(2, 7))
        r0 = int(rng.integers(1, n0))
        Ap = _psd_rand(rng, n0, r0)
        pairs.append((Ap, generate(Ap, GenSpec(kind=kind, seed=seed))))
    else:
        pairs.append((A, generate(A, GenSpec(kind=kind, seed=seed))))
    pairs.append((A, generate(A, GenSpec(kind=OrderKind.star, seed=seed + 1))))
    base_A, base_B = pairs[0]
    noise = 10.0 ** float(rng.integers(-3, 1))
    pairs.append((base_A, base_B + noise * crandn(rng, *base_B.shape)))
    pairs.append((A, crandn(rng, m, n)))
    pairs.append((A, A))
    return pairs


def _suite_route_agreement(seeds: Sequence[int], tol: Tolerance, cfg) -> _Log:
    log = _Log()
    for seed in seeds:
        rng = np.random.default_rng(1000 + seed)
        for kind, fn in _ROUTE_FNS.items():
            for A, B in _route_pairs(rng, kind, seed):
                log.instance()
                rep = fn(A, B, tol)
                verdicts = {rt.verdict for rt in rep.routes}
                log.expect(
                    len(verdicts) == 1,
                    f"seed={seed} {kind.value} routes disagree: "
                    + ", ".join(f"{rt.name}={rt.verdict}" for rt in rep.routes),
                )
                log.expect(
                    rep.holds == check(kind, A, B, tol).holds,
                    f"seed={seed} {kind.value} module verdicts disagree",
                )
                if rep.holds:
                    log.residual(max(rt.residual for rt in rep.routes))
                if kind is OrderKind.star:
                    eq = equation_routes(A, B, tol)
                    by_name = {rt.name: rt.verdict for rt in eq.routes}
                    log.expect(
                        by_name["left_star_equation"]
                        == check(OrderKind.left_star, A, B, tol).holds,
                        f"seed={seed} left-star equation route mismatch",
                    )
                    log.expect(
                        by_name["minus_equations"]
                        == check(OrderKind.minus, A, B, tol).holds,
                        f"seed={seed} minus equation route mismatch",
                    )
                    if check(OrderKind.diamond, A, B, tol).holds:
                        log.expect(
                            by_name["core_orthogonality"],
                            f"seed={seed} diamond holds but core equation fails",
                        )
    return log


# ---------------------------------------------------------------------------
# implication chain star => minus => plus => space, star => diamond => plus


def _suite_implication_chain(seeds: Sequence[int], tol: Tolerance, cfg) -> _Log:
    log = _Log()
    for seed in seeds:
        rng = np.random.default_rng(2000 + seed)
        m = int(rng.integers(2, 7))
        n = int(rng.integers(2, 7))
        r = int(rng.integers(1, min(m, n) + 1))
        A = rand_rank(rng, m, n, r)
        pairs = [
            (A, generate(A, GenSpec(kind=OrderKind.star, seed=seed))),
            (A, generate(A, GenSpec(kind=OrderKind.minus, seed=seed))),
            (A, crandn(rng, m, n)),
        ]
        n0 = int(rng.integers(2, 6))
        r0 = int(rng.integers(1, n0))
        Asq = rand_rank(rng, n0, n0, r0)
        pairs.append((Asq, generate(Asq, GenSpec(kind=OrderKind.plus, seed=seed))))
        pairs.append(
            (Asq, generate(Asq, GenSpec(kind=OrderKind.plus, seed=seed + 104729)))
        )
        Ap = _psd_rand(rng, n0, r0)
        pairs.append((Ap, generate(Ap, GenSpec(kind=OrderKind.diamond, seed=seed))))
        noisy = pairs[1][1] + 1e-2 * crandn(rng, m, n)
        pairs.append((A, noisy))
        for Ai, Bi in pairs:
            log.instance()
            try:
                implication_chain(Ai, Bi, tol, cfg)
            except ChainViolation as exc:
                log.expect(False, f"seed={seed}: {exc}")
    return log


# ---------------------------------------------------------------------------
# dagger dualities


def _suite_dagger_duality(seeds: Sequence[int], tol: Tolerance, cfg) -> _Log:
    log = _Log()
    for seed in seeds:
        rng = np.random.default_rng(3000 + seed)
        m = int(rng.integers(2, 7))
        n = int(rng.integers(2, 7))
        r = int(rng.integers(1, min(m, n) + 1))
        A = rand_rank(rng, m, n, r)
        pairs = [
            (A, generate(A, GenSpec(kind=OrderKind.star, seed=seed))),
            (A, generate(A, GenSpec(kind=OrderKind.minus, seed=seed))),
            (A, crandn(rng, m, n)),
        ]
        for Ai, Bi in pairs:
            log.instance()
            Ad = pinv(Ai, tol)
            Bd = pinv(Bi, tol)
            log.expect(
                check(OrderKind.star, Ai, Bi, tol).holds
                == check(OrderKind.star, Ad, Bd, tol).holds,
                f"seed={seed} star dagger duality",
            )
            log.expect(
                check(OrderKind.diamond, Ai, Bi, tol).holds
                == check(OrderKind.minus, Ad, Bd, tol).holds,
                f"seed={seed} diamond/minus dagger duality",
            )
    return log


# ---------------------------------------------------------------------------
# shorted operator round trip and the Schur complement oracle


def _suite_shorted_roundtrip(seeds: Sequence[int], tol: Tolerance, cfg) -> _Log:
    log = _Log()
    for seed in seeds:
        rng = np.random.default_rng(4000 + seed)
        for k in range(3):
            log.instance()
            m = int(rng.integers(1, 8))
            n = int(rng.integers(1, 8))
            r = int(rng.integers(1, min(m, n) + 1))
            A = rand_rank(rng, m, n, r)
            B = generate(A, GenSpec(kind=OrderKind.minus, seed=seed + 7 * k))
            pair = SubspacePair(s_basis=row_basis(A, tol), t_basis=range_basis(A, tol))
            comp, _ = complementability(B, pair, tol)
            if not log.expect(comp, f"seed={seed} minus pair not complementable"):
                continue
            res = shorted_operator(B, pair, tol)
            log.bounded(
                fnorm(res.shorted - A),
                1e-8 * (1.0 + fnorm(A)),
                f"seed={seed} shorted round trip",
            )
        for k in range(2):
            log.instance()
            n = int(rng.integers(2, 8))
            L = crandn(rng, n, n)
            B = L @ L.conj().T
            kdim = int(rng.integers(1, n + 1))
            Q, _ = np.linalg.qr(crandn(rng, n, kdim))
            pair = SubspacePair(s_basis=Q, t_basis=Q)
            comp, weak = complementability(B, pair, tol)
            if not log.expect(comp and weak, f"seed={seed} PD not complementable"):
                continue
            res = shorted_operator(B, pair, tol)
            oracle = schur_complement_corner(B, pair, tol)
            log.bounded(
                fnorm(res.shorted - oracle),
                1e-9 * (1.0 + fnorm(B)),
                f"seed={seed} Schur oracle mismatch",
            )
    return log


# ---------------------------------------------------------------------------
# PSD diamond construction, extraction, and the Riccati solver


def _suite_psd_diamond(seeds: Sequence[int], tol: Tolerance, cfg) -> _Log:
    log = _Log()
    for seed in seeds:
        rng = np.random.default_rng(5000 + seed)
        for k in range(2):
            log.instance()
            n = int(rng.integers(2, 7))
            r = int(rng.integers(1, n))
            A = _psd_rand(rng, n, r)
            B = generate(A, GenSpec(kind=OrderKind.diamond, seed=seed + 11 * k))
            rep = diamond_routes(A, B, tol)
            log.expect(
                all(rt.verdict for rt in rep.routes),
                f"seed={seed} diamond route failed: "
                + ", ".join(rt.name for rt in rep.routes if not rt.verdict),
            )
            params = extract_diamond_psd_params(A, B, tol)
            log.bounded(
                fnorm(params.reassemble(tol) - B),
                1e-7 * (1.0 + fnorm(B)),
                f"seed={seed} diamond parameter extraction",
            )
        for k in range(2):
            log.instance()
            n = int(rng.integers(1, 6))
            L = crandn(rng, n, n)
            B = L @ L.conj().T + 0.2 * np.eye(n)
            H = crandn(rng, n, n)
            H = (H + H.conj().T) / 2.0
            T = np.linalg.solve(B, H)
            Lc = crandn(rng, n, n)
            C = Lc @ Lc.conj().T
            X = riccati_solve(B, T, C, tol)
            log.bounded(
                riccati_residual(X, B, T, C, tol),
                1e-7 * (1.0 + fnorm(C)),
                f"seed={seed} Riccati residual",
            )
    return log


# ---------------------------------------------------------------------------
# geometric mean properties


def _suite_geometric_mean(seeds: Sequence[int], tol: Tolerance, cfg) -> _Log:
    log = _Log()
    for seed in seeds:
        rng = np.random.default_rng(6000 + seed)
        for _ in range(2):
            log.instance()
            n = int(rng.integers(1, 7))
            Lb = crandn(rng, n, n)
            Bm = Lb @ Lb.conj().T + 0.1 * np.eye(n)
            Lc = crandn(rng, n, n)
            Cm = Lc @ Lc.conj().T + 0.1 * np.eye(n)
            M1 = geometric_mean(Bm, Cm, tol)
            M2 = geometric_mean(Cm, Bm, tol)
            log.bounded(
                fnorm(M1 - M2), 1e-8 * (1.0 + fnorm(M1)), f"seed={seed} mean symmetry"
            )
            log.bounded(
                fnorm(M1 @ np.linalg.solve(Bm, M1) - Cm),
                1e-8 * (1.0 + fnorm(Cm)),
                f"seed={seed} mean defining identity",
            )
        log.instance()
        b = float(np.exp(rng.normal()))
        c = float(np.exp(rng.normal()))
        M = geometric_mean(np.array([[b]]), np.array([[c]]), tol)
        want = np.sqrt(b * c)
        log.bounded(
            abs(float(M[0, 0].real) - want),
            1e-12 * (1.0 + want),
            f"seed={seed} scalar mean",
        )
    return log


# ---------------------------------------------------------------------------
# structure results: projections, partial isometries, projection products


def _nested_projections(rng: np.random.Generator, n: int):
    U, _ = np.linalg.qr(crandn(rng, n, n))
    r1 = int(rng.integers(1, n))
    r2 = int(rng.integers(r1, n + 1))
    P = U[:, :r1] @ U[:, :r1].conj().T
    Q = U[:, :r2] @ U[:, :r2].conj().T
    return P, Q


def _framed_isometries(rng: np.random.Generator, n: int):
    U, _ = np.linalg.qr(crandn(rng, n, n))
    W, _ = np.linalg.qr(crandn(rng, n, n))
    r1 = int(rng.integers(1, n))
    r2 = int(rng.integers(r1, n + 1))
    F = U[:, :r1] @ W[:, :r1].conj().T
    G = U[:, :r2] @ W[:, :r2].conj().T
    return F, G


_SIX_KINDS = (
    OrderKind.left_star,
    OrderKind.right_star,
    OrderKind.star,
    OrderKind.minus,
    OrderKind.diamond,
    OrderKind.plus,
)


def _qq_plus_pair(rng: np.random.Generator, tol: Tolerance):
    """T plus-below T2 with a canonical factorization of T2, or None."""
    n = int(rng.integers(2, 7))
    r2 = int(rng.integers(1, n + 1))
    T2, fac2 = random_qq_factorization(rng, n, r2, tol)
    r = int(rng.integers(1, r2 + 1))
    colT2 = range_basis(T2, tol)
    rowT2 = row_basis(T2, tol)
    for _ in range(50):
        qmix, _ = np.linalg.qr(colT2 @ crandn(rng, r2, r))
        qmixr, _ = np.linalg.qr(rowT2 @ crandn(rng, r2, r))
        try:
            Qt = oblique_projection(qmix, crandn(rng, n, n - r), tol)
            Qd = oblique_projection(qmixr, crandn(rng, n, n - r), tol).conj().T
        except ValueError:
            continue
        T = Qt @ T2 @ Qd
        if matrix_rank(T, tol) == r:
            return T, T2, fac2
    return None


def _suite_factor_structure(seeds: Sequence[int], tol: Tolerance, cfg) -> _Log:
    log = _Log()
    for seed in seeds:
        rng = np.random.default_rng(7000 + seed)
        n = int(rng.integers(2, 7))

        # orthogonal projections: the six relations coincide
        proj_pairs = [_nested_projections(rng, n)]
        proj_pairs.append(
            (
                random_orth_projection(rng, n, int(rng.integers(1, n + 1))),
                random_orth_projection(rng, n, int(rng.integers(1, n + 1))),
            )
        )
        for idx, (P, Q) in enumerate(proj_pairs):
            log.instance()
            verdicts = {k: check(k, P, Q, tol, cfg).holds for k in _SIX_KINDS}
            loewner = check(OrderKind.loewner, P, Q, tol).holds
            log.expect(
                len(set(verdicts.values())) == 1,
                f"seed={seed} projection pair verdicts split: {verdicts}",
            )
            log.expect(
                loewner == next(iter(verdicts.values())),
                f"seed={seed} projection loewner disagrees",
            )
            if idx == 0:
                log.expect(all(verdicts.values()), f"seed={seed} nested pair negative")
            d, s = pp_diamond(P, Q, tol)
            log.expect(
                d == verdicts[OrderKind.diamond] and d == s,
                f"seed={seed} projection-product interval verdict",
            )

        # partial isometries: star == minus == diamond
        log.instance()
        Fp, Gp = _framed_isometries(rng, n)
        res = isometry_order_coincidence(Fp, Gp, tol)
        log.expect(all(res), f"seed={seed} framed isometries must relate: {res}")
        log.instance()
        Fr = random_partial_isometry(rng, n, n, int(rng.integers(1, n + 1)))
        Gr = random_partial_isometry(rng, n, n, int(rng.integers(1, n + 1)))
        isometry_order_coincidence(Fr, Gr, tol)
        rep = polar_order_transfer(Fp, Gp, OrderKind.plus, tol)
        log.expect(rep.conclusion, f"seed={seed} framed isometry transfer")

        # products of two projections: plus <-> minus-ordered factors
        for _ in range(2):
            built = _qq_plus_pair(rng, tol)
            if built is None:
                continue
            T, T2, fac2 = built
            wit = find_sandwich_witness(T, T2, tol, cfg)
            if not log.expect(wit is not None, f"seed={seed} missing plus witness"):
                continue
            log.instance()
            fac = qq_plus_to_minus(T, T2, fac2.E, fac2.F, wit.q_tilde, wit.q, tol)
            qt, qd = qq_minus_to_plus(T, T2, fac.E, fac.F, fac2.E, fac2.F, tol)
            log.bounded(
                fnorm(qt @ T2 @ qd - T),
                tol.eq_abs + tol.eq_rel * (fnorm(T) + fnorm(T2)),
                f"seed={seed} reassembled witness",
            )
            rew = reweight_to_diamond(T, T2, wit.q_tilde, wit.q, tol)
            log.expect(
                rew.diamond_weighted, f"seed={seed} reweighted pair not diamond"
            )
    return log


# ---------------------------------------------------------------------------
# brute-force plus oracle at 2x2 rank one


def plus_oracle_2x2(A, B, tol: Tolerance = DEFAULT_TOL) -> Tuple[bool, float]:
    """Grid plus Newton search for a sandwich witness of a rank-one 2x2 pair.

    Scans (x, y) over [-10, 10]^2, refines the best cell, and reports
    (found, residual).  Requires rank(A) == 1 so both parameters are scalars.
    """
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    if A.shape != (2, 2) or B.shape != (2, 2):
        raise ValueError("oracle is specialized to 2x2 pairs")
    d = block_decompose(A, B, tol)
    if d.rank != 1:
        raise ValueError("oracle requires rank(A) == 1")
    if not (
        check(OrderKind.space, A, B, tol).holds
    ):
        return False, np.inf
    a = complex(d.a[0, 0])
    b11 = complex(d.b11[0, 0])
    b12 = complex(d.b12[0, 0])
    b21 = complex(d.b21[0, 0])
    b22 = complex(d.b22[0, 0])
    g0 = b11 - a

    def res(x: float, y: float) -> complex:
        return g0 - y * b21 - b12 * x + y * b22 * x

    grid = np.linspace(-10.0, 10.0, 41)
    best = (np.inf, 0.0, 0.0)
    for x in grid:
        for y in grid:
            v = abs(res(x, y))
            if v < best[0]:
                best = (v, float(x), float(y))
    bound = 1e-9 * (1.0 + fnorm(A))
    _, x, y = best
    for _ in range(100):
        rv = res(x, y)
        if abs(rv) <= bound:
            break
        dx = -b12 + y * b22
        dy = -b21 + b22 * x
        J = np.array([[dx.real, dy.real], [dx.imag, dy.imag]])
        rhs = -np.array([rv.real, rv.imag])
        step, *_ = np.linalg.lstsq(J, rhs, rcond=None)
        if not np.all(np.isfinite(step)):
            break
        x += float(step[0])
        y += float(step[1])
    refined = abs(res(x, y))
    if refined < best[0] and abs(x) <= 10.0 and abs(y) <= 10.0:
        best = (refined, x, y)
    return best[0] <= bound, best[0]


def _oracle_pair(rng: np.random.Generator, positive: bool, tol: Tolerance):
    while True:
        u = rng.standard_normal(2)
        v = rng.standard_normal(2)
        if np.linalg.norm(u) * np.linalg.norm(v) > 0.3:
            break
    A = np.outer(u, v).astype(complex)
    if positive:
        d = block_decompose(A, A, tol)
        x = rng.uniform(-3.0, 3.0, (1, 1)).astype(complex)
        y = rng.uniform(-3.0, 3.0, (1, 1)).astype(complex)
        b22 = (rng.uniform(0.2, 2.0) * rng.choice([-1.0, 1.0])) * np.ones(
            (1, 1), dtype=complex
        )
        B = d.assemble(d.a + y @ b22 @ x, y @ b22, b22 @ x, b22)
    else:
        B = rng.standard_normal((2, 2)).astype(complex)
    return A, B


def _suite_plus_oracle(seeds: Sequence[int], tol: Tolerance, cfg) -> _Log:
    log = _Log()
    positives = 0
    for seed in seeds:
        rng = np.random.default_rng(8000 + seed)
        A, B = _oracle_pair(rng, seed % 2 == 0, tol)
        log.instance()
        oracle, residual = plus_oracle_2x2(A, B, tol)
        als = check(OrderKind.plus, A, B, tol, cfg).holds
        if oracle:
            positives += 1
            log.residual(residual)
            log.expect(
                als, f"seed={seed} oracle found a witness but the search did not"
            )
    log.expect(positives > 0, "oracle never fired; pair generation is broken")
    return log


# ---------------------------------------------------------------------------
# Hasse diagrams: reduction against a closure oracle, deterministic DOT


def _hasse_inputs(rng: np.random.Generator, seed: int):
    n = int(rng.integers(2, 5))
    r = int(rng.integers(1, n))
    A = rand_rank(rng, n, n, r)
    B = generate(A, GenSpec(kind=OrderKind.minus, seed=seed))
    C = generate(B, GenSpec(kind=OrderKind.minus, seed=seed + 1))
    mats = [
        ("a", A),
        ("b", B),
        ("c", C),
        ("zero", np.zeros((n, n), dtype=complex)),
        ("r1", crandn(rng, n, n)),
        ("r2", rand_rank(rng, n, n, int(rng.integers(1, n + 1)))),
        ("a_copy", A.copy()),
    ]
    if n >= 3:
        mats.append(("s1", generate(A, GenSpec(kind=OrderKind.star, seed=seed + 2))))
    kind = (OrderKind.star, OrderKind.minus, OrderKind.diamond)[seed % 3]
    return mats, kind


def _suite_hasse_diagram(seeds: Sequence[int], tol: Tolerance, cfg) -> _Log:
    log = _Log()
    for seed in seeds:
        log.instance()
        rng = np.random.default_rng(9000 + seed)
        mats, kind = _hasse_inputs(rng, seed)
        g = build_hasse(mats, kind, tol, cfg)
        g2 = build_hasse(mats, kind, tol, cfg)
        log.expect(to_dot(g) == to_dot(g2), f"seed={seed} DOT output not deterministic")
        log.expect(
            len(g.node_ids) < len(mats), f"seed={seed} duplicate node not merged"
        )
        idx = {lab: i for i, lab in enumerate(g.node_ids)}
        nn = len(g.node_ids)
        log.expect(
            bool(np.all(np.diag(g.adjacency))), f"seed={seed} adjacency not reflexive"
        )
        cov = np.zeros((nn, nn), dtype=bool)
        for e in g.covers:
            cov[idx[e.src], idx[e.dst]] = True
        log.expect(
            bool(np.all(~cov | g.adjacency)), f"seed={seed} cover outside adjacency"
        )
        strict = g.adjacency.copy()
        np.fill_diagonal(strict, False)
        same = np.array_equal(transitive_closure(cov), transitive_closure(strict))
        log.expect(same, f"seed={seed} closure(covers) != closure(strict adjacency)")
    return log


# ---------------------------------------------------------------------------
# registry


SUITES: Dict[str, Tuple[Callable[..., _Log], str]] = {
    "golden_pairs": (_suite_golden_pairs, "closed-form 2x2 pairs and scalar values"),
    "route_agreement": (_suite_route_agreement, "all characterization routes agree"),
    "implication_chain": (_suite_implication_chain, "star => minus/diamond => plus => space"),
    "dagger_duality": (_suite_dagger_duality, "order duality under the pseudoinverse"),
    "shorted_roundtrip": (_suite_shorted_roundtrip, "shorted operator inverts minus generation"),
    "psd_diamond": (_suite_psd_diamond, "PSD diamond construction, extraction, Riccati"),
    "geometric_mean": (_suite_geometric_mean, "mean symmetry, defining identity, scalar value"),
    "factor_structure": (_suite_factor_structure, "projections, isometries, projection products"),
    "plus_oracle": (_suite_plus_oracle, "grid+Newton sandwich oracle vs the search"),
    "hasse_diagram": (_suite_hasse_diagram, "transitive reduction oracle, DOT determinism"),
}


def run_suite(
    name: str,
    seeds: Sequence[int],
    tol: Tolerance = DEFAULT_TOL,
    cfg: Optional[PlusSearchConfig] = None,
) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    fn, _ = SUITES[name]
    start = time.perf_counter()
    log = fn(seeds, tol, cfg)
    elapsed = time.perf_counter() - start
    return SuiteResult(
        name=name,
        passed=log.failed == 0,
        checked=log.checked,
        failures=tuple(log.failures),
        worst=log.worst,
        seconds=elapsed,
    )


def run_all(
    seeds: Sequence[int],
    tol: Tolerance = DEFAULT_TOL,
    cfg: Optional[PlusSearchConfig] = None,
    names: Optional[Sequence[str]] = None,
) -> List[SuiteResult]:
    chosen = list(SUITES) if names is None else list(names)
    return [run_suite(name, seeds, tol, cfg) for name in chosen]
