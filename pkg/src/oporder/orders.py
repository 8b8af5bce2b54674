"""Order relations between complex matrices.

Eight relations are decided: loewner, space (pre-order), left_star,
right_star, star, minus, diamond and plus. `check` runs the definitional
test for one kind; `star_routes` / `minus_routes` / `diamond_routes` /
`equation_routes` evaluate every characterization route and are expected to
agree route-by-route. The plus order has no closed decision procedure: it
is decided by an alternating-least-squares search for a sandwich witness
A = Q_tilde B Q, which is sound (a witness certifies the relation) but
one-sided (absence of a witness after all restarts is reported with
`search_exhausted`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    DEFAULT_TOL,
    ShapeError,
    Tolerance,
    as_matrix,
    block_decompose,
    fnorm,
    is_hermitian,
    matrix_rank,
    pinv,
    proj_range,
    spectral_norm,
)
from .shorted import SubspacePair, complementability, shorted_operator

__all__ = [
    "OrderKind",
    "Route",
    "Witnesses",
    "OrderReport",
    "PlusSearchConfig",
    "DEFAULT_PLUS_CFG",
    "SandwichWitness",
    "ChainViolation",
    "WitnessError",
    "check",
    "star_routes",
    "minus_routes",
    "diamond_routes",
    "equation_routes",
    "find_sandwich_witness",
    "witness_to_inner_inverse",
    "implication_chain",
]


class OrderKind(str, enum.Enum):
    loewner = "loewner"
    space = "space"
    left_star = "left_star"
    right_star = "right_star"
    star = "star"
    minus = "minus"
    diamond = "diamond"
    plus = "plus"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class PlusSearchConfig:
    restarts: int = 32
    max_iters: int = 200
    seed: int = 0
    residual_tol: float = 1e-8

    def __post_init__(self) -> None:
        if self.restarts < 1 or self.max_iters < 1:
            raise ValueError("restarts and max_iters must be at least 1")


DEFAULT_PLUS_CFG = PlusSearchConfig()


@dataclass(frozen=True)
class Route:
    name: str
    verdict: bool
    residual: float


@dataclass(frozen=True)
class Witnesses:
    q_tilde: Optional[np.ndarray] = None
    q: Optional[np.ndarray] = None
    x: Optional[np.ndarray] = None
    y: Optional[np.ndarray] = None
    inner_inverse: Optional[np.ndarray] = None


@dataclass(frozen=True)
class OrderReport:
    kind: Optional[OrderKind]
    holds: bool
    routes: tuple[Route, ...]
    witnesses: Optional[Witnesses] = None
    search_exhausted: bool = False


@dataclass(frozen=True)
class SandwichWitness:
    q_tilde: np.ndarray
    q: np.ndarray
    x: np.ndarray
    y: np.ndarray
    residual: float


class ChainViolation(RuntimeError):
    """An implication of the order hierarchy failed on a tested pair."""


class WitnessError(ValueError):
    """Supplied projections do not witness the claimed relation."""


def _eq_route(name: str, X, Y, tol: Tolerance) -> Route:
    X = np.asarray(X)
    Y = np.asarray(Y)
    res = fnorm(X - Y)
    return Route(name, res <= tol.eq_bound(X, Y), res)


def _incl_route(name: str, A, B, tol: Tolerance) -> Route:
    PA = proj_range(B, tol) @ A
    res = fnorm(PA - A)
    return Route(name, res <= tol.eq_bound(PA, A), res)


def _merge(name: str, *routes: Route) -> Route:
    return Route(
        name,
        all(r.verdict for r in routes),
        max((r.residual for r in routes), default=0.0),
    )


def _space_routes(A, B, tol: Tolerance) -> tuple[Route, Route]:
    return (
        _incl_route("range_inclusion", A, B, tol),
        _incl_route("adjoint_range_inclusion", A.conj().T, B.conj().T, tol),
    )


def _space_ok(A, B, tol: Tolerance) -> Route:
    return _merge("space_preorder", *_space_routes(A, B, tol))


def _is_orth_proj(P, tol: Tolerance) -> Route:
    return _merge(
        "orth_projection",
        _eq_route("idempotent", P @ P, P, tol),
        _eq_route("hermitian", P, P.conj().T, tol),
    )


def _validate_pair(A, B) -> tuple[np.ndarray, np.ndarray]:
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape:
        raise ShapeError(f"shape mismatch: {A.shape} vs {B.shape}")
    return A, B


def _crandn(rng, m: int, n: int) -> np.ndarray:
    return (rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))) / np.sqrt(2.0)


def find_sandwich_witness(
    A, B, tol: Tolerance = DEFAULT_TOL, cfg: Optional[PlusSearchConfig] = None
) -> Optional[SandwichWitness]:
    """Search for projections Q_tilde, Q with A == Q_tilde B Q.

    In A's canonical blocks the candidates have the normalized form
    Q_tilde = [[1, -y], [0, 0]], Q = [[1, 0], [-x, 0]], and the sandwich
    equation reduces to the bilinear residual
    r(x, y) = b11 - a - y b21 - b12 x + y b22 x. Alternating least squares
    (x-step, then y-step) runs from two deterministic starts, the
    least-squares pair (b22† b21, b12 b22†) and (0, 0), which solve the
    minus-shaped and diamond-shaped instances exactly, then cfg.restarts
    random starts. Candidates are accepted by the ambient sandwich residual
    ||Q_tilde B Q - A||_F against cfg.residual_tol * (1 + ||A||_F); returns
    None if no start reaches it.
    """
    cfg = cfg or DEFAULT_PLUS_CFG
    A, B = _validate_pair(A, B)
    d = block_decompose(A, B, tol)
    m, n = d.shape
    r = d.rank
    col, cok = d.basis_colA, d.basis_cokerA
    row, ker = d.basis_rowA, d.basis_kerA
    if r == 0:
        return SandwichWitness(
            q_tilde=np.zeros((m, m), np.complex128),
            q=np.zeros((n, n), np.complex128),
            x=np.zeros((n, 0), np.complex128),
            y=np.zeros((0, m), np.complex128),
            residual=0.0,
        )
    g0 = d.b11 - d.a

    def residual(x, y):
        return fnorm(g0 - y @ d.b21 - d.b12 @ x + y @ d.b22 @ x)

    # candidates are judged by the assembled sandwich, not the block residual:
    # huge x or y can zero the block form through cancellation while the
    # ambient witness is useless
    bound = cfg.residual_tol * (1.0 + fnorm(A))

    def assemble(x, y):
        q_tilde = col @ col.conj().T - col @ y @ cok.conj().T
        q = row @ row.conj().T - ker @ x @ row.conj().T
        return q_tilde, q, fnorm(q_tilde @ B @ q - A)

    b22p = pinv(d.b22, tol)
    starts = [
        (b22p @ d.b21, d.b12 @ b22p),
        (np.zeros((n - r, r), np.complex128), np.zeros((r, m - r), np.complex128)),
    ]
    rng = np.random.default_rng(cfg.seed)
    for _ in range(cfg.restarts):
        s = float(3.0 ** rng.integers(-1, 2))
        starts.append((s * _crandn(rng, n - r, r), s * _crandn(rng, r, m - r)))

    best = None
    for x, y in starts:
        cur = residual(x, y)
        q_tilde, q, res = assemble(x, y)
        if best is None or res < best[0]:
            best = (res, x, y, q_tilde, q)
        if best[0] <= bound:
            break
        for _ in range(cfg.max_iters):
            x = pinv(d.b12 - y @ d.b22, tol) @ (g0 - y @ d.b21)
            y = (g0 - d.b12 @ x) @ pinv(d.b21 - d.b22 @ x, tol)
            new = residual(x, y)
            q_tilde, q, res = assemble(x, y)
            if res < best[0]:
                best = (res, x, y, q_tilde, q)
            if res <= bound or cur - new <= 1e-14 * (1.0 + cur):
                break
            cur = new
        if best[0] <= bound:
            break
    if best is None or best[0] > bound:
        return None
    res, x, y, q_tilde, q = best
    return SandwichWitness(q_tilde=q_tilde, q=q, x=x, y=y, residual=res)


def witness_to_inner_inverse(
    A, Q_tilde, Q, tol: Tolerance = DEFAULT_TOL
) -> np.ndarray:
    """Inner inverse determined by a projection pair (R(Q_tilde)=R(A), N(Q)=N(A)).

    Returns G = [[a^-1, -a^-1 y], [-x a^-1, x a^-1 y]] in canonical blocks;
    G satisfies A G A == A, G A G == G, A G == Q_tilde and G A == Q.
    Raises WitnessError when the inputs do not satisfy the projection and
    range/nullspace conditions, or when the constructed G misses its
    defining equations beyond tolerance.
    """
    A = as_matrix(A)
    Qt = as_matrix(Q_tilde)
    Q = as_matrix(Q)
    m, n = A.shape
    if Qt.shape != (m, m) or Q.shape != (n, n):
        raise ShapeError("witness projections have wrong shapes")
    d = block_decompose(A, A, tol)
    col, cok = d.basis_colA, d.basis_cokerA
    row, ker = d.basis_rowA, d.basis_kerA
    P_A = col @ col.conj().T
    P_Astar = row @ row.conj().T
    conditions = (
        _eq_route("Q_tilde idempotent", Qt @ Qt, Qt, tol),
        _eq_route("Q idempotent", Q @ Q, Q, tol),
        _eq_route("R(Q_tilde) inside R(A)", P_A @ Qt, Qt, tol),
        _eq_route("R(A) inside R(Q_tilde)", Qt @ A, A, tol),
        _eq_route("N(A) inside N(Q)", Q @ P_Astar, Q, tol),
        _eq_route("N(Q) inside N(A)", A @ Q, A, tol),
    )
    bad = [c.name for c in conditions if not c.verdict]
    if bad:
        raise WitnessError("witness conditions failed: " + ", ".join(bad))
    r = d.rank
    if r == 0:
        return np.zeros((n, m), np.complex128)
    y = -(col.conj().T @ Qt @ cok)
    x = -(ker.conj().T @ Q @ row)
    ainv = np.linalg.inv(d.a)
    G = (
        row @ ainv @ col.conj().T
        - row @ (ainv @ y) @ cok.conj().T
        - ker @ (x @ ainv) @ col.conj().T
        + ker @ (x @ ainv @ y) @ cok.conj().T
    )
    post = (
        _eq_route("A G A == A", A @ G @ A, A, tol),
        _eq_route("G A G == G", G @ A @ G, G, tol),
        _eq_route("A G == Q_tilde", A @ G, Qt, tol),
        _eq_route("G A == Q", G @ A, Q, tol),
    )
    bad = [c.name for c in post if not c.verdict]
    if bad:
        raise WitnessError("inner inverse check failed: " + ", ".join(bad))
    return G


def _minus_block_params(A, B, tol: Tolerance):
    d = block_decompose(A, B, tol)
    b22p = pinv(d.b22, tol)
    return d, b22p @ d.b21, d.b12 @ b22p


def _definitional(kind: OrderKind, A, B, tol: Tolerance, cfg) -> tuple[
    tuple[Route, ...], bool, Optional[Witnesses], bool
]:
    """Routes, verdict, witnesses, search_exhausted for the defining test."""
    witnesses = None
    if kind == OrderKind.loewner:
        if not (is_hermitian(A, tol) and is_hermitian(B, tol)):
            raise ValueError("loewner order requires a Hermitian pair")
        D = B - A
        Dh = (D + D.conj().T) / 2.0
        neg = 0.0
        if D.shape[0]:
            neg = max(0.0, -float(np.linalg.eigvalsh(Dh).min()))
        bound = tol.eq_abs + tol.eq_rel * fnorm(D)
        routes = (Route("psd_difference", neg <= bound, neg),)
        return routes, routes[0].verdict, None, False

    if kind == OrderKind.space:
        routes = _space_routes(A, B, tol)
        return routes, all(r.verdict for r in routes), None, False

    if kind == OrderKind.left_star:
        routes = (
            _eq_route("core_equality", A.conj().T @ A, A.conj().T @ B, tol),
            _incl_route("range_inclusion", A, B, tol),
        )
        holds = all(r.verdict for r in routes)
        if holds:
            witnesses = Witnesses(q_tilde=proj_range(A, tol))
        return routes, holds, witnesses, False

    if kind == OrderKind.right_star:
        routes = (
            _eq_route("core_equality", A @ A.conj().T, B @ A.conj().T, tol),
            _incl_route("adjoint_range_inclusion", A.conj().T, B.conj().T, tol),
        )
        holds = all(r.verdict for r in routes)
        if holds:
            witnesses = Witnesses(q=proj_range(A.conj().T, tol))
        return routes, holds, witnesses, False

    if kind == OrderKind.star:
        routes = (
            _eq_route("left_core_equality", A.conj().T @ A, A.conj().T @ B, tol),
            _eq_route("right_core_equality", A @ A.conj().T, B @ A.conj().T, tol),
        )
        holds = all(r.verdict for r in routes)
        if holds:
            witnesses = Witnesses(
                q_tilde=proj_range(A, tol),
                q=proj_range(A.conj().T, tol),
                inner_inverse=pinv(A, tol),
            )
        return routes, holds, witnesses, False

    if kind == OrderKind.minus:
        Bp = pinv(B, tol)
        q_tilde = A @ Bp
        q = Bp @ A
        routes = (
            _eq_route("q_tilde_idempotent", q_tilde @ q_tilde, q_tilde, tol),
            _eq_route("q_idempotent", q @ q, q, tol),
            _eq_route("left_absorption", q_tilde @ B, A, tol),
            _eq_route("right_absorption", B @ q, A, tol),
        )
        holds = all(r.verdict for r in routes)
        if holds:
            _, x, y = _minus_block_params(A, B, tol)
            witnesses = Witnesses(
                q_tilde=q_tilde,
                q=q,
                x=x,
                y=y,
                inner_inverse=witness_to_inner_inverse(A, q_tilde, q, tol),
            )
        return routes, holds, witnesses, False

    if kind == OrderKind.diamond:
        routes = (
            _incl_route("range_inclusion", A, B, tol),
            _incl_route("adjoint_range_inclusion", A.conj().T, B.conj().T, tol),
            _eq_route(
                "core_equality", A @ A.conj().T @ A, A @ B.conj().T @ A, tol
            ),
        )
        holds = all(r.verdict for r in routes)
        if holds:
            witnesses = Witnesses(
                q_tilde=proj_range(A, tol),
                q=proj_range(A.conj().T, tol),
                inner_inverse=pinv(A, tol),
            )
        return routes, holds, witnesses, False

    if kind == OrderKind.plus:
        space = _space_routes(A, B, tol)
        if not all(r.verdict for r in space):
            routes = space + (Route("sandwich_witness", False, np.inf),)
            return routes, False, None, False
        found = find_sandwich_witness(A, B, tol, cfg)
        if found is None:
            routes = space + (Route("sandwich_witness", False, np.inf),)
            return routes, False, None, True
        routes = space + (Route("sandwich_witness", True, found.residual),)
        witnesses = Witnesses(
            q_tilde=found.q_tilde,
            q=found.q,
            x=found.x,
            y=found.y,
            inner_inverse=witness_to_inner_inverse(A, found.q_tilde, found.q, tol),
        )
        return routes, True, witnesses, False

    raise ValueError(f"unknown order kind: {kind!r}")


def check(
    kind: OrderKind | str,
    A,
    B,
    tol: Tolerance = DEFAULT_TOL,
    cfg: Optional[PlusSearchConfig] = None,
) -> OrderReport:
    """Decide one order relation by its definitional route."""
    kind = OrderKind(kind)
    A, B = _validate_pair(A, B)
    routes, holds, witnesses, exhausted = _definitional(kind, A, B, tol, cfg)
    return OrderReport(
        kind=kind,
        holds=holds,
        routes=routes,
        witnesses=witnesses,
        search_exhausted=exhausted,
    )


def star_routes(A, B, tol: Tolerance = DEFAULT_TOL) -> OrderReport:
    """Five equivalent characterizations of the star order."""
    A, B = _validate_pair(A, B)
    routes = []
    routes.append(
        _merge(
            "definition",
            _eq_route("left", A.conj().T @ A, A.conj().T @ B, tol),
            _eq_route("right", A @ A.conj().T, B @ A.conj().T, tol),
        )
    )
    P_A = proj_range(A, tol)
    P_Astar = proj_range(A.conj().T, tol)
    routes.append(
        _merge(
            "projection_absorption",
            _eq_route("left", P_A @ B, A, tol),
            _eq_route("right", B @ P_Astar, A, tol),
        )
    )
    d = block_decompose(A, B, tol)
    routes.append(
        _merge(
            "block_form",
            _eq_route("b11", d.b11, d.a, tol),
            _eq_route("b12", d.b12, np.zeros_like(d.b12), tol),
            _eq_route("b21", d.b21, np.zeros_like(d.b21), tol),
        )
    )
    C = B - A
    scale = max(spectral_norm(A), spectral_norm(B))
    rank_gap = abs(
        matrix_rank(B, tol, scale=scale)
        - matrix_rank(A, tol, scale=scale)
        - matrix_rank(C, tol, scale=scale)
    )
    routes.append(
        _merge(
            "orthogonal_rank_split",
            Route("rank_additivity", rank_gap == 0, float(rank_gap)),
            _eq_route("ranges_orthogonal", A.conj().T @ C, np.zeros((A.shape[1],) * 2), tol),
            _eq_route("adjoint_ranges_orthogonal", A @ C.conj().T, np.zeros((A.shape[0],) * 2), tol),
        )
    )
    Bp = pinv(B, tol)
    routes.append(
        _merge(
            "dagger_projections",
            _space_ok(A, B, tol),
            _is_orth_proj(Bp @ A, tol),
            _is_orth_proj((A @ Bp).conj().T, tol),
        )
    )
    holds = routes[0].verdict
    witnesses = None
    if holds:
        witnesses = Witnesses(
            q_tilde=P_A, q=P_Astar, inner_inverse=pinv(A, tol)
        )
    return OrderReport(OrderKind.star, holds, tuple(routes), witnesses)


def minus_routes(A, B, tol: Tolerance = DEFAULT_TOL) -> OrderReport:
    """Six equivalent characterizations of the minus order."""
    A, B = _validate_pair(A, B)
    Bp = pinv(B, tol)
    q_tilde = A @ Bp
    q = Bp @ A
    routes = []
    routes.append(
        _merge(
            "definitional_witness",
            _eq_route("q_tilde_idempotent", q_tilde @ q_tilde, q_tilde, tol),
            _eq_route("q_idempotent", q @ q, q, tol),
            _eq_route("left_absorption", q_tilde @ B, A, tol),
            _eq_route("right_absorption", B @ q, A, tol),
        )
    )
    d, x, y = _minus_block_params(A, B, tol)
    routes.append(
        _merge(
            "block_solve",
            _eq_route("b21_solvable", d.b22 @ x, d.b21, tol),
            _eq_route("b12_solvable", y @ d.b22, d.b12, tol),
            _eq_route("b11_matches", d.b11, d.a + y @ d.b22 @ x, tol),
        )
    )
    pair = SubspacePair(s_basis=d.basis_rowA, t_basis=d.basis_colA)
    comp, _ = complementability(B, pair, tol)
    if comp:
        sh = shorted_operator(B, pair, tol)
        routes.append(_eq_route("shorted_equals", sh.shorted, A, tol))
    else:
        routes.append(Route("shorted_equals", False, np.inf))
    routes.append(
        _merge(
            "common_inner_inverse",
            _space_ok(A, B, tol),
            _eq_route("absorption", A @ Bp @ A, A, tol),
        )
    )
    C = B - A
    scale = max(spectral_norm(A), spectral_norm(B))
    rank_gap = abs(
        matrix_rank(B, tol, scale=scale)
        - matrix_rank(A, tol, scale=scale)
        - matrix_rank(C, tol, scale=scale)
    )
    routes.append(Route("rank_additivity", rank_gap == 0, float(rank_gap)))
    routes.append(
        _merge(
            "dagger_projection",
            _space_ok(A, B, tol),
            _eq_route("idempotent", q @ q, q, tol),
        )
    )
    holds = routes[0].verdict
    witnesses = None
    if holds:
        witnesses = Witnesses(
            q_tilde=q_tilde,
            q=q,
            x=x,
            y=y,
            inner_inverse=witness_to_inner_inverse(A, q_tilde, q, tol),
        )
    return OrderReport(OrderKind.minus, holds, tuple(routes), witnesses)


def diamond_routes(A, B, tol: Tolerance = DEFAULT_TOL) -> OrderReport:
    """Six equivalent characterizations of the diamond order."""
    A, B = _validate_pair(A, B)
    incl = _incl_route("range_inclusion", A, B, tol)
    incl_adj = _incl_route("adjoint_range_inclusion", A.conj().T, B.conj().T, tol)
    routes = []
    routes.append(
        _merge(
            "definition",
            incl,
            incl_adj,
            _eq_route("core", A @ A.conj().T @ A, A @ B.conj().T @ A, tol),
        )
    )
    P_A = proj_range(A, tol)
    P_Astar = proj_range(A.conj().T, tol)
    routes.append(
        _merge(
            "projection_sandwich",
            incl,
            incl_adj,
            _eq_route("sandwich", P_A @ B @ P_Astar, A, tol),
        )
    )
    d = block_decompose(A, B, tol)
    b21_amb = d.assemble(None, None, d.b21, None)
    b12_amb = d.assemble(None, d.b12, None, None)
    routes.append(
        _merge(
            "block_form",
            _eq_route("b11", d.b11, d.a, tol),
            _incl_route("b21_in_range", b21_amb, B, tol),
            _incl_route(
                "b12_in_adjoint_range", b12_amb.conj().T, B.conj().T, tol
            ),
        )
    )
    Ap = pinv(A, tol)
    Bp = pinv(B, tol)
    routes.append(
        _merge(
            "dagger_sandwich",
            _space_ok(A, B, tol),
            _eq_route("sandwich", Ap @ B @ Ap, Ap, tol),
        )
    )
    dagger_minus = minus_routes(Ap, Bp, tol)
    routes.append(
        Route(
            "dagger_minus",
            dagger_minus.holds,
            dagger_minus.routes[0].residual,
        )
    )
    scale_p = max(spectral_norm(Ap), spectral_norm(Bp))
    rank_gap = abs(
        matrix_rank(B, tol)
        - matrix_rank(A, tol)
        - matrix_rank(Bp - Ap, tol, scale=scale_p)
    )
    routes.append(Route("dagger_rank_additivity", rank_gap == 0, float(rank_gap)))
    holds = routes[0].verdict
    witnesses = None
    if holds:
        witnesses = Witnesses(q_tilde=P_A, q=P_Astar, inner_inverse=Ap)
    return OrderReport(OrderKind.diamond, holds, tuple(routes), witnesses)


def equation_routes(A, B, tol: Tolerance = DEFAULT_TOL) -> OrderReport:
    """Equation-level criteria for left-star, minus, and the diamond core.

    The three routes test different relations, so `kind` is None and
    `holds` is simply their conjunction; callers compare each route to the
    matching `check` verdict.
    """
    A, B = _validate_pair(A, B)
    C = B - A
    routes = []
    routes.append(
        _merge(
            "left_star_equation",
            _incl_route("difference_in_range", C, B, tol),
            _eq_route("orthogonal", A.conj().T @ C, np.zeros((A.shape[1],) * 2), tol),
        )
    )
    Bp = pinv(B, tol)
    X = A @ Bp
    Y = Bp @ A
    routes.append(
        _merge(
            "minus_equations",
            _eq_route("A==XB", X @ B, A, tol),
            _eq_route("A==BY", B @ Y, A, tol),
            _eq_route("A==XA", X @ A, A, tol),
        )
    )
    routes.append(
        _eq_route(
            "core_orthogonality",
            A @ C.conj().T @ A,
            np.zeros_like(A),
            tol,
        )
    )
    return OrderReport(None, all(r.verdict for r in routes), tuple(routes))


_CHAIN_EDGES = (
    (OrderKind.star, OrderKind.minus),
    (OrderKind.minus, OrderKind.plus),
    (OrderKind.plus, OrderKind.space),
    (OrderKind.star, OrderKind.diamond),
    (OrderKind.diamond, OrderKind.plus),
)


def implication_chain(
    A,
    B,
    tol: Tolerance = DEFAULT_TOL,
    cfg: Optional[PlusSearchConfig] = None,
) -> list[tuple[OrderKind, bool]]:
    """Verdicts for every kind, with the order-hierarchy self-check.

    loewner is included only for Hermitian pairs. Raises ChainViolation if
    star => minus => plus => space or star => diamond => plus breaks; with
    the deterministic ALS starts this signals a genuine bug or a tolerance
    misconfiguration, not search noise.
    """
    A, B = _validate_pair(A, B)
    verdicts: dict[OrderKind, bool] = {}
    results: list[tuple[OrderKind, bool]] = []
    for kind in OrderKind:
        if kind == OrderKind.loewner and not (
            is_hermitian(A, tol) and is_hermitian(B, tol)
        ):
            continue
        rep = check(kind, A, B, tol, cfg)
        verdicts[kind] = rep.holds
        results.append((kind, rep.holds))
    for lo, hi in _CHAIN_EDGES:
        if verdicts.get(lo) and not verdicts.get(hi):
            raise ChainViolation(f"{lo.value} holds but {hi.value} does not")
    return results
