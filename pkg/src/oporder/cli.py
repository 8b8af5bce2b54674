"""Command-line front end for matrix order checks on JSON matrix files.

Exit codes: 0 the relation holds / the command succeeded, 1 the relation
does not hold (or a generation constraint failed), 2 any error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Dict, List, Optional

import numpy as np

from .core import Tolerance, fnorm, polar
from .generators import (
    GenSpec,
    gen_diamond_psd_ambient,
    gen_left_star,
    gen_minus,
    gen_plus,
    gen_star,
    generate,
)
from .hasse import build_hasse, to_dot
from .io import MatrixFileError, dumps_matrix, read_matrix, write_matrix
from .means import geometric_mean, riccati_residual, riccati_solve
from .orders import (
    OrderKind,
    PlusSearchConfig,
    check,
    diamond_routes,
    minus_routes,
    star_routes,
)
from .shorted import SubspacePair, shorted_operator
from .verify import SUITES, run_all

__all__ = ["main"]

_ROUTE_SUITES = {
    OrderKind.star: star_routes,
    OrderKind.minus: minus_routes,
    OrderKind.diamond: diamond_routes,
}


def _parse_kind(token: str) -> OrderKind:
    name = token.strip().lower().replace("-", "_")
    if name == "diamond_psd":
        name = "diamond"
    try:
        return OrderKind(name)
    except ValueError:
        raise ValueError(
            f"unknown order kind {token!r}; choose from "
            + ", ".join(k.value for k in OrderKind)
        ) from None


def _tolerance(args: argparse.Namespace) -> Tolerance:
    return Tolerance(rank_rel=args.rank_rel, eq_abs=args.tol_abs, eq_rel=args.tol_rel)


def _plus_cfg(args: argparse.Namespace) -> PlusSearchConfig:
    return PlusSearchConfig(restarts=args.restarts, seed=args.seed)


def _matrix_obj(M) -> dict:
    # reuse the 17-digit file rendering so JSON output round-trips exactly
    return json.loads(dumps_matrix(M))


def _finite(x: float) -> Optional[float]:
    return float(x) if math.isfinite(x) else None


def _print_matrix(name: str, M) -> None:
    print(f"{name}:")
    print(np.array2string(np.asarray(M), precision=9, suppress_small=False))


def _emit(args: argparse.Namespace, text_fn, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        text_fn()


def _seed_range(text: str) -> range:
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
        if hi < lo:
            raise ValueError(f"empty seed range {text!r}")
        return range(lo, hi + 1)
    return range(int(text))


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args: argparse.Namespace) -> int:
    kind = _parse_kind(args.kind)
    tol = _tolerance(args)
    cfg = _plus_cfg(args)
    A = read_matrix(args.a)
    B = read_matrix(args.b)
    report = check(kind, A, B, tol, cfg)
    routes = report.routes
    if args.routes and kind in _ROUTE_SUITES:
        routes = _ROUTE_SUITES[kind](A, B, tol).routes
    payload: dict = {
        "kind": kind.value,
        "holds": report.holds,
        "search_exhausted": report.search_exhausted,
        "routes": [
            {"name": rt.name, "verdict": rt.verdict, "residual": _finite(rt.residual)}
            for rt in routes
        ],
    }
    wit = report.witnesses
    if args.witness and wit is not None:
        payload["witnesses"] = {
            name: _matrix_obj(M)
            for name, M in (
                ("q_tilde", wit.q_tilde),
                ("q", wit.q),
                ("x", wit.x),
                ("y", wit.y),
                ("inner_inverse", wit.inner_inverse),
            )
            if M is not None
        }

    def text() -> None:
        print(f"kind: {kind.value}")
        print(f"holds: {'true' if report.holds else 'false'}")
        if report.search_exhausted:
            print("search exhausted: no witness found within the restart budget")
        if args.routes:
            for rt in routes:
                verdict = "ok" if rt.verdict else "fail"
                print(f"route {rt.name}: {verdict} (residual {rt.residual:.3e})")
        if args.witness:
            if wit is None:
                print("witnesses: none")
            else:
                for name in ("q_tilde", "q", "x", "y", "inner_inverse"):
                    M = getattr(wit, name)
                    if M is not None:
                        _print_matrix(name, M)

    _emit(args, text, payload)
    return 0 if report.holds else 1


def _parse_params(items: List[str]) -> Dict[str, np.ndarray]:
    params: Dict[str, np.ndarray] = {}
    for item in items:
        key, sep, path = item.partition("=")
        if not sep or key not in ("x", "y", "w", "z", "b22"):
            raise ValueError(
                f"bad parameter {item!r}; expected x=FILE, y=FILE, w=FILE, "
                "z=FILE or b22=FILE"
            )
        params[key] = read_matrix(path)
    return params


def _generate_explicit(kind: OrderKind, A, params: Dict[str, np.ndarray], tol):
    def need(*keys: str) -> list:
        missing = [k for k in keys if k not in params]
        extra = [k for k in params if k not in keys]
        if missing or extra:
            raise ValueError(
                f"{kind.value} generation takes parameters {{{', '.join(keys)}}}"
            )
        return [params[k] for k in keys]

    if kind is OrderKind.star:
        (b22,) = need("b22")
        return gen_star(A, b22, tol)
    if kind is OrderKind.left_star:
        x, b22 = need("x", "b22")
        return gen_left_star(A, x, b22, tol)
    if kind is OrderKind.right_star:
        x, b22 = need("x", "b22")
        return gen_left_star(A.conj().T, x, b22, tol).conj().T
    if kind is OrderKind.minus:
        x, y, b22 = need("x", "y", "b22")
        return gen_minus(A, x, y, b22, tol)
    if kind is OrderKind.diamond:
        y, b22 = need("y", "b22")
        return gen_diamond_psd_ambient(A, y, b22, tol)
    if kind is OrderKind.plus:
        x, y, w, z, b22 = need("x", "y", "w", "z", "b22")
        return gen_plus(A, x, y, w, z, b22, tol)
    raise ValueError(f"explicit parameters are not supported for {kind.value}")


def cmd_generate(args: argparse.Namespace) -> int:
    kind = _parse_kind(args.kind)
    tol = _tolerance(args)
    cfg = _plus_cfg(args)
    A = read_matrix(args.a)
    if args.params:
        B = _generate_explicit(kind, A, _parse_params(args.params), tol)
        if B is None:
            print("error: parameters violate the range constraints", file=sys.stderr)
            return 1
    else:
        spec = GenSpec(kind=kind, seed=args.seed, b22_rank=args.b22_rank, scale=args.scale)
        B = generate(A, spec, tol)
    report = check(kind, A, B, tol, cfg)
    if not report.holds:
        raise RuntimeError(
            f"generated matrix failed the {kind.value} self-check"
        )
    write_matrix(args.out, B)
    payload = {"kind": kind.value, "out": args.out, "holds": True}
    _emit(args, lambda: print(f"wrote {args.out} ({kind.value} holds)"), payload)
    return 0


def cmd_shorted(args: argparse.Namespace) -> int:
    tol = _tolerance(args)
    A = read_matrix(args.a)
    S = read_matrix(args.s_basis)
    T = read_matrix(args.t_basis)
    res = shorted_operator(A, SubspacePair(s_basis=S, t_basis=T), tol)
    if args.out:
        write_matrix(args.out, res.shorted)
    payload = {
        "complementable": res.complementable,
        "weakly_complementable": res.weakly_complementable,
        "shorted": _matrix_obj(res.shorted),
    }

    def text() -> None:
        print(f"complementable: {'true' if res.complementable else 'false'}")
        print(
            "weakly complementable: "
            f"{'true' if res.weakly_complementable else 'false'}"
        )
        _print_matrix("shorted", res.shorted)

    _emit(args, text, payload)
    return 0


def cmd_geomean(args: argparse.Namespace) -> int:
    tol = _tolerance(args)
    B = read_matrix(args.b)
    C = read_matrix(args.c)
    M = geometric_mean(B, C, tol)
    if args.out:
        write_matrix(args.out, M)
    _emit(
        args,
        lambda: _print_matrix("geometric mean", M),
        {"mean": _matrix_obj(M)},
    )
    return 0


def cmd_riccati(args: argparse.Namespace) -> int:
    tol = _tolerance(args)
    B = read_matrix(args.b)
    T = read_matrix(args.t)
    C = read_matrix(args.c)
    X = riccati_solve(B, T, C, tol)
    res = riccati_residual(X, B, T, C, tol)
    if args.out:
        write_matrix(args.out, X)
    payload = {"solution": _matrix_obj(X), "residual": _finite(res)}

    def text() -> None:
        _print_matrix("solution", X)
        print(f"residual: {res:.3e}")

    _emit(args, text, payload)
    return 0


def cmd_polar(args: argparse.Namespace) -> int:
    tol = _tolerance(args)
    T = read_matrix(args.t)
    parts = polar(T, tol)
    if args.out_modulus:
        write_matrix(args.out_modulus, parts.modulus_star)
    if args.out_isometry:
        write_matrix(args.out_isometry, parts.isometry)
    err = fnorm(parts.modulus_star @ parts.isometry - T)
    payload = {
        "modulus_star": _matrix_obj(parts.modulus_star),
        "isometry": _matrix_obj(parts.isometry),
        "reconstruction_error": _finite(err),
    }

    def text() -> None:
        _print_matrix("modulus of the adjoint", parts.modulus_star)
        _print_matrix("partial isometry", parts.isometry)
        print(f"reconstruction error: {err:.3e}")

    _emit(args, text, payload)
    return 0


def cmd_hasse(args: argparse.Namespace) -> int:
    kind = _parse_kind(args.kind)
    tol = _tolerance(args)
    cfg = _plus_cfg(args)
    names = sorted(p for p in os.listdir(args.dir) if p.endswith(".json"))
    matrices = [
        (os.path.splitext(name)[0], read_matrix(os.path.join(args.dir, name)))
        for name in names
    ]
    graph = build_hasse(matrices, kind, tol, cfg)
    dot = to_dot(graph)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dot)
    else:
        sys.stdout.write(dot)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    tol = _tolerance(args)
    cfg = _plus_cfg(args)
    seeds = _seed_range(args.seeds)
    names = None if args.suite == "all" else [args.suite]
    results = run_all(seeds, tol, cfg, names)
    payload = {
        "passed": all(r.passed for r in results),
        "results": [
            {
                "name": r.name,
                "passed": r.passed,
                "checked": r.checked,
                "worst": _finite(r.worst),
                "seconds": round(r.seconds, 3),
                "failures": list(r.failures),
            }
            for r in results
        ],
    }

    def text() -> None:
        width = max(len(r.name) for r in results)
        print(f"{'suite':<{width}}  status  checked  worst      seconds")
        for r in results:
            status = "pass" if r.passed else "FAIL"
            print(
                f"{r.name:<{width}}  {status:<6}  {r.checked:>7d}  "
                f"{r.worst:9.2e}  {r.seconds:7.2f}"
            )
        for r in results:
            for msg in r.failures:
                print(f"{r.name}: {msg}")

    _emit(args, text, payload)
    return 0 if payload["passed"] else 1


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-abs", type=float, default=1e-9, help="absolute equality tolerance")
    common.add_argument("--tol-rel", type=float, default=1e-9, help="relative equality tolerance")
    common.add_argument("--rank-rel", type=float, default=1e-10, help="relative rank cutoff")
    common.add_argument("--restarts", type=int, default=32, help="sandwich search restarts")
    common.add_argument(
        "--seed",
        type=int,
        default=int(os.environ.get("OPORDER_SEED", "0")),
        help="random seed (default: OPORDER_SEED or 0)",
    )
    common.add_argument("--format", choices=("text", "json"), default="text", help="output format")

    parser = argparse.ArgumentParser(
        prog="oporder",
        description="Decide, construct and certify partial orders between complex matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide one order relation")
    p.add_argument("kind", help="order kind (loewner, space, left-star, right-star, star, minus, diamond, plus)")
    p.add_argument("a", help="matrix file for the lower matrix")
    p.add_argument("b", help="matrix file for the upper matrix")
    p.add_argument("--routes", action="store_true", help="print every characterization route")
    p.add_argument("--witness", action="store_true", help="print witness projections when available")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("generate", parents=[common], help="construct a matrix above A")
    p.add_argument("kind", help="order kind (star, minus, plus, diamond-psd, ...)")
    p.add_argument("a", help="matrix file for the lower matrix")
    p.add_argument("--out", required=True, help="output matrix file")
    p.add_argument("--b22-rank", type=int, default=None, help="rank of the free block")
    p.add_argument("--scale", type=float, default=1.0, help="scale of the random parameters")
    p.add_argument(
        "--params",
        nargs="+",
        metavar="KEY=FILE",
        help="explicit parameter files (keys: x, y, w, z, b22); "
        "right-star applies x and b22 to the adjoint",
    )
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("shorted", parents=[common], help="bilateral shorted operator")
    p.add_argument("a", help="matrix file")
    p.add_argument("s_basis", help="matrix file whose columns span the row-side subspace")
    p.add_argument("t_basis", help="matrix file whose columns span the column-side subspace")
    p.add_argument("--out", help="write the shorted operator here")
    p.set_defaults(func=cmd_shorted)

    p = sub.add_parser("geomean", parents=[common], help="geometric mean of two PSD matrices")
    p.add_argument("b", help="matrix file")
    p.add_argument("c", help="matrix file")
    p.add_argument("--out", help="write the mean here")
    p.set_defaults(func=cmd_geomean)

    p = sub.add_parser("riccati", parents=[common], help="solve X* B^(-1) X - T*X - XT = C")
    p.add_argument("b", help="matrix file, PSD invertible")
    p.add_argument("t", help="matrix file with BT Hermitian")
    p.add_argument("c", help="matrix file, PSD")
    p.add_argument("--out", help="write the solution here")
    p.set_defaults(func=cmd_riccati)

    p = sub.add_parser("polar", parents=[common], help="polar parts T = |T*| V")
    p.add_argument("t", help="matrix file")
    p.add_argument("--out-modulus", help="write |T*| here")
    p.add_argument("--out-isometry", help="write the partial isometry here")
    p.set_defaults(func=cmd_polar)

    p = sub.add_parser("hasse", parents=[common], help="Hasse diagram of a directory of matrices")
    p.add_argument("dir", help="directory of .json matrix files")
    p.add_argument("--kind", required=True, help="order kind")
    p.add_argument("--out", help="write DOT text here instead of stdout")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("verify", parents=[common], help="run the randomized property suites")
    p.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=sorted(SUITES) + ["all"],
        help="suite name (default: all)",
    )
    p.add_argument(
        "--seeds",
        default="0..19",
        help="seed range A..B (inclusive) or a count N for 0..N-1",
    )
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MatrixFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError, np.linalg.LinAlgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
