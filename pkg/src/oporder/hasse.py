"""Order relation over a finite family of matrices and its Hasse diagram."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from .core import DEFAULT_TOL, ShapeError, Tolerance, as_matrix
from .orders import OrderKind, PlusSearchConfig, check

__all__ = [
    "Edge",
    "HasseGraph",
    "AntisymmetryError",
    "build_hasse",
    "transitive_closure",
    "transitive_reduction",
    "to_dot",
]


class AntisymmetryError(ValueError):
    """Two distinct nodes relate in both directions: tolerance misconfiguration."""


@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    certified: bool = True


@dataclass(frozen=True)
class HasseGraph:
    """Relation matrix plus its cover edges for one order kind.

    adjacency[i, j] is the verdict of node i below node j; covers hold the
    transitive reduction. Duplicate input matrices are merged, so node_ids
    lists one representative label per distinct matrix.
    """

    node_ids: Tuple[str, ...]
    adjacency: np.ndarray
    covers: Tuple[Edge, ...]
    kind: OrderKind


def transitive_closure(adjacency: np.ndarray) -> np.ndarray:
    """Boolean reachability closure (Warshall)."""
    C = np.array(adjacency, dtype=bool, copy=True)
    n = C.shape[0]
    for k in range(n):
        C |= np.outer(C[:, k], C[k, :])
    return C


def transitive_reduction(adjacency: np.ndarray) -> np.ndarray:
    """Cover relation of a finite partial order given as a boolean matrix.

    Drops loops, then removes every edge implied by a two-step path through
    the strict relation.
    """
    A = np.array(adjacency, dtype=bool, copy=True)
    np.fill_diagonal(A, False)
    implied = (A @ A) & A
    return A & ~implied


def build_hasse(
    matrices: Sequence[tuple[str, np.ndarray]],
    kind,
    tol: Tolerance = DEFAULT_TOL,
    cfg: Optional[PlusSearchConfig] = None,
) -> HasseGraph:
    """Pairwise order checks over labelled matrices, merged and reduced.

    Matrices equal within tolerance collapse onto the first label seen.
    Raises AntisymmetryError when two distinct nodes compare both ways.
    """
    kind = OrderKind(kind)
    labels = [lab for lab, _ in matrices]
    if len(set(labels)) != len(labels):
        raise ValueError("labels must be unique")
    mats = [as_matrix(M) for _, M in matrices]
    if mats:
        shape = mats[0].shape
        for lab, M in zip(labels, mats):
            if M.shape != shape:
                raise ShapeError(f"node {lab!r} has shape {M.shape}, expected {shape}")
    reps: list[tuple[str, np.ndarray]] = []
    for lab, M in zip(labels, mats):
        if not any(tol.eq(M, R) for _, R in reps):
            reps.append((lab, M))
    n = len(reps)
    adjacency = np.zeros((n, n), dtype=bool)
    for i, (_, Mi) in enumerate(reps):
        for j, (_, Mj) in enumerate(reps):
            if i == j:
                adjacency[i, j] = True
                continue
            adjacency[i, j] = check(kind, Mi, Mj, tol, cfg).holds
    for i in range(n):
        for j in range(i + 1, n):
            if adjacency[i, j] and adjacency[j, i]:
                raise AntisymmetryError(
                    f"nodes {reps[i][0]!r} and {reps[j][0]!r} relate both ways"
                )
    covers_mat = transitive_reduction(adjacency)
    node_ids = tuple(lab for lab, _ in reps)
    covers = tuple(
        Edge(src=node_ids[i], dst=node_ids[j])
        for i in range(n)
        for j in range(n)
        if covers_mat[i, j]
    )
    return HasseGraph(node_ids=node_ids, adjacency=adjacency, covers=covers, kind=kind)


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: HasseGraph) -> str:
    """Deterministic DOT text: sorted nodes, sorted edges, dashed when uncertified."""
    lines = ["digraph {", f"  order={g.kind.value};"]
    for lab in sorted(g.node_ids):
        lines.append(f"  {_quote(lab)};")
    for e in sorted(g.covers, key=lambda e: (e.src, e.dst)):
        style = " [style=dashed]" if not e.certified else ""
        lines.append(f"  {_quote(e.src)} -> {_quote(e.dst)}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
