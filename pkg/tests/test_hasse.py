"""Hasse diagrams: covers, dedupe, antisymmetry guard, DOT rendering."""

import numpy as np
import pytest

from oporder.core import ShapeError
from oporder.hasse import (
    AntisymmetryError,
    Edge,
    HasseGraph,
    build_hasse,
    to_dot,
    transitive_closure,
    transitive_reduction,
)
from oporder.orders import OrderKind

RT2 = np.sqrt(2.0)
F = np.array([[RT2 / 2, 0.0], [RT2 / 2, 0.0]])
G = np.array([[0.0, 1.0], [1.0, 0.0]])


def test_chain_covers_skip_transitive_edge():
    nodes = [
        ("zero", np.zeros((2, 2))),
        ("p", np.diag([1.0, 0.0])),
        ("id", np.eye(2)),
    ]
    g = build_hasse(nodes, "star")
    assert g.node_ids == ("zero", "p", "id")
    assert g.adjacency[0, 2]  # zero below id in the full relation
    assert set(g.covers) == {Edge("zero", "p"), Edge("p", "id")}
    assert all(e.certified for e in g.covers)


def test_plus_edge_present_diamond_edge_absent():
    nodes = [("f", F), ("g", G)]
    assert build_hasse(nodes, "plus").covers == (Edge("f", "g"),)
    assert build_hasse(nodes, "diamond").covers == ()


def test_duplicates_collapse_onto_first_label():
    A = np.diag([1.0, 0.0])
    nodes = [("a", A), ("a_copy", A.copy()), ("id", np.eye(2))]
    g = build_hasse(nodes, "minus")
    assert g.node_ids == ("a", "id")
    assert g.covers == (Edge("a", "id"),)


def test_antisymmetry_error_on_indistinguishable_pair():
    # the star residuals of both directions sit inside the equality budget
    # while the matrices differ by more than the merge bound
    nodes = [("a", np.diag([1.0, 0.0])), ("b", np.diag([1.0, 1e-5]))]
    with pytest.raises(AntisymmetryError, match="'a' and 'b'"):
        build_hasse(nodes, "star")


def test_label_and_shape_validation():
    A = np.eye(2)
    with pytest.raises(ValueError, match="unique"):
        build_hasse([("a", A), ("a", A)], "star")
    with pytest.raises(ShapeError, match="'b'"):
        build_hasse([("a", A), ("b", np.eye(3))], "star")


def test_transitive_closure_oracle():
    A = np.zeros((4, 4), dtype=bool)
    A[0, 1] = A[1, 2] = A[2, 3] = True
    C = transitive_closure(A)
    assert C[0, 3] and C[0, 2] and C[1, 3]
    assert not C[3, 0] and not C[2, 0]
    assert np.array_equal(transitive_closure(C), C)


def test_transitive_reduction_oracle():
    A = np.zeros((3, 3), dtype=bool)
    A[0, 1] = A[1, 2] = A[0, 2] = True
    np.fill_diagonal(A, True)
    R = transitive_reduction(A)
    expect = np.zeros((3, 3), dtype=bool)
    expect[0, 1] = expect[1, 2] = True
    assert np.array_equal(R, expect)


def test_to_dot_empty_graph():
    g = build_hasse([], "star")
    assert to_dot(g) == "digraph {\n  order=star;\n}\n"


def test_to_dot_golden_chain():
    nodes = [
        ("zero", np.zeros((2, 2))),
        ("p", np.diag([1.0, 0.0])),
        ("id", np.eye(2)),
    ]
    dot = to_dot(build_hasse(nodes, "star"))
    assert dot == (
        "digraph {\n"
        "  order=star;\n"
        '  "id";\n'
        '  "p";\n'
        '  "zero";\n'
        '  "p" -> "id";\n'
        '  "zero" -> "p";\n'
        "}\n"
    )


def test_to_dot_escapes_and_dashed_edges():
    g = HasseGraph(
        node_ids=('sa"y', "b\\c"),
        adjacency=np.eye(2, dtype=bool),
        covers=(Edge('sa"y', "b\\c", certified=False),),
        kind=OrderKind.minus,
    )
    dot = to_dot(g)
    assert '"sa\\"y" -> "b\\\\c" [style=dashed];' in dot
    assert "order=minus;" in dot
