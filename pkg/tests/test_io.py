"""JSON matrix files: exact round trips and strict validation."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oporder.io import (
    MatrixFileError,
    dumps_matrix,
    loads_matrix,
    read_matrix,
    write_matrix,
)


def test_round_trip_is_byte_stable_and_exact():
    rng = np.random.default_rng(0)
    M = rng.standard_normal((3, 4)) + 1j * rng.standard_normal((3, 4))
    text = dumps_matrix(M)
    back = loads_matrix(text)
    assert back.shape == M.shape and back.dtype == complex
    assert np.array_equal(back, M)  # bit-exact, not approximate
    assert dumps_matrix(back) == text


def test_negative_zero_normalized():
    M = np.array([[-0.0 + 0.0j]])
    text = dumps_matrix(M)
    assert "-0" not in text
    assert np.array_equal(loads_matrix(text), np.array([[0.0 + 0.0j]]))


def test_extreme_values_round_trip():
    M = np.array(
        [[5e-324 + 1j * 1.7976931348623157e308, np.pi - 1j / 3]]
    )
    back = loads_matrix(dumps_matrix(M))
    assert np.array_equal(back, M)


def test_empty_shapes():
    for shape in [(0, 0), (0, 3), (3, 0)]:
        M = np.zeros(shape, dtype=complex)
        back = loads_matrix(dumps_matrix(M))
        assert back.shape == shape


def test_real_input_upcast():
    back = loads_matrix(dumps_matrix(np.eye(2)))
    assert back.dtype == complex
    assert np.array_equal(back, np.eye(2))


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"rows": 1, "cols": 1}',
        '{"rows": -1, "cols": 1, "data": []}',
        '{"rows": true, "cols": 1, "data": [[[1, 0]]]}',
        '{"rows": 1.0, "cols": 1, "data": [[[1, 0]]]}',
        '{"rows": 2, "cols": 1, "data": [[[1, 0]]]}',
        '{"rows": 1, "cols": 2, "data": [[[1, 0]]]}',
        '{"rows": 1, "cols": 1, "data": [[[1, 0, 0]]]}',
        '{"rows": 1, "cols": 1, "data": [[[1, true]]]}',
        '{"rows": 1, "cols": 1, "data": [[["1", 0]]]}',
        '{"rows": 1, "cols": 1, "data": [[[1, Infinity]]]}',
        '{"rows": 1, "cols": 1, "data": [[[NaN, 0]]]}',
    ],
)
def test_malformed_inputs_rejected(text):
    with pytest.raises(MatrixFileError):
        loads_matrix(text)


def test_file_round_trip(tmp_path):
    M = np.array([[1.5 - 2.5j, 0.0], [3.0 + 1.0j, -4.25]])
    path = tmp_path / "m.json"
    write_matrix(path, M)
    assert np.array_equal(read_matrix(path), M)


def test_read_missing_file_raises_matrix_file_error(tmp_path):
    with pytest.raises(MatrixFileError, match="cannot read"):
        read_matrix(tmp_path / "absent.json")


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.floats(allow_nan=False, allow_infinity=False, width=64),
            st.floats(allow_nan=False, allow_infinity=False, width=64),
        ),
        min_size=1,
        max_size=6,
    )
)
def test_any_finite_doubles_round_trip(cells):
    M = np.array([[complex(re, im) for re, im in cells]])
    back = loads_matrix(dumps_matrix(M))
    # -0.0 collapses to 0.0 by design; compare after the same normalization
    expect = M + 0.0
    assert np.array_equal(back, expect)
