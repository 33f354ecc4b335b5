import numpy as np
import pytest
from pydantic import ValidationError

from app.models.matrices import SignMatrix
from app.models.schemas import FirstRow
from app.services.matrix_core import (
    anti_identity,
    check_properties,
    circulant,
    gram,
    identity,
    is_circulant,
    paf,
    row_matrix,
)

ROWS = ["++-", "0++", "+--+-", "-+--++--+", "0+---+--+---+", "+-0-+0"]


def test_circulant_type1_layout():
    M = circulant(FirstRow.of((1, 1, -1)))
    assert M.entries.tolist() == [[1, 1, -1], [-1, 1, 1], [1, -1, 1]]


def test_circulant_type2_layout():
    M = circulant(FirstRow.of((1, 1, -1), "type2"))
    assert M.entries.tolist() == [[1, 1, -1], [1, -1, 1], [-1, 1, 1]]
    assert M.is_symmetric()


@pytest.mark.parametrize("text", ROWS)
def test_back_circulant_is_reversed_circulant_times_r(text):
    row = FirstRow.from_string(text)
    n = row.n
    type2 = circulant(FirstRow.from_string(text, "type2"))
    reversed_row = FirstRow.from_string(text[::-1])
    assert np.array_equal(type2.as_int(), circulant(reversed_row) @ anti_identity(n))


@pytest.mark.parametrize("text", ROWS)
def test_r_transposes_circulants(text):
    M = row_matrix(text)
    R = anti_identity(M.order).as_int()
    assert np.array_equal(R @ M.as_int() @ R, M.as_int().T)
    MR = M @ R
    assert np.array_equal(MR, MR.T)


@pytest.mark.parametrize("text", ROWS)
def test_gram_first_row_is_paf(text):
    row = FirstRow.from_string(text)
    g = gram(circulant(row))
    assert [int(v) for v in g[0]] == [paf(row, s) for s in range(row.n)]


def test_paf_shift_out_of_range():
    row = FirstRow.from_string("++-")
    with pytest.raises(ValueError):
        paf(row, 3)
    with pytest.raises(ValueError):
        paf(row, -1)


def test_first_row_rejects_empty_and_bad_entries():
    with pytest.raises(ValidationError):
        FirstRow(values=())
    with pytest.raises(ValidationError):
        FirstRow(values=(1, 2))


def test_first_row_symmetry_flag_is_checked():
    assert FirstRow.from_string("-++").symmetric
    assert not FirstRow.from_string("++-").symmetric
    with pytest.raises(ValidationError):
        FirstRow(values=(1, 1, -1), symmetric=True)


def test_sign_matrix_rejects_non_sign_entries():
    with pytest.raises(ValueError):
        SignMatrix([[1, 2], [1, 1]])
    with pytest.raises(ValueError):
        SignMatrix([[1, 1, 1]])


def test_sign_matrix_is_immutable():
    M = identity(3)
    with pytest.raises(ValueError):
        M.entries[0, 0] = -1


def test_is_circulant():
    assert is_circulant(row_matrix("+--+-"))
    assert not is_circulant(SignMatrix([[1, -1], [1, 1]]))


def test_properties_of_order_two_hadamard():
    report = check_properties(SignMatrix([[1, 1], [1, -1]]))
    assert report.is_pm1 and report.is_hadamard and report.is_symmetric
    assert not report.is_conference


def test_properties_of_skew_hadamard():
    report = check_properties(SignMatrix([[1, 1], [-1, 1]]))
    assert report.is_hadamard
    assert report.is_skew_plus_identity
    assert not report.is_symmetric


def test_skew_core_is_not_conference():
    report = check_properties(row_matrix("0+-"))
    assert not report.is_conference
    assert not report.is_hadamard
    assert not report.is_pm1


def test_two_circulant_conference_matrix():
    A, B = row_matrix("0++").as_int(), row_matrix("-++").as_int()
    M = SignMatrix(np.block([[A, B], [B, -A]]))
    report = check_properties(M)
    assert report.is_conference
    assert not report.is_hadamard
