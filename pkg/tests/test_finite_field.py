import numpy as np
import pytest

from app.core.errors import FieldError
from app.services.finite_field import (
    build_field,
    check_field_axioms,
    field_for_order,
    paley_core,
    quadratic_character,
)

ODD_ORDERS = [3, 5, 7, 9, 11, 13, 25, 27, 49]


def test_gf3_character_and_core():
    F = build_field(3)
    assert [quadratic_character(F, x) for x in range(3)] == [0, 1, -1]
    assert paley_core(F).entries[0].tolist() == [0, 1, -1]


def test_gf5_core_first_row():
    assert paley_core(build_field(5)).entries[0].tolist() == [0, 1, -1, -1, 1]


@pytest.mark.parametrize("q", ODD_ORDERS)
def test_paley_core_identities(q):
    Q = paley_core(field_for_order(q)).as_int()
    assert np.array_equal(Q @ Q.T, q * np.eye(q, dtype=np.int64) - 1)
    assert not Q.diagonal().any()
    assert not Q.sum(axis=1).any()
    if q % 4 == 1:
        assert np.array_equal(Q, Q.T)
    else:
        assert np.array_equal(Q, -Q.T)


@pytest.mark.parametrize("q", [2, 3, 4, 8, 9, 16, 25, 27, 49, 81, 121])
def test_field_axioms(q):
    assert check_field_axioms(field_for_order(q))


@pytest.mark.parametrize("q", [4, 8, 9, 16, 27])
def test_extension_fields_have_primitive_elements(q):
    F = field_for_order(q)
    g = F.primitive_element()
    assert F.multiplicative_order(g) == q - 1


def test_character_counts_squares():
    F = build_field(3, 2)
    chi = F.chi.tolist()
    assert chi[0] == 0
    assert chi.count(1) == chi.count(-1) == 4


def test_element_indexing_matches_base_p_digits():
    F = build_field(3, 2)
    # (1 + x) + (2 + 2x) = 0 in GF(9)
    assert F.add[1 + 3, 2 + 2 * 3] == 0
    assert F.sub(5, 5) == 0


@pytest.mark.parametrize("p,k", [(4, 1), (1, 1), (9, 2), (3, 0)])
def test_bad_field_parameters(p, k):
    with pytest.raises(FieldError):
        build_field(p, k)


def test_field_above_max_order():
    with pytest.raises(FieldError):
        build_field(10007)


def test_even_field_has_no_paley_core():
    with pytest.raises(FieldError):
        paley_core(build_field(2, 2))


def test_character_index_out_of_range():
    with pytest.raises(FieldError):
        quadratic_character(build_field(7), 7)
