import numpy as np
import pytest

from app.core.errors import (
    AsymmetricX,
    BadResidue,
    InvalidConferencePair,
    UnsupportedOrder,
    WrongResidue,
)
from app.models.matrices import ConferencePair, DOptimalPair
from app.models.schemas import FirstRow, TripleClass
from app.services.constructions import (
    conference_matrix,
    conference_propus,
    d_optimal_propus,
    max_det_propus,
    max_det_row,
    obtain_conference_pair,
    obtain_doptimal_pair,
    searched_propus,
    special_propus,
    three_equal_propus,
    turyn_pair,
    turyn_propus,
    williamson_propus_from_q,
)
from app.services.matrix_core import check_properties, circulant, gram, row_matrix
from app.services.propus import classify_triple
from tests.conftest import assert_symmetric_hadamard


def test_turyn_pair_of_order_three():
    pair = turyn_pair(3)
    assert [r.to_string() for r in pair.rows] == ["0++", "-++"]
    assert turyn_pair(3, source="catalog").rows == pair.rows


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_searched_turyn_pairs_satisfy_gram_identity(n):
    pair = turyn_pair(n)
    assert pair.X.is_symmetric() and pair.Y.is_symmetric()
    assert not pair.X.entries.diagonal().any()
    assert np.array_equal(gram(pair.X) + gram(pair.Y), (2 * n - 1) * np.eye(n, dtype=np.int64))


@pytest.mark.parametrize("q", [5, 9, 13, 17, 25, 29])
def test_williamson_route(q):
    t, H = williamson_propus_from_q(q)
    assert classify_triple(t) == TripleClass.propus
    assert_symmetric_hadamard(H, 2 * (q + 1))


@pytest.mark.parametrize("q", [3, 7, 15, 21])
def test_williamson_route_rejects_bad_q(q):
    with pytest.raises(BadResidue):
        williamson_propus_from_q(q)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 13])
def test_conference_route_plain(n):
    pair = obtain_conference_pair(n)
    assert check_properties(conference_matrix(pair)).is_conference
    assert_symmetric_hadamard(conference_propus(pair, "plain"), 8 * n)


@pytest.mark.parametrize("variant", ["back_circulant", "circulant"])
@pytest.mark.parametrize("n", [3, 13])
def test_conference_route_block_variants(n, variant):
    assert_symmetric_hadamard(conference_propus(obtain_conference_pair(n), variant), 4 * n)


def test_conference_route_rejects_bad_pair():
    pair = ConferencePair(row_matrix("0++"), row_matrix("+++"))
    with pytest.raises(InvalidConferencePair):
        conference_propus(pair)


@pytest.mark.parametrize("n", [3, 7])
def test_doptimal_route(n):
    assert_symmetric_hadamard(d_optimal_propus(obtain_doptimal_pair(n)), 4 * n)


def test_doptimal_route_needs_prime_three_mod_four():
    pair = DOptimalPair(row_matrix("+++++"), row_matrix("+++++"))
    with pytest.raises(WrongResidue):
        d_optimal_propus(pair)


def test_doptimal_route_needs_symmetric_x():
    pair = DOptimalPair(row_matrix("++-"), row_matrix("++-"))
    with pytest.raises(AsymmetricX):
        d_optimal_propus(pair)


@pytest.mark.parametrize("n", [3, 7])
def test_three_equal(n):
    assert_symmetric_hadamard(three_equal_propus(n), 4 * n)


@pytest.mark.parametrize("n", [1, 5, 11])
def test_three_equal_is_finite(n):
    with pytest.raises(UnsupportedOrder):
        three_equal_propus(n)


@pytest.mark.parametrize("n", [3, 5])
def test_special_triples(n):
    assert_symmetric_hadamard(special_propus(n), 4 * n)


@pytest.mark.parametrize("n", [1, 2, 4])
def test_searched_propus_covers_small_even_orders(n):
    t, H = searched_propus(n)
    assert classify_triple(t) == TripleClass.propus
    assert_symmetric_hadamard(H, 4 * n)


@pytest.mark.parametrize("q", [5, 13])
def test_max_det_row_has_the_required_gram(q):
    Y = circulant(FirstRow.of(max_det_row(q)))
    expected = (q - 1) * np.eye(q, dtype=np.int64) + 1
    assert np.array_equal(gram(Y), expected)


def test_max_det_row_is_symmetric_at_five_but_not_at_thirteen():
    assert max_det_row(5) == (-1, 1, 1, 1, 1)
    assert not FirstRow.of(max_det_row(13)).symmetric


@pytest.mark.parametrize("q", [5, 13])
def test_max_det_route(q):
    assert_symmetric_hadamard(max_det_propus(q), 4 * q)


@pytest.mark.parametrize("q", [7, 9, 17])
def test_max_det_route_rejects_bad_q(q):
    with pytest.raises((BadResidue, UnsupportedOrder)):
        max_det_propus(q)


def test_degenerate_turyn_pair_gives_order_four():
    t, H = turyn_propus(turyn_pair(1, source="catalog"))
    assert classify_triple(t) == TripleClass.propus
    assert_symmetric_hadamard(H, 4)
