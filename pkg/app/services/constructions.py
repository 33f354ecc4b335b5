"""
Symmetric Hadamard matrices from propus triples.

Each construction assembles a triple from a known ingredient (Paley core,
Turyn pair, conference pair, D-optimal pair) and hands it to the P or GP
assembler, which verifies the result.
"""
from math import isqrt
from typing import Optional, Tuple

import galois
import numpy as np

from app.core.errors import (
    AsymmetricX,
    BadResidue,
    InvalidConferencePair,
    NotFound,
    NotHadamard,
    NotInCatalog,
    UnsupportedOrder,
    WrongResidue,
)
from app.core.logger import get_logger
from app.models.matrices import ConferencePair, DOptimalPair, PropusTriple, SignMatrix, TurynPair
from app.models.schemas import FirstRow, SearchSpec
from app.services.catalog import default_catalog
from app.services.finite_field import FieldTable, build_field, paley_core
from app.services.matrix_core import (
    check_properties,
    circulant,
    first_row_of,
    gram,
    identity,
    ones,
    paf,
)
from app.services.propus import assemble_gp, assemble_p, classify_triple
from app.services.search import (
    search_circulant_rows,
    search_propus,
    search_symmetric_rows,
    search_turyn_pair,
    search_two_circulant,
)

log = get_logger("constructions")

CONFERENCE_VARIANTS = ("plain", "back_circulant", "circulant")


# ---------------------------------------------------------
# INGREDIENTS
# ---------------------------------------------------------
def _leads_positive(pair: TurynPair) -> bool:
    nonzero = [v for row in pair.rows for v in row.values if v != 0]
    return nonzero[0] == 1


def turyn_pair(n: int, source: str = "search", budget: Optional[int] = None) -> TurynPair:
    """Turyn pair of order n; from search it is the least pair whose first nonzero entry is +."""
    if source == "catalog":
        entry = default_catalog().find("turyn", n) or default_catalog().find("conference", n)
        if entry is None:
            raise NotInCatalog(f"no Turyn pair of order {n} in catalog")
        x, y = entry.first_rows()
        return TurynPair(circulant(x), circulant(y), rows=(x, y))
    if source != "search":
        raise ValueError(f"unknown source {source!r}")
    for pair in search_turyn_pair(SearchSpec(kind="turyn", n=n, budget=budget)):
        if _leads_positive(pair):
            return pair
    raise NotFound(f"no Turyn pair of order {n}")


def obtain_turyn_pair(n: int, budget: Optional[int] = None) -> TurynPair:
    try:
        return turyn_pair(n, source="catalog")
    except NotInCatalog:
        log.info(f"Turyn pair of order {n} not cataloged, searching")
        return turyn_pair(n, source="search", budget=budget)


def obtain_conference_pair(n: int, budget: Optional[int] = None) -> ConferencePair:
    catalog = default_catalog()
    entry = catalog.find("conference", n) or catalog.find("turyn", n)
    if entry is not None:
        a, b = entry.first_rows()
        return ConferencePair(circulant(a), circulant(b), rows=(a, b))
    found = search_two_circulant(SearchSpec(kind="conference", n=n, limit=1, budget=budget))
    if not found:
        raise NotFound(f"no two-circulant conference matrix with cores of order {n}")
    return found[0]


def obtain_doptimal_pair(n: int, budget: Optional[int] = None) -> DOptimalPair:
    entry = default_catalog().find("doptimal", n)
    if entry is not None:
        x, y = entry.first_rows()
        return DOptimalPair(circulant(x), circulant(y), rows=(x, y))
    found = search_two_circulant(SearchSpec(kind="doptimal", n=n, limit=1, budget=budget))
    if not found:
        raise NotFound(f"no D-optimal pair with symmetric X of order {n}")
    return found[0]


# ---------------------------------------------------------
# CONSTRUCTIONS
# ---------------------------------------------------------
def williamson_propus_from_q(
    q: int, pair: Optional[TurynPair] = None, budget: Optional[int] = None
) -> Tuple[PropusTriple, SignMatrix]:
    """(X+I, Y, X-I) from a Turyn pair of order (q+1)/2; order 2(q+1)."""
    if q % 4 != 1 or not galois.is_prime_power(q):
        raise BadResidue(f"q={q} is not a prime power congruent to 1 mod 4")
    n = (q + 1) // 2
    pair = pair or obtain_turyn_pair(n, budget)
    if pair.n != n:
        raise ValueError(f"Turyn pair has order {pair.n}, need {n}")
    return turyn_propus(pair)


def turyn_propus(pair: TurynPair) -> Tuple[PropusTriple, SignMatrix]:
    """(X+I, Y, X-I) in P for any Turyn pair, the degenerate n=1 pair included."""
    I = identity(pair.n)
    t = PropusTriple(pair.X + I, pair.Y, pair.X - I)
    cls = classify_triple(t)
    if cls.value != "propus":
        raise NotHadamard(f"Turyn triple of order {pair.n} classified as {cls.value}")
    return t, assemble_p(t)


def conference_matrix(pair: ConferencePair) -> SignMatrix:
    A, B = pair.Acore.as_int(), pair.Bcore.as_int()
    return SignMatrix(np.block([[A, B], [B, -A]]))


def conference_propus(pair: ConferencePair, variant: str = "plain") -> SignMatrix:
    if variant not in CONFERENCE_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {CONFERENCE_VARIANTS}")
    M = conference_matrix(pair)
    if not check_properties(M).is_conference:
        raise InvalidConferencePair(f"cores of order {pair.n} do not form a symmetric conference matrix")

    if variant == "plain":
        I = identity(M.order)
        return assemble_p(PropusTriple(M + I, M - I, M + I))

    I = identity(pair.n)
    t = PropusTriple(pair.Acore + I, pair.Bcore, pair.Acore - I)
    return assemble_gp(t) if variant == "back_circulant" else assemble_p(t)


def d_optimal_propus(pair: DOptimalPair, F: Optional[FieldTable] = None) -> SignMatrix:
    """(X, Q+I, Y) in GP; order 4n for prime n = 3 mod 4."""
    n = pair.n
    if n % 4 != 3 or not galois.is_prime(n):
        raise WrongResidue(f"n={n} is not a prime congruent to 3 mod 4")
    if not pair.X.is_symmetric():
        raise AsymmetricX("D-optimal pair needs a symmetric X")
    F = F or build_field(n, 1)
    if F.q != n or F.k != 1:
        raise ValueError(f"field GF({F.q}) does not match n={n}")

    target = (2 * n - 2) * np.eye(n, dtype=np.int64) + 2
    if not np.array_equal(gram(pair.X) + gram(pair.Y), target):
        raise NotHadamard(f"pair of order {n} is not D-optimal")

    B = paley_core(F) + identity(n)
    return assemble_gp(PropusTriple(pair.X, B, pair.Y))


def three_equal_propus(n: int) -> SignMatrix:
    """B = C = D = Q+I with a symmetric circulant A; only n in {3, 7}."""
    if n not in (3, 7):
        raise UnsupportedOrder(f"three-equal construction covers n in (3, 7), got {n}")
    B = paley_core(build_field(n, 1)) + identity(n)
    b_row = first_row_of(B)
    a_sum = isqrt(4 * n - 3)
    targets = [-3 * paf(b_row, s) for s in range(1, n // 2 + 1)]
    candidates = search_symmetric_rows(n, a_sum, targets)
    if not candidates:
        raise NotFound(f"no symmetric A for the three-equal construction at n={n}")
    A = circulant(FirstRow.of(candidates[0]))
    return assemble_gp(PropusTriple(A, B, B))


def max_det_row(q: int, budget: Optional[int] = None) -> Tuple[int, ...]:
    """Least circulant row Y with YY^T = (q-1)I + J, symmetric rows preferred."""
    s = isqrt(2 * q - 1)
    if s * s != 2 * q - 1:
        raise UnsupportedOrder(f"2q-1={2 * q - 1} is not a square, no circulant Y of order {q}")
    targets = [1] * (q // 2)
    found = search_symmetric_rows(q, s, targets) or search_circulant_rows(q, s, targets, budget=budget)
    if not found:
        raise NotFound(f"no circulant Y of order {q} with YY^T = (q-1)I + J")
    return found[0]


def max_det_propus(q: int, budget: Optional[int] = None) -> SignMatrix:
    """(Q+I, Y, Q-I) for a prime q = 1 mod 4; P when Y is symmetric, GP otherwise."""
    if q % 4 != 1 or not galois.is_prime(q):
        raise BadResidue(f"q={q} is not a prime congruent to 1 mod 4")
    Y = circulant(FirstRow.of(max_det_row(q, budget)))
    Q = paley_core(build_field(q, 1))
    I = identity(q)
    t = PropusTriple(Q + I, Y, Q - I)
    if Y.is_symmetric():
        return assemble_p(t)
    log.info(f"q={q}: no symmetric Y, using GP with a circulant Y")
    return assemble_gp(t)


def special_propus(n: int) -> SignMatrix:
    """Small hand-made triples: (J, J-2I, J-2I) at n=3, (Q+I, J-2I, Q-I) at n=5."""
    if n == 5:
        return max_det_propus(5)
    if n != 3:
        raise UnsupportedOrder(f"special triples exist for n in (3, 5), got {n}")
    J_minus = ones(3) - identity(3) - identity(3)
    return assemble_p(PropusTriple(ones(3), J_minus, J_minus))


def searched_propus(n: int, budget: Optional[int] = None) -> Tuple[PropusTriple, SignMatrix]:
    found = search_propus(SearchSpec(kind="propus", n=n, limit=1, budget=budget))
    if not found:
        raise NotFound(f"no symmetric propus triple of order {n}")
    return found[0], assemble_p(found[0])

