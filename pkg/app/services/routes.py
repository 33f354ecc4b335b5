"""
Order -> construction dispatch.

Each route checks its own hypotheses, obtains ingredients (catalog first,
search second) and returns the verified matrix with the catalog lines of the
ingredients it used.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import galois

from app.core.config import settings
from app.core.errors import BadResidue, NotFound, NotHadamard, PropusError, UnsupportedOrder, WrongResidue
from app.core.logger import get_logger
from app.models.matrices import SignMatrix
from app.models.schemas import CatalogEntry
from app.services import constructions, miyamoto
from app.services.catalog import entry_from_rows

log = get_logger("routes")

AUTO_ORDER = ("paley-turyn", "conference", "doptimal", "three-equal", "miyamoto", "max-det")
METHODS = AUTO_ORDER + ("search",)


@dataclass
class ConstructionResult:
    order: int
    method: str
    matrix: SignMatrix
    ingredients: List[CatalogEntry] = field(default_factory=list)


def _quarter(order: int) -> int:
    if order < 4 or order % 4:
        raise UnsupportedOrder(f"symmetric Hadamard orders are multiples of 4, got {order}")
    return order // 4


def _paley_turyn(order: int, budget: Optional[int]) -> ConstructionResult:
    n = _quarter(order)
    q = 2 * n - 1
    if n > 1 and (q % 4 != 1 or not galois.is_prime_power(q)):
        raise BadResidue(f"2n-1={q} is not a prime power congruent to 1 mod 4")
    pair = constructions.obtain_turyn_pair(n, budget)
    _, H = constructions.turyn_propus(pair)
    return ConstructionResult(order, "paley-turyn", H, [entry_from_rows("turyn", pair.rows, "ingredient")])


def _conference(order: int, budget: Optional[int]) -> ConstructionResult:
    if order % 8:
        raise UnsupportedOrder(f"conference route needs order = 8n, got {order}")
    n = order // 8
    pair = constructions.obtain_conference_pair(n, budget)
    H = constructions.conference_propus(pair, "plain")
    return ConstructionResult(order, "conference", H, [entry_from_rows("conference", pair.rows, "ingredient")])


def _doptimal(order: int, budget: Optional[int]) -> ConstructionResult:
    n = _quarter(order)
    if n % 4 != 3 or not galois.is_prime(n):
        raise WrongResidue(f"n={n} is not a prime congruent to 3 mod 4")
    pair = constructions.obtain_doptimal_pair(n, budget)
    H = constructions.d_optimal_propus(pair)
    return ConstructionResult(order, "doptimal", H, [entry_from_rows("doptimal", pair.rows, "ingredient")])


def _three_equal(order: int, budget: Optional[int]) -> ConstructionResult:
    return ConstructionResult(order, "three-equal", constructions.three_equal_propus(_quarter(order)))


def _miyamoto(order: int, budget: Optional[int]) -> ConstructionResult:
    N = _quarter(order)
    if N % 2 == 0 or N < 3:
        raise BadResidue(f"Miyamoto route needs odd n >= 3, got {N}")
    q = (N - 1) // 2
    if q % 4 == 1 and galois.is_prime_power(q):
        pair = constructions.obtain_turyn_pair(q, budget)
        H = miyamoto.corollary_driver(q, pair)
    elif q % 4 == 3 and galois.is_prime(q):
        pair = constructions.obtain_turyn_pair(q, budget)
        H = miyamoto.skew_corollary_driver(q, pair)
    else:
        raise BadResidue(f"(n-1)/2={q} is neither a prime power = 1 mod 4 nor a prime = 3 mod 4")
    return ConstructionResult(order, "miyamoto", H, [entry_from_rows("turyn", pair.rows, "ingredient")])


def _max_det(order: int, budget: Optional[int]) -> ConstructionResult:
    return ConstructionResult(order, "max-det", constructions.max_det_propus(_quarter(order), budget))


def _search(order: int, budget: Optional[int]) -> ConstructionResult:
    t, H = constructions.searched_propus(_quarter(order), budget)
    return ConstructionResult(order, "search", H, [entry_from_rows("propus", t.rows, "ingredient")])


ROUTES: Dict[str, Callable[[int, Optional[int]], ConstructionResult]] = {
    "paley-turyn": _paley_turyn,
    "conference": _conference,
    "doptimal": _doptimal,
    "three-equal": _three_equal,
    "miyamoto": _miyamoto,
    "max-det": _max_det,
    "search": _search,
}


def _symmetric(result: ConstructionResult) -> ConstructionResult:
    if not result.matrix.is_symmetric():
        raise NotHadamard(f"{result.method} built a non-symmetric matrix of order {result.order}")
    return result


def construct(order: int, method: str = "auto", budget: Optional[int] = None) -> ConstructionResult:
    """Build a symmetric Hadamard matrix; 'auto' tries the routes in AUTO_ORDER."""
    if order > settings.MAX_ORDER:
        raise UnsupportedOrder(f"order {order} exceeds MAX_ORDER={settings.MAX_ORDER}")
    if method != "auto":
        if method not in ROUTES:
            raise ValueError(f"unknown method {method!r}; expected auto or one of {METHODS}")
        return _symmetric(ROUTES[method](order, budget))

    reasons = []
    for name in AUTO_ORDER:
        try:
            result = _symmetric(ROUTES[name](order, budget))
        except PropusError as e:
            log.debug(f"order {order}: {name} not applicable ({e})")
            reasons.append(f"{name}: {e}")
            continue
        log.info(f"order {order}: constructed via {name}")
        return result
    raise NotFound(f"no route constructs order {order}; " + "; ".join(reasons))
