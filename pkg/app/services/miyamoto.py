"""
Miyamoto-type composition.

Four U and four V matrices of order n are blown up to 2n with
S = U (x) [[1,1],[1,1]] + V (x) [[1,-1],[-1,1]] and bordered to order 2n+1.
The four bordered matrices are Williamson-type; X1, X2(=X3), X4 feed the P
array for a symmetric Hadamard matrix of order 4(2n+1).
"""
from typing import Optional, Tuple

import galois
import numpy as np

from app.core.errors import BadResidue, ConditionsFailed, NotHadamard
from app.core.logger import get_logger
from app.models.matrices import MiyamotoInput, PropusTriple, SignMatrix, TurynPair
from app.models.schemas import MiyamotoReport
from app.services.constructions import obtain_turyn_pair
from app.services.finite_field import build_field, field_for_order, paley_core
from app.services.matrix_core import anti_identity, gram, identity, zeros
from app.services.propus import assemble_p

log = get_logger("miyamoto")

K_PLUS = np.array([[1, 1], [1, 1]], dtype=np.int64)
K_MINUS = np.array([[1, -1], [-1, 1]], dtype=np.int64)


def _pairwise_amicable(mats) -> bool:
    arrs = [m.as_int() for m in mats]
    return all(
        np.array_equal(arrs[i] @ arrs[j].T, arrs[j] @ arrs[i].T)
        for i in range(4) for j in range(i + 1, 4)
    )


def validate_miyamoto(inp: MiyamotoInput) -> MiyamotoReport:
    n = inp.n
    U = [m.as_int() for m in inp.U]
    V = [m.as_int() for m in inp.V]
    eye = np.eye(n, dtype=np.int64)

    plus_minus = all(
        (np.abs(u + v) == 1).all() and (np.abs(u - v) == 1).all() for u, v in zip(U, V)
    )
    sums = [u.sum(axis=1) for u in U]
    row_sums = bool((sums[0] == 1).all()) and all((s == 0).all() for s in sums[1:])
    gram_sums = (
        np.array_equal(sum(u @ u.T for u in U), (2 * n + 1) * eye - 2)
        and np.array_equal(sum(v @ v.T for v in V), (2 * n + 1) * eye)
    )
    return MiyamotoReport(
        u_amicable=_pairwise_amicable(inp.U),
        v_amicable=_pairwise_amicable(inp.V),
        plus_minus=bool(plus_minus),
        row_sums=row_sums,
        gram_sums=bool(gram_sums),
        middle_equal=inp.U[1] == inp.U[2] and inp.V[1] == inp.V[2],
    )


def blow_up(inp: MiyamotoInput) -> Tuple[np.ndarray, ...]:
    """S_j of order 2n for j = 1..4."""
    return tuple(
        np.kron(u.as_int(), K_PLUS) + np.kron(v.as_int(), K_MINUS)
        for u, v in zip(inp.U, inp.V)
    )


def _bordered(s: np.ndarray, sign: int) -> np.ndarray:
    e = sign * np.ones(len(s), dtype=np.int64)
    return np.block([[np.ones((1, 1), dtype=np.int64), e[None, :]], [e[:, None], s]])


def compose_williamson(inp: MiyamotoInput) -> Tuple[SignMatrix, ...]:
    report = validate_miyamoto(inp)
    if not report.ok:
        raise ConditionsFailed(report)
    S = blow_up(inp)
    X = [_bordered(S[0], -1)] + [_bordered(s, 1) for s in S[1:]]
    return tuple(SignMatrix(x) for x in X)


def williamson_to_hadamard(X: Tuple[SignMatrix, ...]) -> SignMatrix:
    """P array on (X1, X2, X4); falls back to (X4, X2, X1) when that fails."""
    x1, x2, _, x4 = X
    try:
        return assemble_p(PropusTriple(x1, x2, x4))
    except NotHadamard as first:
        log.debug(f"(X1, X2, X4) rejected ({first}); trying (X4, X2, X1)")
        return assemble_p(PropusTriple(x4, x2, x1))


# ---------------------------------------------------------
# INGREDIENT FAMILIES
# ---------------------------------------------------------
def standard_ingredients(q: int, pair: Optional[TurynPair] = None,
                         budget: Optional[int] = None) -> MiyamotoInput:
    """U = (I, Q, Q, 0), V = (X, I, I, Y) for q = 1 mod 4 and a Turyn pair of order q."""
    Q = paley_core(field_for_order(q))
    pair = pair or obtain_turyn_pair(q, budget)
    I = identity(q)
    return MiyamotoInput(U=(I, Q, Q, zeros(q)), V=(pair.X, I, I, pair.Y))


def skew_ingredients(p: int, pair: Optional[TurynPair] = None,
                     budget: Optional[int] = None) -> MiyamotoInput:
    """U = (I, QR, QR, 0), V = (X, R, R, Y) for a prime p = 3 mod 4."""
    Q = paley_core(build_field(p, 1))
    R = anti_identity(p)
    QR = SignMatrix(Q @ R)
    pair = pair or obtain_turyn_pair(p, budget)
    return MiyamotoInput(U=(identity(p), QR, QR, zeros(p)), V=(pair.X, R, R, pair.Y))


def corollary_driver(q: int, pair: Optional[TurynPair] = None,
                     budget: Optional[int] = None) -> SignMatrix:
    """Symmetric Hadamard of order 4(2q+1) for a prime power q = 1 mod 4."""
    if q % 4 != 1 or not galois.is_prime_power(q):
        raise BadResidue(f"q={q} is not a prime power congruent to 1 mod 4")
    X = compose_williamson(standard_ingredients(q, pair, budget))
    return williamson_to_hadamard(X)


def skew_corollary_driver(p: int, pair: Optional[TurynPair] = None,
                          budget: Optional[int] = None) -> SignMatrix:
    """Symmetric Hadamard of order 4(2p+1) for a prime p = 3 mod 4."""
    if p % 4 != 3 or not galois.is_prime(p):
        raise BadResidue(f"p={p} is not a prime congruent to 3 mod 4")
    X = compose_williamson(skew_ingredients(p, pair, budget))
    return williamson_to_hadamard(X)


def order_one_input() -> MiyamotoInput:
    """U = ([1],[0],[0],[0]), V = ([0],[1],[1],[1]); gives Williamson matrices of order 3."""
    one, nil = SignMatrix([[1]]), SignMatrix([[0]])
    return MiyamotoInput(U=(one, nil, nil, nil), V=(nil, one, one, one))


def sum_of_squares_holds(X: Tuple[SignMatrix, ...]) -> bool:
    n = X[0].order
    return bool(np.array_equal(sum(gram(x) for x in X), 4 * n * np.eye(n, dtype=np.int64)))
