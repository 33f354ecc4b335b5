"""
Propus array assembly.

P array (blocks A, B, B, D) and its generalized GP form built from circulant
blocks and the back-diagonal R. Both assemblers verify the product HH^T
before returning and name the first block pair that breaks it.
"""
from typing import List, Optional, Tuple

import numpy as np

from app.core.errors import NotCirculantInput, NotHadamard
from app.core.logger import get_logger
from app.models.matrices import PropusTriple, SignMatrix
from app.models.schemas import TripleClass
from app.services.matrix_core import anti_identity, are_amicable, commute, gram, is_circulant

log = get_logger("assembly")


def additive_defect(t: PropusTriple) -> np.ndarray:
    """AA^T + 2BB^T + DD^T - 4nI."""
    n = t.n
    return gram(t.A) + 2 * gram(t.B) + gram(t.D) - 4 * n * np.eye(n, dtype=np.int64)


def has_additive_property(t: PropusTriple) -> bool:
    return not additive_defect(t).any()


def classify_triple(t: PropusTriple) -> TripleClass:
    if not has_additive_property(t):
        return TripleClass.invalid
    blocks = (t.A, t.B, t.D)
    pairs = ((t.A, t.B), (t.A, t.D), (t.B, t.D))
    if all(is_circulant(m) and m.is_symmetric() for m in blocks):
        return TripleClass.propus
    if not t.A.is_symmetric():
        return TripleClass.invalid
    if all(are_amicable(x, y) for x, y in pairs):
        return TripleClass.propus_type
    if all(commute(x, y) for x, y in pairs):
        return TripleClass.generalized_propus
    return TripleClass.invalid


# ---------------------------------------------------------
# VERIFICATION
# ---------------------------------------------------------
def _first_bad_block(h: np.ndarray, n: int) -> Optional[Tuple[int, int]]:
    g = h @ h.T
    eye = 4 * n * np.eye(n, dtype=np.int64)
    for r in range(4):
        for s in range(r, 4):
            block = g[r * n:(r + 1) * n, s * n:(s + 1) * n]
            expected = eye if r == s else 0
            if not np.array_equal(block, np.broadcast_to(expected, block.shape)):
                return (r + 1, s + 1)
    return None


def _verified(blocks: List[List[np.ndarray]], n: int, array: str) -> SignMatrix:
    h = np.block(blocks)
    bad = _first_bad_block(h, n)
    if bad is not None:
        r, s = bad
        relation = f"row{r}·row{s} ≠ 4nI" if r == s else f"row{r}·row{s} ≠ 0"
        log.info(f"{array} array of order {4 * n} rejected: {relation}")
        raise NotHadamard(f"{array} array is not Hadamard: {relation}", block_pair=bad)
    log.debug(f"{array} array of order {4 * n} verified")
    return SignMatrix(h)


# ---------------------------------------------------------
# ARRAYS
# ---------------------------------------------------------
def assemble_p(t: PropusTriple) -> SignMatrix:
    """Hadamard of order 4n; symmetric exactly when A, B and D are."""
    A, B, D = t.A.as_int(), t.B.as_int(), t.D.as_int()
    blocks = [
        [A, B, B, D],
        [B, D, -A, -B],
        [B, -A, -D, B],
        [D, -B, B, -A],
    ]
    return _verified(blocks, t.n, "P")


def assemble_gp(t: PropusTriple) -> SignMatrix:
    for name, m in (("A", t.A), ("B", t.B), ("D", t.D)):
        if not is_circulant(m):
            raise NotCirculantInput(f"GP array needs circulant blocks; {name} is not")
    if not t.A.is_symmetric():
        raise NotCirculantInput("GP array needs a symmetric A block")

    R = anti_identity(t.n).as_int()
    A, B, D = t.A.as_int(), t.B.as_int(), t.D.as_int()
    BR, DR = B @ R, D @ R
    BtR, DtR = B.T @ R, D.T @ R
    blocks = [
        [A, BR, BR, DR],
        [BR, DtR, -A, -BtR],
        [BR, -A, -DtR, BtR],
        [DR, -BtR, BtR, -A],
    ]
    H = _verified(blocks, t.n, "GP")
    if not H.is_symmetric():
        raise NotHadamard("GP array is Hadamard but not symmetric")
    return H
