"""
Finite fields GF(p^k) as explicit integer tables.

Elements are indexed 0..q-1 by their base-p coefficient vector (constant term
first), which is also the integer representation galois uses for its
polynomial basis. Index 0 is the additive zero, index 1 the unit.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import galois
import numpy as np

from app.core.config import settings
from app.core.errors import FieldError
from app.core.logger import get_logger
from app.models.matrices import SignMatrix

log = get_logger("field")

# above this size the axiom check samples triples instead of walking all q^3
EXHAUSTIVE_AXIOM_LIMIT = 27


@dataclass(frozen=True, eq=False)
class FieldTable:
    p: int
    k: int
    modulus: str
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    chi: np.ndarray

    @property
    def q(self) -> int:
        return self.p ** self.k

    def element(self, index: int) -> int:
        if not 0 <= index < self.q:
            raise FieldError(f"element index {index} outside GF({self.q})")
        return index

    def sub(self, x: int, y: int) -> int:
        return int(self.add[x, self.neg[y]])

    def multiplicative_order(self, x: int) -> int:
        if x == 0:
            raise FieldError("zero has no multiplicative order")
        power, order = x, 1
        while power != 1:
            power = int(self.mul[power, x])
            order += 1
        return order

    def primitive_element(self) -> int:
        for x in range(1, self.q):
            if self.multiplicative_order(x) == self.q - 1:
                return x
        raise FieldError(f"GF({self.q}) table has no primitive element")


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int32)
    a.setflags(write=False)
    return a


@lru_cache(maxsize=64)
def build_field(p: int, k: int = 1) -> FieldTable:
    if k < 1:
        raise FieldError(f"extension degree must be positive, got {k}")
    if p < 2 or not galois.is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    q = p ** k
    if q > settings.MAX_ORDER:
        raise FieldError(f"GF({q}) exceeds MAX_ORDER={settings.MAX_ORDER}")

    if k == 1:
        GF = galois.GF(p)
        modulus = f"prime field GF({p})"
    else:
        poly = galois.irreducible_poly(p, k, method="min")
        GF = galois.GF(q, irreducible_poly=poly)
        modulus = str(poly)

    els = GF.elements
    add = (els[:, None] + els[None, :]).view(np.ndarray)
    mul = (els[:, None] * els[None, :]).view(np.ndarray)
    neg = (-els).view(np.ndarray)

    chi = np.full(q, -1, dtype=np.int32)
    chi[np.unique(np.diagonal(mul)[1:])] = 1
    chi[0] = 0

    log.debug(f"built GF({q}) with modulus {modulus}")
    return FieldTable(
        p=p, k=k, modulus=modulus,
        add=_readonly(add), mul=_readonly(mul), neg=_readonly(neg), chi=_readonly(chi),
    )


def field_for_order(q: int) -> FieldTable:
    if q < 2 or not galois.is_prime_power(q):
        raise FieldError(f"{q} is not a prime power")
    (p,), (k,) = galois.factors(q)
    return build_field(int(p), int(k))


def quadratic_character(F: FieldTable, x: int) -> int:
    return int(F.chi[F.element(x)])


def paley_core(F: FieldTable) -> SignMatrix:
    """Q[i][j] = chi(g_j - g_i); symmetric when q = 1 mod 4, skew when q = 3 mod 4."""
    if F.p == 2:
        raise FieldError("Paley core needs odd q")
    idx = np.arange(F.q)
    diff = F.add[idx[None, :], F.neg[:, None]]
    return SignMatrix(F.chi[diff])


# ---------------------------------------------------------
# AXIOM CHECK
# ---------------------------------------------------------
def check_field_axioms(F: FieldTable, samples: int = 20000, seed: Optional[int] = 0) -> bool:
    q = F.q
    add, mul, neg = F.add, F.mul, F.neg
    idx = np.arange(q)

    if not (np.array_equal(add, add.T) and np.array_equal(mul, mul.T)):
        return False
    if not (np.array_equal(add[0], idx) and np.array_equal(mul[1], idx)):
        return False
    if not (add[idx, neg] == 0).all():
        return False
    # each nonzero row of the multiplication table hits 1 exactly once
    if not ((mul[1:, 1:] == 1).sum(axis=1) == 1).all():
        return False

    if q <= EXHAUSTIVE_AXIOM_LIMIT:
        x, y, z = (g.ravel() for g in np.meshgrid(idx, idx, idx, indexing="ij"))
    else:
        rng = np.random.default_rng(seed)
        x, y, z = rng.integers(0, q, size=(3, samples))

    associative = (
        (add[add[x, y], z] == add[x, add[y, z]]).all()
        and (mul[mul[x, y], z] == mul[x, mul[y, z]]).all()
    )
    distributive = (mul[x, add[y, z]] == add[mul[x, y], mul[x, z]]).all()
    ok = bool(associative and distributive)
    if not ok:
        log.warning(f"GF({q}) table failed associativity or distributivity")
    return ok
