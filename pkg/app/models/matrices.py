from dataclasses import dataclass, field
from typing import Iterable, Optional, Tuple

import numpy as np

from app.core.config import settings
from app.core.errors import OrderMismatch
from app.models.schemas import FirstRow, row_to_string, string_to_row


class SignMatrix:
    """Square matrix over {-1, 0, +1}.

    Stored as a read-only int8 array; every arithmetic view is widened to
    int64 so Gram products of large orders never overflow.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries):
        raw = np.asarray(entries)
        if raw.ndim != 2 or raw.shape[0] != raw.shape[1] or raw.shape[0] == 0:
            raise ValueError(f"expected a non-empty square matrix, got shape {raw.shape}")
        if raw.shape[0] > settings.MAX_ORDER:
            raise ValueError(f"order {raw.shape[0]} exceeds MAX_ORDER={settings.MAX_ORDER}")
        if not np.isin(raw, (-1, 0, 1)).all():
            raise ValueError("entries must be in {-1, 0, +1}")
        arr = raw.astype(np.int8, copy=True)
        arr.setflags(write=False)
        self._entries = arr

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "SignMatrix":
        return cls([string_to_row(r) for r in rows])

    @property
    def order(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def as_int(self) -> np.ndarray:
        return self._entries.astype(np.int64)

    @property
    def T(self) -> "SignMatrix":
        return SignMatrix(self._entries.T)

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self._entries, self._entries.T))

    def is_pm1(self) -> bool:
        return not bool((self._entries == 0).any())

    def rows_as_strings(self):
        return [row_to_string(r) for r in self._entries]

    def __neg__(self) -> "SignMatrix":
        return SignMatrix(-self.as_int())

    def __add__(self, other: "SignMatrix") -> "SignMatrix":
        return SignMatrix(self.as_int() + _ints(other))

    def __sub__(self, other: "SignMatrix") -> "SignMatrix":
        return SignMatrix(self.as_int() - _ints(other))

    def __matmul__(self, other) -> np.ndarray:
        return self.as_int() @ _ints(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignMatrix):
            return NotImplemented
        return bool(np.array_equal(self._entries, other._entries))

    def __hash__(self) -> int:
        return hash((self.order, self._entries.tobytes()))

    def __repr__(self) -> str:
        return f"SignMatrix(order={self.order})"


def _ints(m) -> np.ndarray:
    return m.as_int() if isinstance(m, SignMatrix) else np.asarray(m, dtype=np.int64)


def _same_order(*mats: SignMatrix) -> int:
    orders = {m.order for m in mats}
    if len(orders) != 1:
        raise OrderMismatch(f"blocks have different orders: {sorted(orders)}")
    return orders.pop()


@dataclass(frozen=True)
class PropusTriple:
    A: SignMatrix
    B: SignMatrix
    D: SignMatrix
    rows: Optional[Tuple[FirstRow, FirstRow, FirstRow]] = field(default=None, compare=False)

    def __post_init__(self):
        _same_order(self.A, self.B, self.D)
        if not all(m.is_pm1() for m in (self.A, self.B, self.D)):
            raise ValueError("propus blocks must be (+1,-1) matrices")

    @property
    def n(self) -> int:
        return self.A.order


@dataclass(frozen=True)
class TurynPair:
    """Symmetric circulant X (zero diagonal) and Y with XX^T + YY^T = (2n-1)I."""

    X: SignMatrix
    Y: SignMatrix
    rows: Optional[Tuple[FirstRow, FirstRow]] = field(default=None, compare=False)

    def __post_init__(self):
        _same_order(self.X, self.Y)

    @property
    def n(self) -> int:
        return self.X.order


@dataclass(frozen=True)
class ConferencePair:
    """Circulant cores of a two-circulant symmetric conference matrix."""

    Acore: SignMatrix
    Bcore: SignMatrix
    rows: Optional[Tuple[FirstRow, FirstRow]] = field(default=None, compare=False)

    def __post_init__(self):
        _same_order(self.Acore, self.Bcore)

    @property
    def n(self) -> int:
        return self.Acore.order


@dataclass(frozen=True)
class DOptimalPair:
    """Circulant X (symmetric) and Y with XX^T + YY^T = (2n-2)I + 2J."""

    X: SignMatrix
    Y: SignMatrix
    rows: Optional[Tuple[FirstRow, FirstRow]] = field(default=None, compare=False)

    def __post_init__(self):
        _same_order(self.X, self.Y)

    @property
    def n(self) -> int:
        return self.X.order


@dataclass(frozen=True)
class MiyamotoInput:
    U: Tuple[SignMatrix, SignMatrix, SignMatrix, SignMatrix]
    V: Tuple[SignMatrix, SignMatrix, SignMatrix, SignMatrix]

    def __post_init__(self):
        if len(self.U) != 4 or len(self.V) != 4:
            raise ValueError("Miyamoto input needs four U and four V matrices")
        _same_order(*self.U, *self.V)

    @property
    def n(self) -> int:
        return self.U[0].order

    @property
    def order(self) -> int:
        """Order of each resulting Williamson-type matrix."""
        return 2 * self.n + 1
