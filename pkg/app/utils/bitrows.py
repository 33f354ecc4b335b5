"""
Vectorized first-row enumeration.

A row is encoded as a bit mask over its free positions (bit set -> -1). For a
symmetric row only positions 0..n//2 are free; position i and n-i share a bit.
"""
import numpy as np


def free_positions(n: int, symmetric: bool, zero_diagonal: bool = False) -> int:
    free = n // 2 + 1 if symmetric else n
    return free - 1 if zero_diagonal else free


def row_count(n: int, symmetric: bool, zero_diagonal: bool = False) -> int:
    return 1 << free_positions(n, symmetric, zero_diagonal)


def enumerate_rows(n: int, symmetric: bool, zero_diagonal: bool = False) -> np.ndarray:
    """All admissible rows as an int8 array of shape (count, n), in mask order."""
    f = free_positions(n, symmetric, zero_diagonal)
    masks = np.arange(1 << f, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(f, dtype=np.int64)) & 1
    signs = (1 - 2 * bits).astype(np.int8)

    if not symmetric:
        if zero_diagonal:
            return np.hstack([np.zeros((len(masks), 1), dtype=np.int8), signs])
        return signs

    pos = np.arange(n)
    orbit = np.minimum(pos, (n - pos) % n)
    rows = np.zeros((len(masks), n), dtype=np.int8)
    offset = 1 if zero_diagonal else 0
    for i in range(n):
        if zero_diagonal and orbit[i] == 0:
            continue
        rows[:, i] = signs[:, orbit[i] - offset]
    return rows


def paf_table(rows: np.ndarray, shifts: int) -> np.ndarray:
    """PAF values for shifts 1..shifts, shape (count, shifts)."""
    r = rows.astype(np.int32)
    out = np.empty((len(r), shifts), dtype=np.int32)
    for s in range(1, shifts + 1):
        out[:, s - 1] = (r * np.roll(r, -s, axis=1)).sum(axis=1)
    return out


def _lex_le(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise a <= b in the order - < 0 < +."""
    diff = b.astype(np.int16) - a.astype(np.int16)
    nonzero = diff != 0
    first = nonzero.argmax(axis=1)
    lead = diff[np.arange(len(diff)), first]
    return ~nonzero.any(axis=1) | (lead > 0)


def canonical_mask(rows: np.ndarray, symmetric: bool) -> np.ndarray:
    """Keep one representative per equivalence orbit.

    Symmetric rows are identified with their negation; other rows with every
    rotation and negated rotation. The lexicographically least member is kept.
    """
    keep = _lex_le(rows, -rows)
    if symmetric:
        return keep
    for s in range(1, rows.shape[1]):
        rolled = np.roll(rows, -s, axis=1)
        keep &= _lex_le(rows, rolled) & _lex_le(rows, -rolled)
    return keep
