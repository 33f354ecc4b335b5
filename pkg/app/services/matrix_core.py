import numpy as np

from app.models.matrices import SignMatrix
from app.models.schemas import FirstRow, PropertyReport


# ---------------------------------------------------------
# BUILDING BLOCKS
# ---------------------------------------------------------
def circulant(row: FirstRow) -> SignMatrix:
    """type1: M[i][j] = v[(j - i) mod n]; type2: M[i][j] = v[(i + j) mod n]."""
    v = np.asarray(row.values, dtype=np.int8)
    idx = np.arange(row.n)
    if row.circulant_type == "type1":
        grid = (idx[None, :] - idx[:, None]) % row.n
    else:
        grid = (idx[:, None] + idx[None, :]) % row.n
    return SignMatrix(v[grid])


def anti_identity(n: int) -> SignMatrix:
    return SignMatrix(np.fliplr(np.eye(n, dtype=np.int8)))


def identity(n: int) -> SignMatrix:
    return SignMatrix(np.eye(n, dtype=np.int8))


def ones(n: int) -> SignMatrix:
    return SignMatrix(np.ones((n, n), dtype=np.int8))


def zeros(n: int) -> SignMatrix:
    return SignMatrix(np.zeros((n, n), dtype=np.int8))


def row_matrix(text: str, circulant_type: str = "type1") -> SignMatrix:
    return circulant(FirstRow.from_string(text, circulant_type))


# ---------------------------------------------------------
# PRODUCTS + CORRELATIONS
# ---------------------------------------------------------
def gram(m: SignMatrix) -> np.ndarray:
    a = m.as_int()
    return a @ a.T


def paf(row: FirstRow, shift: int) -> int:
    """Periodic autocorrelation sum_i v[i] * v[(i + shift) mod n]."""
    if not 0 <= shift < row.n:
        raise ValueError(f"shift {shift} outside [0, {row.n})")
    v = np.asarray(row.values, dtype=np.int64)
    return int(v @ np.roll(v, -shift))


def row_sum(row: FirstRow) -> int:
    return int(sum(row.values))


def are_amicable(x: SignMatrix, y: SignMatrix) -> bool:
    a, b = x.as_int(), y.as_int()
    return bool(np.array_equal(a @ b.T, b @ a.T))


def commute(x: SignMatrix, y: SignMatrix) -> bool:
    a, b = x.as_int(), y.as_int()
    return bool(np.array_equal(a @ b, b @ a))


def is_circulant(m: SignMatrix) -> bool:
    a = m.entries
    n = m.order
    idx = np.arange(n)
    return bool(np.array_equal(a, a[0][(idx[None, :] - idx[:, None]) % n]))


def first_row_of(m: SignMatrix) -> FirstRow:
    return FirstRow.of(m.entries[0])


# ---------------------------------------------------------
# PROPERTY CHECKS
# ---------------------------------------------------------
def check_properties(m: SignMatrix) -> PropertyReport:
    a = m.as_int()
    n = m.order
    eye = np.eye(n, dtype=np.int64)
    g = a @ a.T

    is_pm1 = m.is_pm1()
    symmetric = bool(np.array_equal(a, a.T))
    shifted = a - eye
    off_diagonal = ~np.eye(n, dtype=bool)
    conference = (
        not a.diagonal().any()
        and bool((np.abs(a[off_diagonal]) == 1).all())
        and bool(np.array_equal(g, (n - 1) * eye))
        and symmetric
    )

    return PropertyReport(
        order=n,
        is_pm1=is_pm1,
        is_hadamard=is_pm1 and bool(np.array_equal(g, n * eye)),
        is_symmetric=symmetric,
        is_skew_plus_identity=bool(np.array_equal(shifted.T, -shifted)),
        is_conference=conference,
    )
