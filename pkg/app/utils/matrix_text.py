"""Full-matrix text files: '#' comment lines, then one row per line over + - 0."""
from pathlib import Path
from typing import Iterable, Union

from app.core.errors import CatalogFormatError
from app.models.matrices import SignMatrix
from app.models.schemas import KIND_ROWS, SIGN_OF_CHAR


def matrix_to_text(m: SignMatrix, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.extend(m.rows_as_strings())
    return "\n".join(lines) + "\n"


def write_matrix_text(m: SignMatrix, path: Union[str, Path], comments: Iterable[str] = ()) -> None:
    Path(path).write_text(matrix_to_text(m, comments), encoding="utf-8")


def _payload(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def sniff_kind(text: str) -> str:
    """'catalog' when the first data line starts with a catalog kind, else 'matrix'."""
    for _, line in _payload(text):
        return "catalog" if line.split()[0] in KIND_ROWS else "matrix"
    return "catalog"


def parse_matrix_text(text: str) -> SignMatrix:
    rows = []
    for lineno, line in _payload(text):
        bad = [c for c in line if c not in SIGN_OF_CHAR]
        if bad:
            raise CatalogFormatError(f"illegal character {bad[0]!r} in matrix row", lineno)
        rows.append([SIGN_OF_CHAR[c] for c in line])
    if not rows:
        raise CatalogFormatError("matrix file has no rows")
    width = {len(r) for r in rows}
    if width != {len(rows)}:
        raise CatalogFormatError(f"matrix is not square: {len(rows)} rows of lengths {sorted(width)}")
    return SignMatrix(rows)
