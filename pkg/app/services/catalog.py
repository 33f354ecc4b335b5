"""
Catalog of verified first rows.

Line format:  <kind> <n> <row> <row> [<row>] [# provenance]
Rows are strings over + - 0. Blank lines and lines starting with '#' are
skipped. Every entry is re-verified from its full circulant matrices before
it is accepted; a failing entry is rejected with its line number and the
rest of the file still loads.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterator, List, Optional, Tuple, Union

import numpy as np
from pydantic import ValidationError

from app.core.config import settings
from app.core.errors import CatalogFormatError, CatalogVerificationError, PropusError
from app.core.logger import get_logger
from app.models.matrices import PropusTriple
from app.models.schemas import KIND_ROWS, SIGN_OF_CHAR, CatalogEntry, FirstRow
from app.services.matrix_core import circulant, gram
from app.services.propus import has_additive_property

log = get_logger("catalog")

BUILTIN_PATH = Path(__file__).resolve().parent.parent / "data" / "catalog.txt"


# ---------------------------------------------------------
# LINE CODEC
# ---------------------------------------------------------
def serialize(entry: CatalogEntry) -> str:
    line = " ".join([entry.kind, str(entry.n), *entry.rows])
    return f"{line} # {entry.provenance}" if entry.provenance else line


def parse(line: str, lineno: Optional[int] = None) -> CatalogEntry:
    body, _, provenance = line.partition("#")
    tokens = body.split()
    if not tokens:
        raise CatalogFormatError("empty entry", lineno)

    kind = tokens[0]
    if kind not in KIND_ROWS:
        raise CatalogFormatError(f"unknown kind {kind!r}", lineno)
    if len(tokens) < 2:
        raise CatalogFormatError("missing order", lineno)
    try:
        n = int(tokens[1])
    except ValueError:
        raise CatalogFormatError(f"bad order {tokens[1]!r}", lineno)
    if n < 1:
        raise CatalogFormatError(f"order must be positive, got {n}", lineno)

    rows = tokens[2:]
    if len(rows) != KIND_ROWS[kind]:
        raise CatalogFormatError(f"{kind} needs {KIND_ROWS[kind]} rows, got {len(rows)}", lineno)
    for row in rows:
        bad = [c for c in row if c not in SIGN_OF_CHAR]
        if bad:
            raise CatalogFormatError(f"illegal character {bad[0]!r} in row {row!r}", lineno)
        if len(row) != n:
            raise CatalogFormatError(f"row {row!r} has length {len(row)}, expected {n}", lineno)

    try:
        return CatalogEntry(kind=kind, n=n, rows=tuple(rows), provenance=provenance.strip())
    except ValidationError as e:
        raise CatalogFormatError(str(e), lineno)


def entry_from_rows(kind: str, rows, provenance: str = "") -> CatalogEntry:
    """Build an entry from FirstRow objects or raw value tuples."""
    strings = tuple(
        r.to_string() if isinstance(r, FirstRow) else FirstRow.of(r).to_string() for r in rows
    )
    return CatalogEntry(kind=kind, n=len(strings[0]), rows=strings, provenance=provenance)


# ---------------------------------------------------------
# VERIFICATION
# ---------------------------------------------------------
def _fail(entry: CatalogEntry, reason: str):
    raise CatalogVerificationError(f"{entry.kind} {entry.n}: {reason}")


def verify_entry(entry: CatalogEntry) -> None:
    frs = entry.first_rows()
    n = entry.n
    mats = [circulant(fr) for fr in frs]
    eye = np.eye(n, dtype=np.int64)

    if entry.kind == "propus":
        if not all(fr.symmetric for fr in frs):
            _fail(entry, "propus rows must be symmetric")
        if not all(m.is_pm1() for m in mats):
            _fail(entry, "propus rows must be over +-")
        if not has_additive_property(PropusTriple(*mats)):
            _fail(entry, "AA^T + 2BB^T + DD^T != 4nI")
        return

    x, y = frs
    X, Y = mats
    if entry.kind in ("turyn", "conference"):
        if x.values[0] != 0 or 0 in x.values[1:]:
            _fail(entry, "X must have zero diagonal and +-1 elsewhere")
        if not (x.symmetric and y.symmetric):
            _fail(entry, "X and Y must be symmetric")
        if not Y.is_pm1():
            _fail(entry, "Y must be over +-")
        if not np.array_equal(gram(X) + gram(Y), (2 * n - 1) * eye):
            _fail(entry, "XX^T + YY^T != (2n-1)I")
        return

    # doptimal
    if not (X.is_pm1() and Y.is_pm1()):
        _fail(entry, "D-optimal rows must be over +-")
    if not x.symmetric:
        _fail(entry, "X must be symmetric")
    if not np.array_equal(gram(X) + gram(Y), (2 * n - 2) * eye + 2):
        _fail(entry, "XX^T + YY^T != (2n-2)I + 2J")


# ---------------------------------------------------------
# CATALOG
# ---------------------------------------------------------
@dataclass
class Catalog:
    entries: List[CatalogEntry] = field(default_factory=list)
    rejected: List[Tuple[int, str]] = field(default_factory=list)
    source: str = ""

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries)

    def find_all(self, kind: str, n: int) -> List[CatalogEntry]:
        return [e for e in self.entries if e.kind == kind and e.n == n]

    def find(self, kind: str, n: int) -> Optional[CatalogEntry]:
        hits = self.find_all(kind, n)
        return hits[0] if hits else None

    def merged(self, other: "Catalog") -> "Catalog":
        seen = {e.key for e in self.entries}
        extra = [e for e in other.entries if e.key not in seen]
        return Catalog(self.entries + extra, self.rejected + other.rejected, self.source)


def load_text(text: str, source: str = "<text>") -> Catalog:
    catalog = Catalog(source=source)
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            entry = parse(line, lineno)
            verify_entry(entry)
        except PropusError as e:
            reason = str(e) if isinstance(e, CatalogFormatError) else f"line {lineno}: {e}"
            log.warning(f"{source}: rejected {reason}")
            catalog.rejected.append((lineno, reason))
            continue
        if entry.key in seen:
            continue
        seen.add(entry.key)
        catalog.entries.append(entry)
    log.info(f"{source}: {len(catalog.entries)} entries accepted, {len(catalog.rejected)} rejected")
    return catalog


def load_catalog(source: Union[str, Path, None] = None) -> Catalog:
    """Load and verify a catalog file; None means the built-in catalog."""
    path = Path(source) if source is not None else BUILTIN_PATH
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise CatalogFormatError(f"cannot read catalog {path}: {e}")
    return load_text(text, source=str(path))


@lru_cache(maxsize=1)
def default_catalog() -> Catalog:
    """Built-in entries plus the optional CATALOG_PATH file."""
    catalog = load_catalog()
    if settings.CATALOG_PATH:
        catalog = catalog.merged(load_catalog(settings.CATALOG_PATH))
    return catalog
