from enum import Enum
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

CirculantType = Literal["type1", "type2"]
CatalogKind = Literal["propus", "turyn", "conference", "doptimal"]

SIGN_OF_CHAR: Dict[str, int] = {"-": -1, "0": 0, "+": 1}
CHAR_OF_SIGN: Dict[int, str] = {-1: "-", 0: "0", 1: "+"}

# rows per catalog kind: propus stores (A, B, D); the pair kinds store (X, Y)
KIND_ROWS: Dict[str, int] = {"propus": 3, "turyn": 2, "conference": 2, "doptimal": 2}


def row_to_string(values) -> str:
    return "".join(CHAR_OF_SIGN[int(v)] for v in values)


def string_to_row(text: str) -> Tuple[int, ...]:
    return tuple(SIGN_OF_CHAR[c] for c in text)


def is_symmetric_row(values) -> bool:
    n = len(values)
    return all(values[i] == values[(n - i) % n] for i in range(1, n))


# ---------------------------------------------------------
# MATRIX GENERATORS
# ---------------------------------------------------------
class FirstRow(BaseModel):
    """Compact generator of a (back-)circulant matrix."""

    model_config = ConfigDict(frozen=True)

    values: Tuple[int, ...]
    circulant_type: CirculantType = "type1"
    symmetric: bool = False

    @field_validator("values")
    @classmethod
    def _signs_only(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if not v:
            raise ValueError("first row must not be empty")
        if any(x not in (-1, 0, 1) for x in v):
            raise ValueError("first row entries must be in {-1, 0, +1}")
        return v

    @model_validator(mode="after")
    def _symmetry_holds(self) -> "FirstRow":
        if self.symmetric and not is_symmetric_row(self.values):
            raise ValueError("row flagged symmetric but values[i] != values[n-i]")
        return self

    @classmethod
    def of(cls, values, circulant_type: CirculantType = "type1") -> "FirstRow":
        vals = tuple(int(v) for v in values)
        return cls(values=vals, circulant_type=circulant_type, symmetric=is_symmetric_row(vals))

    @classmethod
    def from_string(cls, text: str, circulant_type: CirculantType = "type1") -> "FirstRow":
        return cls.of(string_to_row(text), circulant_type)

    @property
    def n(self) -> int:
        return len(self.values)

    def to_string(self) -> str:
        return row_to_string(self.values)


# ---------------------------------------------------------
# REPORTS
# ---------------------------------------------------------
class TripleClass(str, Enum):
    propus = "propus"
    propus_type = "propus-type"
    generalized_propus = "generalized-propus"
    invalid = "invalid"


class PropertyReport(BaseModel):
    order: int
    is_pm1: bool
    is_hadamard: bool
    is_symmetric: bool
    is_skew_plus_identity: bool
    is_conference: bool


class MiyamotoReport(BaseModel):
    u_amicable: bool
    v_amicable: bool
    plus_minus: bool
    row_sums: bool
    gram_sums: bool
    middle_equal: bool

    @property
    def ok(self) -> bool:
        return not self.failed()

    def failed(self) -> List[str]:
        labels = {
            "u_amicable": "(i) U pairwise amicable",
            "v_amicable": "(ii) V pairwise amicable",
            "plus_minus": "(iii) U +/- V are (+1,-1) matrices",
            "row_sums": "(iv) row sums",
            "gram_sums": "(v) Gram sums",
            "middle_equal": "U2 = U3 and V2 = V3",
        }
        return [label for key, label in labels.items() if not getattr(self, key)]


# ---------------------------------------------------------
# SEARCH + CATALOG
# ---------------------------------------------------------
class SearchSpec(BaseModel):
    kind: CatalogKind
    n: int = Field(..., ge=1)
    symmetric: Optional[Tuple[bool, ...]] = None
    row_sums: Optional[Tuple[Optional[int], ...]] = None
    limit: Optional[int] = Field(None, ge=1)
    canonical_only: bool = False
    budget: Optional[int] = Field(None, ge=1)

    @model_validator(mode="after")
    def _slot_counts(self) -> "SearchSpec":
        slots = KIND_ROWS[self.kind]
        for name in ("symmetric", "row_sums"):
            value = getattr(self, name)
            if value is not None and len(value) != slots:
                raise ValueError(f"{name} needs {slots} slots for kind {self.kind}")
        return self


class CatalogEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: CatalogKind
    n: int = Field(..., ge=1)
    rows: Tuple[str, ...]
    provenance: str = ""

    @model_validator(mode="after")
    def _shape(self) -> "CatalogEntry":
        if len(self.rows) != KIND_ROWS[self.kind]:
            raise ValueError(f"{self.kind} entries carry {KIND_ROWS[self.kind]} rows")
        for row in self.rows:
            if len(row) != self.n or any(c not in SIGN_OF_CHAR for c in row):
                raise ValueError(f"row {row!r} is not a length-{self.n} string over +-0")
        return self

    @property
    def key(self) -> Tuple[str, int, Tuple[str, ...]]:
        return (self.kind, self.n, self.rows)

    def first_rows(self) -> List[FirstRow]:
        return [FirstRow.from_string(r) for r in self.rows]


# ---------------------------------------------------------
# HTTP BODIES
# ---------------------------------------------------------
class ConstructRequest(BaseModel):
    order: int = Field(..., ge=1)
    method: str = "auto"
    budget: Optional[int] = Field(None, ge=1)


class ConstructResponse(BaseModel):
    order: int
    method: str
    ingredients: List[str] = []
    rows: List[str]
    report: PropertyReport


class SearchResponse(BaseModel):
    count: int
    lines: List[str]


class VerifyRequest(BaseModel):
    text: str


class VerifyResponse(BaseModel):
    kind: Literal["catalog", "matrix"]
    ok: bool
    accepted: int = 0
    rejected: List[str] = []
    report: Optional[PropertyReport] = None
