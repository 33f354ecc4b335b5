import pytest

from app.core.config import settings
from app.core.errors import CatalogFormatError, CatalogVerificationError
from app.models.schemas import CatalogEntry
from app.services.catalog import (
    default_catalog,
    entry_from_rows,
    load_catalog,
    load_text,
    parse,
    serialize,
    verify_entry,
)


def test_builtin_catalog_is_clean():
    catalog = load_catalog()
    assert not catalog.rejected
    kinds = {e.kind for e in catalog}
    assert kinds == {"propus", "turyn", "conference", "doptimal"}
    assert catalog.find("turyn", 13).rows == ("0+---+--+---+", "-+--++++++--+")


def test_parse_line_with_provenance():
    entry = parse("turyn 3 0++ -++ # exhaustive search")
    assert entry == CatalogEntry(kind="turyn", n=3, rows=("0++", "-++"), provenance="exhaustive search")
    assert serialize(entry) == "turyn 3 0++ -++ # exhaustive search"


def test_serialize_without_provenance():
    entry = entry_from_rows("propus", [(1,), (1,), (-1,)])
    assert serialize(entry) == "propus 1 + + -"
    assert parse(serialize(entry)) == entry


@pytest.mark.parametrize(
    "line,fragment",
    [
        ("williamson 3 +++ +++", "unknown kind"),
        ("turyn x 0++ -++", "bad order"),
        ("turyn 3 0++", "needs 2 rows"),
        ("turyn 3 0+* -++", "illegal character"),
        ("turyn 3 0+ -++", "length"),
        ("propus 3 +++ -++", "needs 3 rows"),
    ],
)
def test_format_errors_carry_line_numbers(line, fragment):
    with pytest.raises(CatalogFormatError) as exc:
        parse(line, lineno=7)
    assert exc.value.lineno == 7
    assert str(exc.value).startswith("line 7: ")
    assert fragment in str(exc.value)


def test_bad_entry_is_rejected_and_loading_continues():
    text = "\n".join([
        "# header",
        "turyn 3 0++ -++",
        "turyn 3 0++ +++ # bad",
        "",
        "doptimal 3 +++ ++-",
    ])
    catalog = load_text(text)
    assert [e.kind for e in catalog] == ["turyn", "doptimal"]
    assert len(catalog.rejected) == 1
    lineno, reason = catalog.rejected[0]
    assert lineno == 3
    assert reason.startswith("line 3: ")


@pytest.mark.parametrize(
    "line",
    [
        "propus 3 +++ +++ +++",
        "propus 3 ++- -++ -++",
        "turyn 3 +++ -++",
        "conference 3 0+- -+-",
        "doptimal 3 ++- +++",
        "doptimal 3 +++ +++",
    ],
)
def test_verification_failures(line):
    with pytest.raises(CatalogVerificationError):
        verify_entry(parse(line))


def test_duplicates_are_collapsed():
    catalog = load_text("turyn 3 0++ -++\nturyn 3 0++ -++ # again\n")
    assert len(catalog) == 1


def test_missing_file():
    with pytest.raises(CatalogFormatError):
        load_catalog("/nonexistent/catalog.txt")


def test_catalog_path_extends_builtin(tmp_path, monkeypatch):
    extra = tmp_path / "extra.txt"
    extra.write_text("turyn 7 0+----+ --+--+-\nturyn 15 0++ -++\n", encoding="utf-8")
    monkeypatch.setattr(settings, "CATALOG_PATH", str(extra))
    default_catalog.cache_clear()
    catalog = default_catalog()
    assert len(catalog) == len(load_catalog())
    assert len(catalog.rejected) == 1
