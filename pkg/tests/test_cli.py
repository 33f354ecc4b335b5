import pytest

from app.cli import main


def test_construct_prints_matrix(capsys):
    assert main(["construct", "--order", "12"]) == 0
    rows = [l for l in capsys.readouterr().out.splitlines() if not l.startswith("#")]
    assert len(rows) == 12
    assert rows[0] == "+++-++-++-++"


def test_construct_catalog_format(capsys):
    assert main(["construct", "--order", "12", "--format", "catalog"]) == 0
    out = capsys.readouterr().out
    assert "turyn 3 0++ -++ # ingredient" in out


@pytest.mark.parametrize(
    "order,method",
    [
        (44, "miyamoto"), (28, "three-equal"), (28, "doptimal"), (24, "conference"), (16, "search"),
        (4, "paley-turyn"), (20, "max-det"), (52, "max-det"),
    ],
)
def test_construct_routes(order, method, capsys):
    assert main(["construct", "--order", str(order), "--method", method]) == 0


def test_construct_unresolved_order_exits_one(capsys):
    assert main(["construct", "--order", "68", "--method", "auto"]) == 1
    assert "no route constructs order 68" in capsys.readouterr().err


def test_construct_inapplicable_route_exits_one():
    assert main(["construct", "--order", "44", "--method", "three-equal"]) == 1


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["construct"],
        ["construct", "--order", "abc"],
        ["construct", "--order", "12", "--method", "magic"],
        ["search", "--kind", "turyn"],
    ],
)
def test_usage_errors_exit_three(argv, capsys):
    assert main(argv) == 3


def test_search_prints_catalog_lines(capsys):
    assert main(["search", "--kind", "turyn", "--n", "3"]) == 0
    assert "turyn 3 0++ -++ # search" in capsys.readouterr().out.splitlines()


def test_search_with_no_results_exits_one():
    assert main(["search", "--kind", "turyn", "--n", "2"]) == 1


def test_search_over_budget_exits_one(capsys):
    assert main(["search", "--kind", "turyn", "--n", "13", "--budget", "10"]) == 1
    assert "budget" in capsys.readouterr().err


def test_verify_catalog_file(tmp_path, capsys):
    good = tmp_path / "good.txt"
    good.write_text("turyn 3 0++ -++\n", encoding="utf-8")
    assert main(["verify", "--file", str(good)]) == 0

    bad = tmp_path / "bad.txt"
    bad.write_text("turyn 3 0++ -++\nturyn 3 0++ +++\n", encoding="utf-8")
    assert main(["verify", "--file", str(bad)]) == 2
    assert "REJECTED line 2" in capsys.readouterr().out


def test_matrix_round_trip_through_files(tmp_path):
    matrix = tmp_path / "h20.txt"
    image = tmp_path / "h20.pgm"
    assert main(["construct", "--order", "20", "--out", str(matrix)]) == 0
    assert main(["verify", "--file", str(matrix)]) == 0
    assert main(["render", "--file", str(matrix), "--out", str(image)]) == 0
    assert image.read_text(encoding="ascii").startswith("P2\n20 20\n2\n")

    lines = matrix.read_text(encoding="utf-8").splitlines()
    i = next(k for k, l in enumerate(lines) if not l.startswith("#"))
    lines[i] = ("-" if lines[i][0] == "+" else "+") + lines[i][1:]
    matrix.write_text("\n".join(lines) + "\n", encoding="utf-8")
    assert main(["verify", "--file", str(matrix)]) == 2


def test_verify_missing_file_is_usage_error(tmp_path):
    assert main(["verify", "--file", str(tmp_path / "nope.txt")]) == 3


def test_render_refuses_catalog_files(tmp_path):
    cat = tmp_path / "c.txt"
    cat.write_text("turyn 3 0++ -++\n", encoding="utf-8")
    assert main(["render", "--file", str(cat), "--out", str(tmp_path / "x.pgm")]) == 3


def test_report_small_range(capsys):
    assert main(["report", "--max-n", "12"]) == 0
    out = capsys.readouterr().out
    assert "n=11" in out
    assert "DISCREPANCY" not in out


def test_construct_order_four(capsys):
    assert main(["construct", "--order", "4"]) == 0
    rows = [l for l in capsys.readouterr().out.splitlines() if not l.startswith("#")]
    assert rows == ["+++-", "+---", "+-++", "--+-"]
