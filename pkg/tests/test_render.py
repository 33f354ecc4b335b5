from pathlib import Path

from app.services.constructions import conference_matrix, obtain_conference_pair, williamson_propus_from_q
from app.utils.pgm import pgm_text, render_image

GOLDEN = Path(__file__).parent / "golden"


def test_p12_matches_golden_file(tmp_path):
    _, H = williamson_propus_from_q(5)
    out = render_image(H, tmp_path / "p12.pgm")
    assert out.read_text(encoding="ascii") == (GOLDEN / "p12.pgm").read_text(encoding="ascii")


def test_zero_entries_render_gray():
    text = pgm_text(conference_matrix(obtain_conference_pair(3)))
    lines = text.splitlines()
    assert lines[:3] == ["P2", "6 6", "2"]
    assert lines[3].split()[0] == "1"
    assert all(v in {"0", "1", "2"} for row in lines[3:] for v in row.split())
