"""Plain (P2) PGM rendering: -1 -> black, 0 -> gray, +1 -> white."""
from pathlib import Path
from typing import Union

from app.core.logger import get_logger
from app.models.matrices import SignMatrix

log = get_logger("render")

MAXVAL = 2


def pgm_text(m: SignMatrix) -> str:
    pixels = m.as_int() + 1
    header = f"P2\n{m.order} {m.order}\n{MAXVAL}\n"
    body = "\n".join(" ".join(str(v) for v in row) for row in pixels)
    return header + body + "\n"


def render_image(m: SignMatrix, path: Union[str, Path]) -> Path:
    out = Path(path)
    out.write_text(pgm_text(m), encoding="ascii")
    log.info(f"wrote {m.order}x{m.order} image to {out}")
    return out
