from fastapi import APIRouter, HTTPException

from app.core.errors import PropusError, http_status_for
from app.models.schemas import VerifyRequest, VerifyResponse
from app.services.catalog import load_text
from app.services.matrix_core import check_properties
from app.utils.matrix_text import parse_matrix_text, sniff_kind

router = APIRouter()


@router.post("", response_model=VerifyResponse)
def verify_route(req: VerifyRequest):
    if sniff_kind(req.text) == "catalog":
        catalog = load_text(req.text, source="request")
        return VerifyResponse(
            kind="catalog",
            ok=not catalog.rejected,
            accepted=len(catalog),
            rejected=[reason for _, reason in catalog.rejected],
        )

    try:
        report = check_properties(parse_matrix_text(req.text))
    except (PropusError, ValueError) as e:
        raise HTTPException(status_code=http_status_for(e), detail=str(e))
    return VerifyResponse(kind="matrix", ok=report.is_hadamard or report.is_conference, report=report)
