from fastapi import APIRouter, HTTPException

from app.core.errors import PropusError, http_status_for
from app.models.schemas import ConstructRequest, ConstructResponse
from app.services.catalog import serialize
from app.services.matrix_core import check_properties
from app.services.routes import METHODS, construct

router = APIRouter()


@router.get("/methods")
def list_methods():
    return {"methods": ["auto", *METHODS]}


@router.post("", response_model=ConstructResponse)
def construct_route(req: ConstructRequest):
    try:
        result = construct(req.order, req.method, req.budget)
    except (PropusError, ValueError) as e:
        raise HTTPException(status_code=http_status_for(e), detail=str(e))

    return ConstructResponse(
        order=result.order,
        method=result.method,
        ingredients=[serialize(e) for e in result.ingredients],
        rows=result.matrix.rows_as_strings(),
        report=check_properties(result.matrix),
    )
