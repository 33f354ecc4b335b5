from fastapi import APIRouter, HTTPException

from app.core.errors import PropusError, http_status_for
from app.models.schemas import SearchResponse, SearchSpec
from app.services.catalog import entry_from_rows, serialize
from app.services.search import search_rows

router = APIRouter()


# sync handler: the search runs its own event loop inside the threadpool
@router.post("", response_model=SearchResponse)
def search_route(spec: SearchSpec):
    try:
        found = search_rows(spec)
    except PropusError as e:
        raise HTTPException(status_code=http_status_for(e), detail=str(e))
    lines = [serialize(entry_from_rows(spec.kind, rows, "search")) for rows in found]
    return SearchResponse(count=len(lines), lines=lines)
