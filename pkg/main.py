from __future__ import annotations

import os
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app.core.config import settings
from app.core.logger import get_logger

# Import Routers
from app.routers import construct, search, verify

log = get_logger("api")

app = FastAPI(title=settings.APP_TITLE)

# --- Middleware ---
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# --- Routes ---
app.include_router(construct.router, prefix="/api/construct", tags=["Construct"])
app.include_router(search.router, prefix="/api/search", tags=["Search"])
app.include_router(verify.router, prefix="/api/verify", tags=["Verify"])


@app.get("/api/health")
def health():
    return {"status": "ok", "app": settings.APP_TITLE, "max_order": settings.MAX_ORDER}


if __name__ == "__main__":
    import uvicorn

    host = os.getenv("BIND_HOST", "127.0.0.1")
    port = int(os.getenv("PORT", "8000"))
    log.info(f"{settings.APP_TITLE} on http://{host}:{port}/docs")
    uvicorn.run(app, host=host, port=port)
