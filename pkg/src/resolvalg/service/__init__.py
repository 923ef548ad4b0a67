"""FastAPI service wrapping the toolkit.

Every computation is stateless and deterministic for a fixed request, so
the service can serve many clients concurrently; run it with

    uvicorn resolvalg.service:app
"""

from __future__ import annotations

from fastapi import FastAPI


def create_app() -> FastAPI:
    from .routes import router

    app = FastAPI(
        title="resolvalg",
        description=(
            "Symbolic and numerical toolkit for the resolvent algebra of the "
            "canonical commutation relations over finite-dimensional "
            "symplectic spaces."
        ),
    )
    app.include_router(router)
    return app


app = create_app()
