"""
FastAPI REST API for clifvs.

Exposes inverses, characteristic polynomials and representation
determinants over HTTP, with the same result payloads as ``clifvs --json``.
"""

import logging
import os
from typing import Any, Dict, List, Literal, Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from clifvs.blades import Signature
from clifvs.checks import run_golden_examples
from clifvs.constants import API_VERSION, DEFAULT_API_PORT, DEFAULT_MODE, DEFAULT_SCALAR, SINGULAR_MESSAGE
from clifvs.exceptions import CliffordError, ParseError, SingularMultivectorError
from clifvs.fvs import fvs_run
from clifvs.logging_config import get_logger, setup_logging, timed
from clifvs.parser import parse
from clifvs.schemas import FvsResult, StepMode
from clifvs.scalars import ScalarKind

setup_logging(os.getenv("LOG_LEVEL", "info"), include_timestamps=True, fallback=logging.INFO)
logger = get_logger(__name__)

app = FastAPI(
    title="clifvs API",
    description="Exact multivector inverses and characteristic polynomials in Cl(p,q)",
    version=API_VERSION,
    docs_url="/docs",
    redoc_url="/redoc"
)

# Outcome of replaying the example catalogue at startup
catalogue_ok: Optional[bool] = None


class ExpressionRequest(BaseModel):
    """Request model shared by the computation endpoints."""
    signature: List[int] = Field(..., min_length=2, max_length=2, description="Algebra signature [p, q]")
    expression: str = Field(..., description="Multivector expression, e.g. '1 - 2*e15 + 5*e134'")
    mode: Literal["full", "bott", "span", "reduced"] = Field(default=DEFAULT_MODE)
    scalar: Literal["rational", "f64"] = Field(default=DEFAULT_SCALAR)
    trace: bool = Field(default=False, description="Include the per-step t/m values")

    class Config:
        json_schema_extra = {
            "example": {
                "signature": [2, 5],
                "expression": "1 - 2*e15 + 5*e134",
                "mode": "reduced",
                "scalar": "rational",
                "trace": False
            }
        }


class HealthResponse(BaseModel):
    """Response model for GET /health endpoint."""
    status: str
    catalogue: str
    message: str


def _run(request: ExpressionRequest) -> FvsResult:
    """
    Parse and run FVS for a request.

    Raises:
        HTTPException 400: invalid signature or malformed expression
    """
    try:
        sig = Signature(*request.signature)
        a = parse(request.expression, sig, ScalarKind.from_name(request.scalar))
        return fvs_run(a, StepMode(request.mode), want_trace=request.trace)
    except ParseError as e:
        raise HTTPException(status_code=400, detail=e.render())
    except CliffordError as e:
        raise HTTPException(status_code=400, detail=str(e))


def _envelope(command: str, request: ExpressionRequest, result: FvsResult, payload: Dict[str, Any]) -> Dict[str, Any]:
    out = {
        "command": command,
        "signature": request.signature,
        "mode": request.mode,
        "scalar": request.scalar,
        "result": payload,
    }
    if request.trace:
        out["trace"] = result.trace_dict()
    return out


@app.on_event("startup")
def startup_event():
    """Replay the example catalogue once so /health can report on it."""
    global catalogue_ok
    try:
        with timed(logger, "Example catalogue replay"):
            report = run_golden_examples()
        catalogue_ok = report.passed
        logger.info(f"Example catalogue: {len(report.checks)} entries, passed={report.passed}")
    except Exception as e:
        catalogue_ok = False
        logger.error(f"Example catalogue could not be replayed: {e}", exc_info=True)


@app.get("/", response_model=Dict[str, Any])
def root():
    """API metadata and available endpoints."""
    return {
        "name": "clifvs API",
        "version": API_VERSION,
        "description": "Exact multivector inverses and characteristic polynomials in Cl(p,q)",
        "endpoints": {
            "POST /inverse": "Multivector inverse (422 when it does not exist)",
            "POST /charpoly": "Characteristic polynomial coefficients",
            "POST /det": "Determinant of the representation",
            "GET /health": "Health check",
            "GET /docs": "Interactive API documentation (Swagger UI)",
            "GET /redoc": "Alternative API documentation (ReDoc)"
        }
    }


@app.get("/health", response_model=HealthResponse)
def health_check():
    """Healthy once the example catalogue replayed without a failure."""
    catalogue = {None: "not_run", True: "passed", False: "failed"}[catalogue_ok]
    return {
        "status": "healthy" if catalogue_ok is not False else "degraded",
        "catalogue": catalogue,
        "message": "Service is operational" if catalogue_ok is not False else "Example catalogue failed"
    }


@app.post("/inverse")
def inverse_endpoint(request: ExpressionRequest):
    """
    Invert a multivector.

    Raises:
        HTTPException 400: invalid signature or expression
        HTTPException 422: the multivector is a zero divisor
        HTTPException 500: internal server error
    """
    try:
        result = _run(request)
        if result.singular:
            raise SingularMultivectorError(SINGULAR_MESSAGE)
        return _envelope("inverse", request, result, result.inverse_dict())
    except HTTPException:
        raise
    except SingularMultivectorError as e:
        raise HTTPException(status_code=422, detail=str(e))
    except Exception as e:
        logger.error(f"Inverse failed for {request.expression!r}: {e}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Internal server error: {str(e)}")


@app.post("/charpoly")
def charpoly_endpoint(request: ExpressionRequest):
    """Monic characteristic polynomial, highest degree first."""
    try:
        result = _run(request)
        return _envelope("charpoly", request, result, result.charpoly_dict())
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"Charpoly failed for {request.expression!r}: {e}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Internal server error: {str(e)}")


@app.post("/det")
def det_endpoint(request: ExpressionRequest):
    try:
        result = _run(request)
        return _envelope("det", request, result, result.det_dict())
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"Det failed for {request.expression!r}: {e}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Internal server error: {str(e)}")


@app.exception_handler(404)
async def not_found_handler(request: Request, exc):
    """Custom 404 handler."""
    return JSONResponse(
        status_code=404,
        content={
            "error": "Not found",
            "message": f"The endpoint {request.url.path} does not exist",
            "available_endpoints": ["/", "/health", "/inverse", "/charpoly", "/det", "/docs"]
        },
    )


if __name__ == "__main__":
    import uvicorn
    from dotenv import load_dotenv

    load_dotenv()
    port = int(os.getenv("PORT", DEFAULT_API_PORT))
    logger.info(f"Starting clifvs API server on port {port}...")

    uvicorn.run(
        "clifvs.api:app",
        host="0.0.0.0",
        port=port,
        log_level="info",
        access_log=True
    )
