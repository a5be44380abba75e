"""
FastAPI application exposing the verifier over HTTP
"""
import logging
from typing import List

from fastapi import FastAPI, HTTPException
import uvicorn

from . import __version__
from .coloring import LEMMAS, verify_lemma
from .config import API_HOST, API_PORT
from .discharge import audit, explain_element, parse_element
from .exceptions import UnknownElementError, UnknownGadgetError, VerifierError
from .graph import EmbeddedGraph, parse_rotation
from .models import (
    AuditReport,
    ClassifyReport,
    ClassifyRequest,
    ClaimVerdict,
    ConfigId,
    Explanation,
    ExplainRequest,
    FacesReport,
    GraphRequest,
    MatchReport,
    MatchRequest,
    Verdict,
    VerifyConfigRequest,
)
from .reducibility import verify_config
from .reports import classify_report, faces_report, match_report

logger = logging.getLogger(__name__)

app = FastAPI(
    title="Choosability Verifier API",
    description="Configuration matching, discharging audits and reducibility checks for planar graphs with maximum degree 8",
    version=__version__,
)


def _graph(req: GraphRequest) -> EmbeddedGraph:
    try:
        return parse_rotation(req.graph)
    except VerifierError as e:
        raise HTTPException(status_code=400, detail=str(e))


def _fail(e: VerifierError) -> HTTPException:
    status = 404 if isinstance(e, (UnknownElementError, UnknownGadgetError)) else 400
    return HTTPException(status_code=status, detail=str(e))


@app.get("/")
async def health():
    return {"service": "choosability-verifier", "status": "ok", "version": __version__}


@app.post("/api/graph/faces", response_model=FacesReport, response_model_by_alias=True)
async def faces(req: GraphRequest):
    return faces_report(_graph(req))


@app.post("/api/graph/classify", response_model=ClassifyReport, response_model_by_alias=True)
async def classify(req: ClassifyRequest):
    g = _graph(req)
    try:
        return classify_report(g, req.u, req.v)
    except VerifierError as e:
        raise _fail(e)


@app.post("/api/graph/match", response_model=MatchReport, response_model_by_alias=True)
def match(req: MatchRequest):
    return match_report(_graph(req), req.config)


@app.post("/api/graph/discharge", response_model=AuditReport, response_model_by_alias=True)
def discharge(req: GraphRequest, per_component: bool = False):
    g = _graph(req)
    try:
        return audit(g, per_component=per_component)
    except VerifierError as e:
        raise _fail(e)


@app.post("/api/graph/explain", response_model=Explanation, response_model_by_alias=True)
async def explain(req: ExplainRequest):
    g = _graph(req)
    try:
        return explain_element(g, parse_element(g, req.element))
    except VerifierError as e:
        raise _fail(e)


@app.get("/api/lemmas/{name}", response_model=Verdict, response_model_by_alias=True)
def lemma(name: str, max_len: int = 8):
    if name not in LEMMAS:
        raise HTTPException(status_code=404, detail=f"unknown lemma {name!r}")
    try:
        return verify_lemma(name, max_len)
    except VerifierError as e:
        raise _fail(e)


@app.post("/api/configs/{config_id}/verify", response_model=List[ClaimVerdict], response_model_by_alias=True)
def verify(config_id: ConfigId, req: VerifyConfigRequest):
    options = {"samples": req.samples, "seed": req.seed}
    logger.info(f"[API] verifying {config_id.value} ({req.tier.value})")
    return verify_config(config_id, req.tier, **{k: v for k, v in options.items() if v is not None})


if __name__ == "__main__":
    uvicorn.run("choosability_verifier.main:app", host=API_HOST, port=API_PORT)
