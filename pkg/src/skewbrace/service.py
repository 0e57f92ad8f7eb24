"""HTTP wrapper around the core computations.

Request bodies carry the same structure as the JSON file format: "order",
"dot", optional "circ", optional "labels".  All endpoints are stateless.
"""

from __future__ import annotations

from typing import Optional

import numpy as np
from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .brace import SkewBrace, is_two_sided, validate_brace
from .catalog import catalog_names
from .errors import SkewBraceError
from .isoclinism import w_isoclinism_search
from .series import (
    annihilator,
    annihilator_series,
    condition_4_2_check,
    left_series,
    right_series,
)
from .words import WordCollection, arity, core_of, family, marginal_left_ideal, parse_word

app = FastAPI(title="skewbrace", version="0.1.0")


class BracePayload(BaseModel):
    order: int = Field(ge=1)
    dot: list[list[int]]
    circ: Optional[list[list[int]]] = None
    labels: Optional[list[str]] = None


class WordSpec(BaseModel):
    family: Optional[str] = None
    n: int = 1
    words: Optional[list[str]] = None


class ValidateResponse(BaseModel):
    valid: bool
    error: Optional[str] = None
    order: Optional[int] = None
    dot_abelian: Optional[bool] = None
    circ_abelian: Optional[bool] = None
    two_sided: Optional[bool] = None


class InfoResponse(BaseModel):
    order: int
    left_series_orders: list[int]
    right_series_orders: list[int]
    annihilator: list[int]
    annihilator_tower_orders: list[int]
    condition_4_2: bool


class MarginalResponse(BaseModel):
    marginal: list[int]
    core: list[int]


class IsoclinicRequest(BaseModel):
    a: BracePayload
    b: BracePayload
    word: WordSpec = WordSpec(family="Wn", n=1)
    quotient: str = "core-of-marginal"


class IsoclinicResponse(BaseModel):
    isoclinic: bool
    xi: Optional[list[int]] = None
    theta: Optional[list[int]] = None


def _to_brace(p: BracePayload) -> SkewBrace:
    dot = np.asarray(p.dot, dtype=np.int64)
    circ = dot if p.circ is None else np.asarray(p.circ, dtype=np.int64)
    if dot.shape != (p.order, p.order) or circ.shape != (p.order, p.order):
        raise HTTPException(422, "matrix shapes must match the declared order")
    try:
        return validate_brace(dot, circ)
    except SkewBraceError as exc:
        raise HTTPException(422, f"{type(exc).__name__}: {exc}")


def _to_collection(spec: WordSpec) -> WordCollection:
    try:
        if spec.family:
            return family(spec.family, spec.n)
        if spec.words:
            parsed = tuple(parse_word(t) for t in spec.words)
            return WordCollection("custom", parsed, max(arity(w) for w in parsed))
    except SkewBraceError as exc:
        raise HTTPException(422, f"{type(exc).__name__}: {exc}")
    raise HTTPException(422, "word spec needs a family name or explicit words")


@app.post("/validate", response_model=ValidateResponse)
def validate_endpoint(payload: BracePayload) -> ValidateResponse:
    dot = np.asarray(payload.dot, dtype=np.int64)
    circ = dot if payload.circ is None else np.asarray(payload.circ, dtype=np.int64)
    if dot.shape != (payload.order, payload.order) or circ.shape != dot.shape:
        return ValidateResponse(valid=False, error="ShapeMismatch: bad matrix shape")
    try:
        A = validate_brace(dot, circ)
    except SkewBraceError as exc:
        return ValidateResponse(valid=False, error=f"{type(exc).__name__}: {exc}")
    two_sided, _ = is_two_sided(A)
    return ValidateResponse(
        valid=True,
        order=A.order,
        dot_abelian=A.dot.is_abelian(),
        circ_abelian=A.circ.is_abelian(),
        two_sided=two_sided,
    )


@app.post("/info", response_model=InfoResponse)
def info_endpoint(payload: BracePayload) -> InfoResponse:
    A = _to_brace(payload)
    return InfoResponse(
        order=A.order,
        left_series_orders=left_series(A).orders(),
        right_series_orders=right_series(A).orders(),
        annihilator=sorted(annihilator(A).members),
        annihilator_tower_orders=annihilator_series(A).orders(),
        condition_4_2=condition_4_2_check(A),
    )


@app.post("/marginal", response_model=MarginalResponse)
def marginal_endpoint(payload: BracePayload, word: WordSpec) -> MarginalResponse:
    A = _to_brace(payload)
    W = _to_collection(word)
    M = marginal_left_ideal(A, W)
    return MarginalResponse(
        marginal=sorted(M.members), core=sorted(core_of(A, M).members)
    )


@app.post("/isoclinic", response_model=IsoclinicResponse)
def isoclinic_endpoint(req: IsoclinicRequest) -> IsoclinicResponse:
    A = _to_brace(req.a)
    B = _to_brace(req.b)
    W = _to_collection(req.word)
    if req.quotient not in ("core-of-marginal", "annihilator-n"):
        raise HTTPException(422, "quotient must be core-of-marginal or annihilator-n")
    try:
        witness = w_isoclinism_search(A, B, W, req.quotient)
    except SkewBraceError as exc:
        raise HTTPException(422, f"{type(exc).__name__}: {exc}")
    if witness is None:
        return IsoclinicResponse(isoclinic=False)
    return IsoclinicResponse(
        isoclinic=True,
        xi=list(witness.xi.mapping),
        theta=list(witness.theta.mapping),
    )


@app.get("/catalog")
def catalog_endpoint() -> list[str]:
    return catalog_names()
