"""HTTP service over the library: transforms, counting, block polynomials,
and the identity verification suite.

Run with e.g. ``uvicorn cumulattice.api:app``.  The endpoints mirror the CLI
subcommands and return the same JSON-ready payloads.
"""

from __future__ import annotations

from typing import Literal, Union

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .cli import (
    MAX_BLOCKPOLY,
    MAX_COUNT,
    MAX_COUNT_PAIRING,
    MAX_TRANSFORM_ORDER,
    MAX_VERIFY,
    DistributionSpec,
    sequence_from_spec,
)
from .cumulants import transform
from .identities import block_count_polynomial, run_identity_checks
from .partitions import PAIRING_KINDS, enumerate_partitions
from .rings import scalar_str, scalar_to_json

Flavor = Literal["moments", "classical", "free", "boolean"]
FamilyKind = Literal[
    "all",
    "noncrossing",
    "interval",
    "pairing",
    "connected",
    "irreducible",
    "connected-pairing",
    "nc-irreducible",
]
ScalarJson = Union[str, dict[str, str]]

app = FastAPI(
    title="cumulattice",
    version=__version__,
    description="Exact moment-cumulant transforms and set-partition counting.",
)


class TransformRequest(BaseModel):
    dist: Literal["gaussian", "poisson", "custom"]
    rate: str | None = None
    values: list[str] | None = None  # inline values for dist="custom"
    from_flavor: Flavor
    to_flavor: Flavor
    order: int = Field(ge=1, le=MAX_TRANSFORM_ORDER)


class TransformResponse(BaseModel):
    flavor: Flavor
    values: list[ScalarJson]


class CountRequest(BaseModel):
    kind: FamilyKind
    max_n: int = Field(ge=1)


class CountRow(BaseModel):
    n: int
    count: int


class CountResponse(BaseModel):
    kind: FamilyKind
    rows: list[CountRow]


class BlockPolyRequest(BaseModel):
    max_n: int = Field(ge=1, le=MAX_BLOCKPOLY)


class BlockPolyRow(BaseModel):
    n: int
    text: str
    coefficients: dict[str, str]


class BlockPolyResponse(BaseModel):
    rows: list[BlockPolyRow]


class VerifyRequest(BaseModel):
    max_n: int = Field(ge=1, le=MAX_VERIFY)
    trials: int = Field(default=5, ge=1)
    seed: int = 0


class VerifyCheck(BaseModel):
    identity: str
    n: int
    seed: int
    lhs: ScalarJson
    rhs: ScalarJson
    equal: bool


class VerifyResponse(BaseModel):
    max_n: int
    trials: int
    seed: int
    all_equal: bool
    checks: list[VerifyCheck]


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/transform", response_model=TransformResponse)
def transform_endpoint(req: TransformRequest) -> TransformResponse:
    spec = DistributionSpec(
        name=req.dist,
        rate=req.rate,
        inline_values=tuple(req.values) if req.values is not None else None,
    )
    try:
        seq = sequence_from_spec(spec, req.from_flavor, req.order)
        out = transform(seq, req.to_flavor)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return TransformResponse(flavor=out.flavor, values=out.to_json())


@app.post("/count", response_model=CountResponse)
def count_endpoint(req: CountRequest) -> CountResponse:
    limit = MAX_COUNT_PAIRING if req.kind in PAIRING_KINDS else MAX_COUNT
    if req.max_n > limit:
        raise HTTPException(status_code=422, detail=f"max_n for {req.kind} is capped at {limit}")
    ns = range(2, req.max_n + 1, 2) if req.kind in PAIRING_KINDS else range(1, req.max_n + 1)
    rows = [
        CountRow(n=n, count=sum(1 for _ in enumerate_partitions(n, req.kind)))
        for n in ns
    ]
    return CountResponse(kind=req.kind, rows=rows)


@app.post("/blockpoly", response_model=BlockPolyResponse)
def blockpoly_endpoint(req: BlockPolyRequest) -> BlockPolyResponse:
    rows = []
    for n in range(1, req.max_n + 1):
        poly = block_count_polynomial(n)
        rows.append(BlockPolyRow(n=n, text=scalar_str(poly), coefficients=scalar_to_json(poly)))
    return BlockPolyResponse(rows=rows)


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    checks = run_identity_checks(req.max_n, req.trials, req.seed)
    return VerifyResponse(
        max_n=req.max_n,
        trials=req.trials,
        seed=req.seed,
        all_equal=all(c["equal"] for c in checks),
        checks=[VerifyCheck(**c) for c in checks],
    )
