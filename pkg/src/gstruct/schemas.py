"""Pydantic models shared by the HTTP service and its clients."""

from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Field

from .congruence import ORACLE_CAP
from .qseries import DEFAULT_PRECISION
from .tables import SCHEMA_VERSION


class RowModel(BaseModel):
    label: str
    m: int
    d: int
    c4: int
    c6: int
    c_neg1: int
    cusp_widths: str  # "w^count" factors, ascending
    genus: int
    congruence: str
    fine: bool
    e: int
    genus_cover: int
    level: int
    nielsen_label: str
    tested_modulus: int
    method: str


class TableModel(BaseModel):
    schema_version: int = SCHEMA_VERSION
    group: str
    order: int
    rows: List[RowModel]


class ComputeRequest(BaseModel):
    group: str
    congruence: str = Field("both", pattern="^(oracle|relations|both|skip)$")
    oracle_cap: int = ORACLE_CAP


class ComputeResponse(BaseModel):
    table: TableModel
    undetermined: bool


class DihedralCheckRequest(BaseModel):
    k_max: int = Field(ge=3)


class DihedralResult(BaseModel):
    k: int
    n_components: int
    inv_values: List[int]
    ok: bool
    error: Optional[str] = None


class DihedralCheckResponse(BaseModel):
    results: List[DihedralResult]
    all_ok: bool


class TateRequest(BaseModel):
    precision: int = Field(DEFAULT_PRECISION, ge=1)
    emit: str = Field(pattern="^(B|C|delta|j)$")


class Coefficient(BaseModel):
    exponent: int
    numerator: int
    denominator: int


class TateResponse(BaseModel):
    series: str
    precision: int
    coefficients: List[Coefficient]
