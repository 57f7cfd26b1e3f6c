"""HTTP wrapper around the computation core.

Endpoints mirror the CLI subcommands; the CLI can proxy to a running
instance via its --server option.  All handlers are synchronous pure
computations, so the app is safe to run with multiple workers.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .dihedral import verify_structure_theorem
from .groups import EnumerationCapExceeded
from .qseries import series_by_name
from .schemas import (
    Coefficient,
    ComputeRequest,
    ComputeResponse,
    DihedralCheckRequest,
    DihedralCheckResponse,
    DihedralResult,
    TableModel,
    TateRequest,
    TateResponse,
)
from .tables import run_compute, table_to_dict

app = FastAPI(title="gstruct", version="0.1.0")


@app.get("/healthz")
def healthz():
    return {"status": "ok"}


@app.post("/compute", response_model=ComputeResponse)
def compute(req: ComputeRequest):
    try:
        table = run_compute(req.group, congruence=req.congruence, oracle_cap=req.oracle_cap)
    except (ValueError, EnumerationCapExceeded) as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return ComputeResponse(
        table=TableModel(**table_to_dict(table)),
        undetermined=table.has_undetermined(),
    )


@app.post("/dihedral-check", response_model=DihedralCheckResponse)
def dihedral_check(req: DihedralCheckRequest):
    results = []
    for k in range(3, req.k_max + 1):
        try:
            r = verify_structure_theorem(k)
            results.append(
                DihedralResult(k=k, n_components=r.n_components,
                               inv_values=list(r.inv_values), ok=r.ok)
            )
        except AssertionError as exc:
            results.append(
                DihedralResult(k=k, n_components=0, inv_values=[], ok=False, error=str(exc))
            )
    return DihedralCheckResponse(results=results, all_ok=all(r.ok for r in results))


@app.post("/tate", response_model=TateResponse)
def tate(req: TateRequest):
    series = series_by_name(req.emit, req.precision)
    coeffs = [
        Coefficient(exponent=n, numerator=series[n].numerator,
                    denominator=series[n].denominator)
        for n in range(series.val, series.prec)
    ]
    return TateResponse(series=req.emit, precision=req.precision, coefficients=coeffs)
