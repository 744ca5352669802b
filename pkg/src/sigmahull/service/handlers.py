"""Service operations: request model in, response model out.

These functions contain the glue between wire models and the core package;
both the FastAPI routes and the in-process CLI dispatch through them.
"""

from __future__ import annotations

from .. import eaqecc as eq
from .. import mpcodes, steering, verify
from ..errors import Incompatible, ParseError, TooLarge, ZeroCode
from ..semilinear import sigma_dual, sigma_hull
from . import schemas as sch


def _distance_or_none(code):
    try:
        return code.min_distance()
    except (TooLarge, ZeroCode):
        return None


def hull(req: sch.HullRequest) -> sch.HullResponse:
    code = sch.code_to_core(req.code)
    sigma = sch.sigma_to_core(code.field, req.sigma)
    dim, basis = sigma_hull(code, sigma)
    return sch.HullResponse(
        n=code.n,
        k=code.k,
        d=_distance_or_none(code),
        hull_dim=dim,
        hull_basis=sch.matrix_from_core(basis),
    )


def dual(req: sch.DualRequest) -> sch.DualResponse:
    code = sch.code_to_core(req.code)
    sigma = sch.sigma_to_core(code.field, req.sigma)
    out = sigma_dual(code, sigma)
    return sch.DualResponse(
        code=sch.code_from_core(out), n=out.n, k=out.k, d=_distance_or_none(out)
    )


def mp_build(req: sch.MpRequest) -> sch.MpBuildResponse:
    spec, _ = sch.mp_spec_to_core(req.spec)
    code = mpcodes.assemble(spec)
    dists = mpcodes.row_span_distances(spec.A)
    try:
        bound = min(di * c.min_distance() for di, c in zip(dists, spec.constituents))
    except (TooLarge, ZeroCode):
        bound = None
    return sch.MpBuildResponse(
        code=sch.code_from_core(code),
        n=code.n,
        k=code.k,
        d=_distance_or_none(code),
        claimed_bound=bound,
        nonsingular_by_columns=mpcodes.is_nonsingular_by_columns(spec.A),
    )


def _spec_with_sigma(model: sch.MpSpecModel):
    spec, ms = sch.mp_spec_to_core(model)
    if ms is None:
        raise ParseError("matrix-product spec is missing its sigma section")
    return spec, ms


def mp_hull(req: sch.MpRequest) -> sch.MpHullResponse:
    spec, ms = _spec_with_sigma(req.spec)
    terms = mpcodes.mp_hull_terms(spec, ms)
    witness = mpcodes.rho_monomial_check(spec.A, ms.tau_hat, ms.s)
    return sch.MpHullResponse(
        hull_dim=sum(terms),
        terms=terms,
        rho=[r + 1 for r in witness.rho],
        alphas=list(witness.alphas),
    )


def check_dual_containing(req: sch.MpRequest) -> sch.CheckResponse:
    spec, ms = _spec_with_sigma(req.spec)
    return sch.CheckResponse(
        property="sigma_dual_containing",
        result=mpcodes.is_sigma_dual_containing(spec, ms),
    )


def check_self_orthogonal(req: sch.MpRequest) -> sch.CheckResponse:
    spec, ms = _spec_with_sigma(req.spec)
    return sch.CheckResponse(
        property="sigma_self_orthogonal",
        result=mpcodes.is_sigma_self_orthogonal(spec, ms),
    )


def steer(req: sch.SteerRequest) -> sch.SteerResponse:
    code = sch.code_to_core(req.code)
    sigma = sch.sigma_to_core(code.field, req.sigma)
    if req.code2 is not None:
        other = sch.code_to_core(req.code2)
        result = steering.steer_relative_hull(
            code, other, sigma, req.target_h,
            budget=req.budget, seed=req.seed, exhaustive=req.exhaustive,
        )
    else:
        result = steering.steer_self_hull(
            code, sigma, req.target_h,
            budget=req.budget, seed=req.seed, exhaustive=req.exhaustive,
        )
    return sch.SteerResponse(
        code=sch.code_from_core(result.code),
        witness=sch.monomial_from_core(result.witness),
        achieved_h=result.achieved,
        trials=result.trials,
        exhaustive=result.exhaustive,
    )


def _rec(r) -> sch.EaqeccRecordModel:
    return sch.EaqeccRecordModel(
        q=r.q, n=r.n, k=r.k, d=r.d, d_flag=r.d_flag, c=r.c, h=r.h,
        provenance=r.provenance, status=r.status,
    )


def _sorted_records(records) -> list[sch.EaqeccRecordModel]:
    return [
        _rec(r)
        for r in sorted(records, key=lambda r: (r.h if r.h is not None else -1, r.provenance))
    ]


def eaqecc(req: sch.EaqeccRequest) -> sch.EaqeccResponse:
    meta: dict = {"source": req.source}
    if req.source == "pair":
        if req.code is None or req.code2 is None:
            raise ParseError("pair source needs code and code2")
        c1 = sch.code_to_core(req.code)
        c2 = sch.code_to_core(req.code2)
        records = [eq.eaqecc_from_pair(c1, c2)]
    elif req.source in ("hull", "family", "mds"):
        if req.code is None or req.sigma is None:
            raise ParseError(f"{req.source} source needs code and sigma")
        code = sch.code_to_core(req.code)
        sigma = sch.sigma_to_core(code.field, req.sigma)
        if req.source == "hull":
            records = list(eq.eaqecc_from_hull(code, sigma))
        elif req.source == "family":
            rows = eq.eaqecc_family(code, sigma, budget=req.budget, seed=req.seed)
            records = [r for pair in rows for r in pair]
        else:
            rows = eq.eaqecc_family_mds(code, sigma)
            records = [r for row in rows for r in row]
    elif req.source == "mp":
        if req.spec is None:
            raise ParseError("mp source needs a matrix-product spec")
        spec, ms = _spec_with_sigma(req.spec)
        q1, q2, mp_meta = eq.eaqecc_from_mp(spec, ms)
        records = q1 + q2
        meta.update(mp_meta)
    else:  # pragma: no cover - pydantic restricts the literal
        raise Incompatible(f"unknown source {req.source}")
    return sch.EaqeccResponse(records=_sorted_records(records), meta=meta)


def run_verify(req: sch.VerifyRequest) -> sch.VerifyResponse:
    try:
        report = verify.run_suite(
            req.suite,
            seed=req.seed,
            trials=req.trials,
            max_n=req.max_n,
            fields=tuple(req.fields),
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return sch.VerifyResponse(
        suite=report.suite,
        seed=report.seed,
        requested_trials=report.requested_trials,
        instances=report.instances,
        passes=report.passes,
        failures=report.failures,
        notes=report.notes,
        counterexamples=report.counterexamples,
        passed=report.passed,
        text=report.to_text(),
    )
