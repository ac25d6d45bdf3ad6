"""HTTP service exposing the library; the CLI is a thin client of it.

Every endpoint returns the same report envelope.  Domain errors
(ValueError from the library) map to HTTP 400; budget exhaustion is not
an error, it returns status "uncertified" in an otherwise normal body.
"""

from __future__ import annotations

import time
from fractions import Fraction

from fastapi import FastAPI, HTTPException

from ..bounds import (
    bey_rhs,
    bound_report,
    check_bey,
    de_caen_pi,
    ekr_l2_bound,
    l1_bounds,
    sigma_Kt,
    sigma_upper,
    t_star_l2_bound,
)
from ..core import co2, codegree_vector, format_hypergraph, parse_hypergraph
from ..families import FamilySpec, build, canonical_kind, family_size
from ..props import (
    PatternSpec,
    common_intersection,
    contains_pattern,
    covering_number,
    is_d_wise_t_intersecting,
    is_pattern_free,
    is_t_intersecting,
    matching_number,
)
from ..report import STATUS_FAIL, STATUS_OK, STATUS_UNCERTIFIED, make_report
from ..search import (
    Conjunction,
    DWiseTIntersecting,
    MatchingAtMost,
    PatternFree,
    SearchProblem,
    TIntersecting,
    max_co2,
)
from ..verify import verify_claim
from .models import (
    BoundRequest,
    CheckRequest,
    Co2Request,
    ConstraintModel,
    FamilyRequest,
    ReportEnvelope,
    SearchRequest,
    VerifyRequest,
)

CERTIFICATES_EMBEDDED = 4


def _vertices(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return out


def _envelope(command, inputs, outputs, status, workers, want_timing, t0):
    timing = time.perf_counter() - t0 if want_timing else None
    report = make_report(command, inputs, outputs, status, workers, timing)
    return ReportEnvelope(**report)


def _family(req: FamilyRequest) -> ReportEnvelope:
    t0 = time.perf_counter()
    kind = canonical_kind(req.type)
    if kind == "from-file":
        raise ValueError("from-file families are client-side only")
    n, k = req.n, req.k
    if kind == "fano" and n is None and k is None:
        n, k = 7, 3
    spec = FamilySpec(kind, n=n, k=k, t=req.t, s=req.s)
    h = build(spec)
    size = family_size(spec)
    inputs = {"type": req.type, "n": req.n, "k": req.k, "t": req.t, "s": req.s}
    outputs = {
        "kind": kind,
        "n": h.n,
        "k": h.k,
        "count": size.count,
        "main_term": size.main_term,
        "ratio": size.ratio,
        "hypergraph": format_hypergraph(h),
    }
    return _envelope("family", inputs, outputs, STATUS_OK, 1, req.timing, t0)


def _co2(req: Co2Request) -> ReportEnvelope:
    t0 = time.perf_counter()
    h = parse_hypergraph(req.hypergraph)
    ell = h.k - 1 if req.ell is None else req.ell
    vec = codegree_vector(h, ell)
    inputs = {"ell": req.ell, "hypergraph": req.hypergraph}
    outputs = {
        "n": h.n,
        "k": h.k,
        "ell": ell,
        "edges": h.edge_count(),
        "degree_sum": vec.total(),
        "co2": vec.l2sq(),
        "max_codegree": vec.max(),
    }
    return _envelope("co2", inputs, outputs, STATUS_OK, 1, req.timing, t0)


def _check(req: CheckRequest) -> ReportEnvelope:
    t0 = time.perf_counter()
    h = parse_hypergraph(req.hypergraph)
    prop = req.prop
    outputs: dict = {"prop": prop, "n": h.n, "k": h.k, "edges": h.edge_count()}
    ok: bool | None
    if prop == "intersecting":
        t = 1 if req.t is None else req.t
        ok = is_t_intersecting(h, t)
        outputs["t"] = t
    elif prop == "d-wise":
        if req.d is None:
            raise ValueError("d-wise check needs d")
        t = 1 if req.t is None else req.t
        ok = is_d_wise_t_intersecting(h, req.d, t)
        outputs["d"] = req.d
        outputs["t"] = t
    elif prop == "matching":
        value = matching_number(h)
        outputs["matching_number"] = value
        ok = None if req.s is None else value <= req.s
        outputs["s"] = req.s
    elif prop == "covering":
        value = covering_number(h)
        outputs["covering_number"] = value
        ok = None if req.s is None else value <= req.s
        outputs["s"] = req.s
    elif prop == "common-intersection":
        mask = common_intersection(h)
        outputs["common"] = _vertices(mask)
        ok = None
    elif prop in ("pattern-free", "contains-pattern"):
        if req.pattern is None or req.s is None:
            raise ValueError(f"{prop} check needs pattern and s")
        spec = PatternSpec(req.pattern, req.s)
        outputs["pattern"] = req.pattern
        outputs["s"] = req.s
        if prop == "pattern-free":
            ok = is_pattern_free(h, spec)
        else:
            witness = contains_pattern(h, spec)
            ok = witness is not None
            if witness is not None:
                outputs["witness"] = {
                    "role": witness.role,
                    "edge_indices": list(witness.edge_indices),
                    "vertices": list(witness.vertices),
                }
    else:
        raise ValueError(f"unknown property {prop!r}")
    outputs["pass"] = ok
    status = STATUS_FAIL if ok is False else STATUS_OK
    inputs = {
        "prop": prop, "t": req.t, "d": req.d, "s": req.s,
        "pattern": req.pattern, "hypergraph": req.hypergraph,
    }
    return _envelope("check", inputs, outputs, status, 1, req.timing, t0)


def _need(req: BoundRequest, *names: str) -> list[int]:
    out = []
    for name in names:
        v = getattr(req, name)
        if v is None:
            raise ValueError(f"bound kind {req.kind!r} needs --{name}")
        out.append(v)
    return out


def _bound(req: BoundRequest) -> ReportEnvelope:
    t0 = time.perf_counter()
    kind = req.kind
    status = STATUS_OK
    outputs: dict = {"kind": kind}
    if kind == "bey-rhs":
        n, k, ell, m = _need(req, "n", "k", "ell", "m")
        outputs["value"] = bey_rhs(n, k, ell, m)
    elif kind == "check-bey":
        if req.hypergraph is None:
            raise ValueError("check-bey needs a hypergraph")
        h = parse_hypergraph(req.hypergraph)
        try:
            chk = check_bey(h, req.ell)
            outputs.update(
                ell=chk.ell, m=chk.m, lhs=chk.lhs, rhs=chk.rhs,
                slack=chk.slack, **{"pass": True},
            )
        except RuntimeError as exc:
            outputs["pass"] = False
            outputs["detail"] = str(exc)
            status = STATUS_FAIL
    elif kind == "ekr-l2":
        n, k = _need(req, "n", "k")
        outputs["value"] = ekr_l2_bound(n, k)
    elif kind == "t-star-l2":
        n, k, t = _need(req, "n", "k", "t")
        outputs["value"] = t_star_l2_bound(n, k, t)
    elif kind.startswith("l1-"):
        n, k = _need(req, "n", "k")
        bound = l1_bounds(kind[3:], n, k, t=req.t, s=req.s)
        outputs.update(
            name=bound.name, value=bound.value, valid=bound.valid,
            hypothesis=bound.hypothesis,
        )
    elif kind == "sigma-upper":
        (k,) = _need(req, "k")
        if req.pi is None:
            raise ValueError("sigma-upper needs --pi")
        outputs["value"] = sigma_upper(Fraction(req.pi), k)
    elif kind == "de-caen-pi":
        t, k = _need(req, "t", "k")
        outputs["value"] = de_caen_pi(t, k)
    elif kind == "sigma-kt":
        t, k = _need(req, "t", "k")
        outputs["value"] = sigma_Kt(t, k)
    elif kind == "report":
        if req.hypergraph is None:
            raise ValueError("bound report needs a hypergraph")
        h = parse_hypergraph(req.hypergraph)
        rep = bound_report(h, req.ell)
        outputs.update(
            n=rep.n, k=rep.k, ell=rep.ell, m=rep.m, co2=rep.co2_value,
            bey={"lhs": rep.bey.lhs, "rhs": rep.bey.rhs, "slack": rep.bey.slack},
            named=[
                {"name": name, "value": value, "valid": valid, "slack": slack}
                for name, value, valid, slack in rep.named
            ],
        )
    else:
        raise ValueError(f"unknown bound kind {kind!r}")
    inputs = {
        "kind": kind, "n": req.n, "k": req.k, "ell": req.ell, "m": req.m,
        "t": req.t, "s": req.s, "pi": req.pi, "hypergraph": req.hypergraph,
    }
    return _envelope("bound", inputs, outputs, status, 1, req.timing, t0)


def _constraint_from(models: list[ConstraintModel]):
    parts = []
    for c in models:
        if c.kind == "t-intersecting":
            parts.append(TIntersecting(1 if c.t is None else c.t))
        elif c.kind == "d-wise":
            if c.d is None:
                raise ValueError("d-wise constraint needs d")
            parts.append(DWiseTIntersecting(c.d, 1 if c.t is None else c.t))
        elif c.kind == "matching-at-most":
            if c.s is None:
                raise ValueError("matching-at-most constraint needs s")
            parts.append(MatchingAtMost(c.s))
        elif c.kind == "pattern-free":
            if c.pattern is None or c.s is None:
                raise ValueError("pattern-free constraint needs pattern and s")
            parts.append(PatternFree(PatternSpec(c.pattern, c.s)))
        else:
            raise ValueError(f"unknown constraint kind {c.kind!r}")
    if len(parts) == 1:
        return parts[0]
    return Conjunction(tuple(parts))


def _search(req: SearchRequest) -> ReportEnvelope:
    t0 = time.perf_counter()
    constraint = _constraint_from(req.constraints)
    problem = SearchProblem(
        req.n,
        req.k,
        constraint,
        mode=req.mode,
        node_budget=req.node_budget,
        time_budget_s=req.time_budget_s,
        workers=req.workers,
        optima_cap=req.optima_cap,
        require_nontrivial=req.require_nontrivial,
        allow_large=req.allow_large,
    )
    result = max_co2(problem)
    outputs = {
        "n": req.n,
        "k": req.k,
        "constraint": constraint.describe(),
        "mode": req.mode,
        "value": result.value,
        "nodes": result.nodes,
        "certified": result.certified,
        "optima_count": result.optima_count,
        "optima_complete": result.optima_complete,
        "optima": [list(ranks) for ranks in result.optima],
        "certificates": [
            format_hypergraph(h)
            for h in result.optimum_hypergraphs()[:CERTIFICATES_EMBEDDED]
        ],
    }
    status = STATUS_OK if result.certified else STATUS_UNCERTIFIED
    inputs = req.model_dump(exclude={"timing"})
    return _envelope("search", inputs, outputs, status, req.workers, req.timing, t0)


def _verify(req: VerifyRequest) -> ReportEnvelope:
    t0 = time.perf_counter()
    tol = Fraction(3, 20) if req.tol is None else Fraction(req.tol)
    rep = verify_claim(
        req.claim,
        n=req.n,
        k=req.k,
        t=req.t,
        s=req.s,
        node_budget=req.node_budget,
        time_budget_s=req.time_budget_s,
        workers=req.workers,
        search=req.search,
        tol=tol,
    )
    outputs = {
        "claim": rep.claim,
        "params": rep.params,
        "claimed": rep.claimed,
        "computed": rep.computed,
        "unique": rep.unique,
        "verdict": rep.status,
        "certified": rep.certified,
        "notes": list(rep.notes),
        "certificates": [format_hypergraph(h) for h in rep.certificates],
    }
    status = {
        "PASS": STATUS_OK,
        "REPORT": STATUS_OK,
        "FAIL": STATUS_FAIL,
        "UNCERTIFIED": STATUS_UNCERTIFIED,
    }[rep.status]
    inputs = req.model_dump(exclude={"timing"})
    return _envelope("verify", inputs, outputs, status, req.workers, req.timing, t0)


def create_app() -> FastAPI:
    app = FastAPI(title="cosq", version="0.1.0")

    def guarded(handler, request):
        try:
            return handler(request)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @app.get("/health", response_model=ReportEnvelope)
    def health() -> ReportEnvelope:
        report = make_report("health", {}, {"status": "ok"})
        return ReportEnvelope(**report)

    @app.post("/v1/family", response_model=ReportEnvelope)
    def family(req: FamilyRequest) -> ReportEnvelope:
        return guarded(_family, req)

    @app.post("/v1/co2", response_model=ReportEnvelope)
    def co2_endpoint(req: Co2Request) -> ReportEnvelope:
        return guarded(_co2, req)

    @app.post("/v1/check", response_model=ReportEnvelope)
    def check(req: CheckRequest) -> ReportEnvelope:
        return guarded(_check, req)

    @app.post("/v1/bound", response_model=ReportEnvelope)
    def bound(req: BoundRequest) -> ReportEnvelope:
        return guarded(_bound, req)

    @app.post("/v1/search", response_model=ReportEnvelope)
    def search(req: SearchRequest) -> ReportEnvelope:
        return guarded(_search, req)

    @app.post("/v1/verify", response_model=ReportEnvelope)
    def verify(req: VerifyRequest) -> ReportEnvelope:
        return guarded(_verify, req)

    return app
