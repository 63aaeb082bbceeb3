"""HTTP service exposing the classification engine.

All endpoints are stateless wrappers around the pure core: weights travel
as literals, domain errors map to 400 responses carrying stable codes,
and graph/table endpoints can answer in DOT or aligned text via the
``format`` query parameter.
"""

from __future__ import annotations

import os
from typing import List, Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse, PlainTextResponse

from .. import emit, fock, selftest
from ..classify import (
    BOUNDED,
    CuspidalParams,
    classify,
    enumerate_bounded,
    families,
    validate_cuspidal,
)
from ..decomp import degree_top_type, jh_axis, jh_axis_table
from ..errors import BadShape, StarqError
from ..glside import gl_arrow, gl_classify, gl_families
from ..orbits import orbit
from ..scalars import Scalar, parse_scalar
from ..weights import Weight, parse_weight
from . import models

DEFAULT_ORBIT_CAP = 10000


def _orbit_cap(requested: Optional[int]) -> int:
    if requested is not None:
        return requested
    return int(os.environ.get("STARQ_ORBIT_CAP", DEFAULT_ORBIT_CAP))


def _verdict_payload(w: Weight) -> models.VerdictResponse:
    v = classify(w)
    return models.VerdictResponse(
        verdict=v.kind,
        weight=str(w),
        klass=v.klass,
        type=v.type.render(w.n) if v.type else None,
        maximal=str(v.maximal) if v.maximal else None,
        word=list(v.word),
        regularity=v.regularity,
        reason=v.reason,
        family_id=v.family_id(),
    )


def _gl_verdict_payload(w: Weight) -> models.VerdictResponse:
    v = gl_classify(w)
    return models.VerdictResponse(
        verdict=v.kind,
        weight=str(w),
        klass=v.klass,
        type=v.type.render(w.n, gl=True) if v.type else None,
        maximal=str(v.maximal) if v.maximal else None,
        word=list(v.word),
        regularity=v.regularity,
        reason=v.reason,
        family_id=None,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="starq",
        version="0.1.0",
        description="Exact classification of bounded highest weight modules "
        "over the queer Lie superalgebra q(n).",
    )

    @app.exception_handler(StarqError)
    async def domain_error(_, exc: StarqError):
        return JSONResponse(
            status_code=400,
            content={"error": {"code": exc.code, "message": str(exc)}},
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "service": "starq"}

    @app.post("/classify", response_model=models.VerdictResponse,
              responses={400: {"model": models.ErrorResponse}})
    def classify_endpoint(req: models.WeightRequest):
        return _verdict_payload(parse_weight(req.weight))

    @app.post("/orbit", responses={400: {"model": models.ErrorResponse}})
    def orbit_endpoint(req: models.OrbitRequest, format: str = "json"):
        graph = orbit(parse_weight(req.weight), cap=_orbit_cap(req.cap))
        if format == "dot":
            return PlainTextResponse(emit.orbit_dot(graph))
        payload = emit.orbit_json(graph)
        payload["maximal_vertices"] = [str(v) for v in graph.maximal_vertices()]
        return models.OrbitResponse(**payload)

    @app.post("/enumerate", response_model=models.EnumerateResponse,
              responses={400: {"model": models.ErrorResponse}})
    def enumerate_endpoint(req: models.WeightRequest):
        w = parse_weight(req.weight)
        entries = enumerate_bounded(w)
        return models.EnumerateResponse(
            maximal=str(w),
            count=len(entries),
            entries=[
                models.BoundedEntryOut(
                    weight=str(e.weight),
                    type=e.type.render(w.n),
                    word=list(e.word),
                )
                for e in entries
            ],
        )

    @app.post("/families", responses={400: {"model": models.ErrorResponse}})
    def families_endpoint(req: models.WeightRequest, format: str = "json"):
        fams = families(parse_weight(req.weight))
        if format == "dot":
            return PlainTextResponse("\n".join(emit.family_dot(f) for f in fams))
        return models.FamiliesResponse(
            families=[models.FamilyOut(**emit.family_json(f)) for f in fams]
        )

    @app.post("/gl/classify", response_model=models.VerdictResponse,
              responses={400: {"model": models.ErrorResponse}})
    def gl_classify_endpoint(req: models.WeightRequest):
        return _gl_verdict_payload(parse_weight(req.weight))

    @app.post("/gl/families", responses={400: {"model": models.ErrorResponse}})
    def gl_families_endpoint(req: models.WeightRequest, format: str = "json"):
        fams = gl_families(parse_weight(req.weight))
        if format == "dot":
            return PlainTextResponse(
                "\n".join(emit.family_dot(f, dashed=True) for f in fams)
            )
        return models.FamiliesResponse(
            families=[models.FamilyOut(**emit.family_json(f)) for f in fams]
        )

    @app.post("/gl/arrow", responses={400: {"model": models.ErrorResponse}})
    def gl_arrow_endpoint(req: models.ArrowRequest):
        w = parse_weight(req.weight)
        return {"source": str(w), "label": req.label, "target": str(gl_arrow(w, req.label))}

    @app.post("/degree", response_model=models.DegreeResponse,
              responses={400: {"model": models.ErrorResponse}})
    def degree_endpoint(req: models.WeightRequest):
        w = parse_weight(req.weight)
        return models.DegreeResponse(weight=str(w), degree=degree_top_type(w))

    @app.post("/jh", responses={400: {"model": models.ErrorResponse}})
    def jh_endpoint(req: models.JHRequest, format: str = "json"):
        c = parse_scalar(req.c)
        rows = [jh_axis(req.n, c, req.k)] if req.k is not None \
            else jh_axis_table(req.n, c)
        if format == "table":
            return PlainTextResponse(emit.jh_table_text(rows))
        return models.JHResponse(
            n=req.n,
            c=str(c),
            rows=[models.JHRowOut(**emit.jh_row_json(r)) for r in rows],
        )

    @app.post("/fock/check", response_model=models.FockCheckResponse,
              responses={400: {"model": models.ErrorResponse}})
    def fock_check_endpoint(req: models.FockCheckRequest):
        reports = run_fock_checks(req.n, req.checks, req.samples, req.window, req.seed)
        return models.FockCheckResponse(
            n=req.n,
            reports=reports,
            passed=all(r.status == "pass" for r in reports),
        )

    @app.post("/cuspidal/validate", response_model=models.CuspidalResponse,
              responses={400: {"model": models.ErrorResponse}})
    def cuspidal_endpoint(req: models.CuspidalRequest):
        w = parse_weight(req.weight)
        twists = tuple(parse_scalar(t) for t in req.twists)
        anchor = validate_cuspidal(CuspidalParams(w, twists))
        return models.CuspidalResponse(
            weight=str(w), twists=[str(t) for t in twists], anchor=str(anchor)
        )

    @app.post("/selftest", response_model=models.SelftestResponse)
    def selftest_endpoint(req: models.SelftestRequest):
        results = selftest.run_all(req.criteria)
        return models.SelftestResponse(
            results=[
                models.SelftestResult(
                    criterion=r.criterion,
                    title=r.title,
                    status="pass" if r.passed else "fail",
                    detail=r.detail,
                    seconds=r.seconds,
                )
                for r in results
            ],
            passed=all(r.passed for r in results),
        )

    @app.get("/schemas")
    def schemas_endpoint():
        from . import schemas

        return schemas.bundle()

    return app


def run_fock_checks(n: int, checks: Optional[List[str]], samples: int,
                    window: int, seed: int) -> List[models.FockReport]:
    """Run the named oracle checks; defaults to the fast trio."""
    known = {"degree", "bracket", "odd_symmetry", "primitive"}
    wanted = checks or ["degree", "bracket", "odd_symmetry"]
    unknown = set(wanted) - known
    if unknown:
        raise BadShape(f"unknown oracle checks: {sorted(unknown)}")
    reports: List[models.FockReport] = []
    import random as _random

    rng = _random.Random(seed)
    space = fock.FockSpace.of([Scalar.param("c")] + [0] * (n - 1))
    if "degree" in wanted:
        bad = []
        for _ in range(samples):
            nu = fock.random_monomial(space, rng).weight()
            if fock.weight_space_dim(Weight(space.base), nu) != 2 ** n or \
                    len(space.monomials_at(nu)) != 2 ** n:
                bad.append(str(nu))
        reports.append(models.FockReport(
            check="degree",
            status="pass" if not bad else "fail",
            detail=f"sampled {samples} support weights, dimension 2^{n}",
            witnesses=bad[:5],
        ))
    if "bracket" in wanted:
        gens = fock.simple_generators(n)
        bad = []
        for _ in range(samples):
            g = gens[rng.randrange(len(gens))]
            h = gens[rng.randrange(len(gens))]
            v = fock.random_monomial(space, rng, spread=2)
            if not fock.super_commutator_defect(g, h, v).is_zero():
                bad.append(str(v))
        reports.append(models.FockReport(
            check="bracket",
            status="pass" if not bad else "fail",
            detail=f"superbracket homomorphism on {samples} samples",
            witnesses=bad[:5],
        ))
    if "odd_symmetry" in wanted:
        rep = fock.check_odd_symmetry(n, samples=samples, seed=seed)
        reports.append(models.FockReport(
            check="odd_symmetry",
            status=rep["status"],
            detail=f"supercommutation and square on {samples} samples",
            witnesses=[w["witness"] for w in rep["witnesses"]],
        ))
    if "primitive" in wanted:
        space0 = fock.FockSpace.of([0] * n)
        one = fock.FockElement.monomial(space0, (0,) * n, ())
        v0 = fock.FockElement.monomial(space0, (-1,) + (0,) * (n - 1), (1,))
        v1 = fock.apply(fock.gen_f(n, 1), v0)
        prims = fock.find_primitive(space0, [one], v1.weight(), window=window)
        ok = bool(prims) and selftest.in_solution_span(space0, prims, [], v1)
        reports.append(models.FockReport(
            check="primitive",
            status="pass" if ok else "fail",
            detail=f"{len(prims)} primitive classes over the constants",
            witnesses=[str(p) for p in prims[:3]],
        ))
    return reports


app = create_app()
