"""HTTP service wrapping the package: one endpoint per core operation.

The service is stateless except for the classifier's memo cache, which is
shared across requests so repeated classifications of isomorphic residuals
stay warm.  The CLI talks to this app (in-process by default, over the
network with --server), so every capability lives behind these endpoints.
"""

from __future__ import annotations

from fastapi import Body, FastAPI, HTTPException, Query
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel, Field

from . import __version__
from .classifier import Classifier, NonTernaryDetected, WedgeOfTwoSpheres, classify, cycle_homotopy_type
from .complexes import independence_complex
from .cycles import is_ternary
from .formats import parse_graph6
from .graphs import Graph, GraphError
from .harness import CHECK_ORDER, DEFAULT_SUBSET_SAMPLES, run_checks, verify_exhaustive, verify_stream
from .homology import classify_groups, reduced_homology


class GraphRequest(BaseModel):
    graph6: str = Field(..., description="one graph6 line", examples=["Dhc"])


class HomologyGroupModel(BaseModel):
    dim: int
    rank: int
    torsion: list[int]


class HomologyResponse(BaseModel):
    graph6: str
    n: int
    groups: list[HomologyGroupModel]
    betti: list[int]
    total_betti: int
    euler: int
    has_torsion: bool
    homology_class: str


class ClassifyResponse(BaseModel):
    graph6: str
    result: str  # "contractible" | "sphere" | "non-ternary"
    dim: int | None = None
    detail: str | None = None


class TernaryWitness(BaseModel):
    vertices: list[int]
    length: int


class TernaryResponse(BaseModel):
    graph6: str
    ternary: bool
    witness: TernaryWitness | None = None


class CycleTypeModel(BaseModel):
    length: int
    kind: str  # "sphere" | "wedge-of-two-spheres"
    dim: int


class CycleTypesResponse(BaseModel):
    cycles: list[CycleTypeModel]


class VerifyRequest(BaseModel):
    max_n: int = Field(..., ge=1, le=8)
    checks: list[str] | None = None
    jobs: int = Field(1, ge=1, le=64)
    seed: int = 0
    subset_samples: int = Field(DEFAULT_SUBSET_SAMPLES, ge=1)
    include_reports: bool = True


class ReportModel(BaseModel):
    g6: str
    n: int
    ternary: bool
    homotopy: str = Field(..., alias="class")
    betti: list[int]
    torsion: bool
    chi: int
    checks: dict[str, bool]
    witness: dict | None
    details: dict[str, str]

    model_config = {"populate_by_name": True}


class VerifyResponse(BaseModel):
    source: str
    checks: list[str]
    graphs: int
    ternary: int
    failures: int
    check_failures: dict[str, int]
    parse_errors: list[dict]
    generated_at: str
    reports: list[ReportModel] | None = None


def _parse(graph6: str) -> Graph:
    try:
        return parse_graph6(graph6)
    except GraphError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _verify_response(agg, include_reports: bool) -> VerifyResponse:
    reports = None
    if include_reports:
        reports = [ReportModel.model_validate(r.to_json_dict()) for r in agg.reports]
    return VerifyResponse(
        source=agg.source,
        checks=agg.checks,
        graphs=agg.n_graphs,
        ternary=agg.n_ternary,
        failures=agg.n_failures,
        check_failures=agg.check_failures,
        parse_errors=agg.parse_errors,
        generated_at=agg.generated_at,
        reports=reports,
    )


def create_app(classifier: Classifier | None = None) -> FastAPI:
    app = FastAPI(
        title="indcomp",
        version=__version__,
        description="Homotopy types of independence complexes of ternary graphs",
    )
    shared_classifier = classifier or Classifier()

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/homology", response_model=HomologyResponse)
    def homology(req: GraphRequest) -> HomologyResponse:
        g = _parse(req.graph6)
        groups = reduced_homology(independence_complex(g))
        return HomologyResponse(
            graph6=req.graph6,
            n=g.n,
            groups=[
                HomologyGroupModel(dim=i, rank=groups.rank(i), torsion=list(groups.torsion(i)))
                for i in range(-1, groups.top_dimension + 1)
            ],
            betti=groups.betti_vector,
            total_betti=groups.total_betti,
            euler=groups.euler,
            has_torsion=groups.has_torsion,
            homology_class=str(classify_groups(groups)),
        )

    @app.post("/classify", response_model=ClassifyResponse)
    def classify_endpoint(req: GraphRequest) -> ClassifyResponse:
        g = _parse(req.graph6)
        try:
            cls = classify(g, shared_classifier)
        except NonTernaryDetected as exc:
            return ClassifyResponse(graph6=req.graph6, result="non-ternary", detail=str(exc))
        if cls.is_contractible:
            return ClassifyResponse(graph6=req.graph6, result="contractible")
        return ClassifyResponse(graph6=req.graph6, result="sphere", dim=cls.sphere_dim)

    @app.post("/ternary", response_model=TernaryResponse)
    def ternary_endpoint(req: GraphRequest) -> TernaryResponse:
        g = _parse(req.graph6)
        ok, witness = is_ternary(g)
        model = None
        if witness is not None:
            model = TernaryWitness(vertices=list(witness.vertices), length=witness.length)
        return TernaryResponse(graph6=req.graph6, ternary=ok, witness=model)

    @app.get("/cycles", response_model=CycleTypesResponse)
    def cycles(max_length: int = Query(..., ge=3, le=10_000)) -> CycleTypesResponse:
        out = []
        for length in range(3, max_length + 1):
            t = cycle_homotopy_type(length)
            if isinstance(t, WedgeOfTwoSpheres):
                out.append(CycleTypeModel(length=length, kind="wedge-of-two-spheres", dim=t.dim))
            else:
                out.append(CycleTypeModel(length=length, kind="sphere", dim=t.sphere_dim))
        return CycleTypesResponse(cycles=out)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        try:
            agg = verify_exhaustive(
                req.max_n,
                req.checks,
                jobs=req.jobs,
                seed=req.seed,
                subset_samples=req.subset_samples,
            )
        except (GraphError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return _verify_response(agg, req.include_reports)

    @app.post("/verify/stream", response_model=VerifyResponse)
    def verify_stream_endpoint(
        body: str = Body(..., media_type="text/plain"),
        checks: str | None = Query(None, description="comma-separated subset of checks"),
        seed: int = Query(0),
        subset_samples: int = Query(DEFAULT_SUBSET_SAMPLES, ge=1),
        include_reports: bool = Query(True),
    ) -> VerifyResponse:
        selected = None
        if checks:
            selected = [c.strip() for c in checks.split(",") if c.strip()]
        try:
            agg = verify_stream(
                body.splitlines(), selected, seed=seed, subset_samples=subset_samples
            )
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return _verify_response(agg, include_reports)

    @app.get("/checks", response_model=list[str])
    def checks_endpoint() -> list[str]:
        return list(CHECK_ORDER)

    return app


app = create_app()
