"""HTTP endpoints wrapping the core toolkit."""

from __future__ import annotations

import dataclasses

from fastapi import APIRouter, HTTPException

from .. import __version__
from ..algebra import SpectralPoint, Term, simplify
from ..checks import (
    chain_suite,
    intersection_families,
    intersection_suite,
    label_roundtrip_suite,
    make_report,
    maximal_commutator_suite,
    relation_suite,
    report_all,
    summarize,
)
from ..config import RunConfig
from ..dsl import ParseError, parse, parse_scalar, parse_vector, format_term, term_to_json
from ..exact import frac
from ..ideals import (
    intersection_element,
    kernel_membership,
    maximal_ideal_membership,
    verdict_for,
)
from ..representations import CharacterRep, IrrepLabel, RepFamily, extract_label
from ..symplectic import Subspace, SympSpace
from . import models

router = APIRouter()


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


def _config(dim: int, seed: int = 0, overrides=None) -> RunConfig:
    kwargs = {"dim": dim, "seed": seed}
    if overrides is not None:
        kwargs.update(overrides.overrides())
    try:
        return RunConfig(**kwargs)
    except ValueError as exc:
        raise _bad_request(exc)


def _parse_label(dim: int, spec: models.LabelSpec) -> IrrepLabel:
    try:
        vectors = [parse_vector(v, dim) for v in spec.vectors]
        Y = Subspace.span(dim, vectors)
        phi = [frac(v) for v in spec.phi]
        return IrrepLabel.build(Y, phi)
    except (ParseError, ValueError) as exc:
        raise _bad_request(exc)


def _reports_response(reports: list[dict]) -> dict:
    return {"reports": reports, "summary": summarize(reports)}


@router.get("/health", response_model=models.HealthResponse)
def health() -> dict:
    return {"status": "ok", "version": __version__}


@router.post("/simplify", response_model=models.SimplifyResponse)
def simplify_endpoint(req: models.SimplifyRequest) -> dict:
    try:
        term = parse(req.expr, dim=req.dim)
    except ParseError as exc:
        raise _bad_request(exc)
    result = simplify(term, budget=req.budget, degree_cap=req.degree_cap)
    return {
        "text": format_term(result.term),
        "term": term_to_json(result.term),
        "complete": result.complete,
        "steps": result.steps,
        "capped": result.capped,
    }


@router.post("/relations/check", response_model=models.ReportsResponse)
def relations_endpoint(req: models.RelationsRequest) -> dict:
    cfg = _config(req.dim, req.seed, req.config)
    reports = relation_suite(
        cfg,
        dim=req.dim,
        seed=req.seed,
        instances=req.instances,
        schedule=req.schedule,
    )
    return _reports_response(reports)


@router.post("/labels/build", response_model=models.LabelBuildResponse)
def labels_build(req: models.LabelBuildRequest) -> dict:
    label = _parse_label(req.dim, req.label)
    character_values = {}
    for g in label.phi.domain.basis_vectors():
        character_values[str(g)] = str(label.chi(1, g))
    return {
        "ambient": label.ambient,
        "subspace": label.Y.to_json(),
        "radical": label.phi.domain.to_json(),
        "phi": label.phi.to_json(),
        "character_values": character_values,
    }


@router.post("/labels/extract", response_model=models.LabelExtractResponse)
def labels_extract(req: models.LabelExtractRequest) -> dict:
    cfg = _config(req.dim, overrides=req.config)
    label = _parse_label(req.dim, req.label)
    space = SympSpace(req.dim)
    try:
        probes = (
            [parse_vector(v, req.dim) for v in req.probes]
            if req.probes
            else space.basis()
        )
    except ParseError as exc:
        raise _bad_request(exc)
    extracted = extract_label(
        RepFamily.labeled(label), probes, cfg, schedule=req.schedule
    )
    return {
        "subspace": extracted.Y.to_json(),
        "radical": extracted.radical.to_json(),
        "phi": list(extracted.phi_values),
        "probe_tags": list(extracted.probe_tags),
        "inconclusive": list(extracted.inconclusive),
    }


@router.post("/labels/roundtrip", response_model=models.ReportsResponse)
def labels_roundtrip(req: models.RoundtripRequest) -> dict:
    cfg = _config(req.dim, overrides=req.config)
    label = _parse_label(req.dim, req.label)
    space = SympSpace(req.dim)
    try:
        probes = (
            [parse_vector(v, req.dim) for v in req.probes]
            if req.probes
            else space.basis()
        )
    except ParseError as exc:
        raise _bad_request(exc)
    extracted = extract_label(RepFamily.labeled(label), probes, cfg)
    failures = []
    if extracted.Y != label.Y:
        failures.append("subspace mismatch")
    elif extracted.radical != label.phi.domain:
        failures.append("radical mismatch")
    else:
        for got, want in zip(extracted.phi_values, label.phi.values):
            if abs(got - float(want)) > req.tolerance:
                failures.append(f"functional value off by {abs(got - float(want)):.2e}")
    report = make_report(
        "labels:roundtrip",
        "build followed by extract recovers the label on the probe set",
        "pass" if not failures else "fail",
        dim=req.dim,
        recovered_subspace=extracted.Y.to_json(),
        recovered_phi=list(extracted.phi_values),
        tolerance=req.tolerance,
        failures=failures,
    )
    return _reports_response([report])


@router.post("/chain", response_model=models.ReportsResponse)
def chain_endpoint(req: models.ChainRequest) -> dict:
    for dim in req.dims + req.exhaustive_dims:
        if dim % 2 or not 2 <= dim <= 8:
            raise _bad_request(ValueError(f"unsupported dimension {dim}"))
    cfg = _config(min(req.dims) if req.dims else 2, overrides=req.config)
    reports = chain_suite(cfg, dims=req.dims, exhaustive_dims=req.exhaustive_dims)
    return _reports_response(reports)


@router.post("/ideals/membership", response_model=models.MembershipResponse)
def membership_endpoint(req: models.MembershipRequest) -> dict:
    cfg = _config(req.dim, overrides=req.config)
    label = _parse_label(req.dim, req.label)
    try:
        term = parse(req.expr, dim=req.dim)
    except ParseError as exc:
        raise _bad_request(exc)
    verdict = kernel_membership(label, term, cfg, schedule=req.schedule)
    return {"verdict": dataclasses.asdict(verdict)}


@router.post("/ideals/intersection", response_model=models.ReportsResponse)
def intersection_endpoint(req: models.IntersectionRequest) -> dict:
    cfg = _config(req.dim, req.seed, req.config)
    if req.specs is None:
        return _reports_response(intersection_suite(cfg, seed=req.seed, cases=req.cases))
    try:
        points = [
            SpectralPoint(
                frac(parse_scalar(s.lam).re),
                parse_vector(s.vector, req.dim),
                parse_scalar(s.rho),
            )
            for s in req.specs
        ]
    except (ParseError, ValueError) as exc:
        raise _bad_request(exc)
    space = SympSpace(req.dim)
    fams = intersection_families(space, points)
    orders = [points, list(reversed(points))]
    agree = True
    verdicts = []
    for fam in fams:
        statuses = []
        for order in orders:
            verdict = verdict_for(fam, intersection_element(order), cfg)
            statuses.append(verdict.status)
        verdicts.append({"family": fam.name, "statuses": statuses})
        if len(set(statuses)) > 1:
            agree = False
    report = make_report(
        "ideals:intersection-order",
        "products of centered resolvents generate the intersection in any order",
        "pass" if agree else "fail",
        factors=len(points),
        verdicts=verdicts,
    )
    return _reports_response([report])


@router.post("/ideals/maximal", response_model=models.MaximalResponse)
def maximal_endpoint(req: models.MaximalRequest) -> dict:
    try:
        vectors = [parse_vector(v, req.dim) for v in req.support]
        Z = Subspace.span(req.dim, vectors)
        char = CharacterRep.build(Z, [frac(v) for v in req.phi])
        term = parse(req.expr, dim=req.dim)
    except (ParseError, ValueError) as exc:
        raise _bad_request(exc)
    return {"member": maximal_ideal_membership(char.Z, char.phi, term)}


@router.post("/ideals/commutator", response_model=models.ReportsResponse)
def commutator_endpoint(req: models.CommutatorRequest) -> dict:
    cfg = _config(req.dim, req.seed, req.config)
    reports = maximal_commutator_suite(cfg, seed=req.seed, samples=req.samples)
    return _reports_response(reports)


@router.post("/reports/all", response_model=models.ReportsResponse)
def report_all_endpoint(req: models.ReportAllRequest) -> dict:
    cfg = _config(req.dim, req.seed, req.config)
    return report_all(cfg)


@router.post("/labels/roundtrip/suite", response_model=models.ReportsResponse)
def roundtrip_suite_endpoint(req: models.ReportAllRequest) -> dict:
    cfg = _config(req.dim, req.seed, req.config)
    return _reports_response(label_roundtrip_suite(cfg))
