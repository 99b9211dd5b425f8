"""
Pydantic models for the CLI's JSON output.

Rationals always cross this boundary as "a/b" strings.
"""
from typing import List, Optional

from pydantic import BaseModel

from ..arith.rational import format_rational
from ..arith.unipoly import UniPoly
from ..gadgets.gadget import Gadget
from ..reduction.sign_reduction import ReductionParams, ReductionReport
from ..regions.classifier import PointClass
from ..regions.point import PlanePoint
from ..signs.dispatch import SignReport


class PointOut(BaseModel):
    x: str
    y: str
    q: str

    @classmethod
    def from_point(cls, p: PlanePoint) -> "PointOut":
        return cls(x=format_rational(p.x), y=format_rational(p.y), q=format_rational(p.q))


class PointClassOut(BaseModel):
    x: str
    y: str
    q: str
    region: str
    status: str
    rule: int
    evidence: str

    @classmethod
    def from_domain(cls, p: PlanePoint, point_class: PointClass) -> "PointClassOut":
        return cls(**PointOut.from_point(p).model_dump(), region=point_class.region.value,
                   status=point_class.status.value, rule=point_class.rule, evidence=point_class.evidence)


class SignReportOut(BaseModel):
    x: str
    y: str
    q: str
    sign: str
    method: str
    certificate: Optional[str] = None
    region: Optional[str] = None

    @classmethod
    def from_domain(cls, p: PlanePoint, report: SignReport) -> "SignReportOut":
        return cls(**PointOut.from_point(p).model_dump(), sign=report.sign.label, method=report.method,
                   certificate=report.certificate,
                   region=report.region.value if report.region is not None else None)


class PolynomialOut(BaseModel):
    kind: str
    coefficients: List[str]  # constant term first
    polynomial: str

    @classmethod
    def from_domain(cls, kind: str, poly: UniPoly) -> "PolynomialOut":
        return cls(kind=kind, coefficients=poly.coefficient_strings(), polynomial=poly.pretty())


class ImplementedPointOut(BaseModel):
    x: str
    y: str
    q: str
    vertices: int
    edges: int

    @classmethod
    def from_domain(cls, p: PlanePoint, gadget: Gadget) -> "ImplementedPointOut":
        return cls(**PointOut.from_point(p).model_dump(), vertices=gadget.graph.vertex_count,
                   edges=gadget.edge_count)


class GadgetOut(BaseModel):
    construction: str
    start: PointOut
    points: List[ImplementedPointOut]


class ReductionParamsOut(BaseModel):
    M: str
    h: int
    eps_lo: str
    eps_hi: str
    delta: str
    rho: str
    precision: str

    @classmethod
    def from_domain(cls, params: ReductionParams) -> "ReductionParamsOut":
        return cls(M=format_rational(params.M), h=params.h, eps_lo=format_rational(params.eps_lo),
                   eps_hi=format_rational(params.eps_hi), delta=format_rational(params.delta),
                   rho=format_rational(params.rho), precision=format_rational(params.precision))


class ReductionOut(BaseModel):
    k: int
    C: int
    q: str
    mode: str
    schedule: str
    queries: int
    steps: int
    bracket: List[str]
    params: ReductionParamsOut

    @classmethod
    def from_domain(cls, q, report: ReductionReport) -> "ReductionOut":
        return cls(k=report.count.k, C=report.count.C, q=format_rational(q), mode=report.mode,
                   schedule=report.schedule, queries=report.queries, steps=report.steps,
                   bracket=[format_rational(value) for value in report.bracket],
                   params=ReductionParamsOut.from_domain(report.params))
