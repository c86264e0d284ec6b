"""
JSON report schemas for command output.

Rationals are serialized as canonical "p/q" strings, never as floats.
"""

from fractions import Fraction
from typing import List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from ..core.matrix import RatMatrix
from ..core.models import EquilibriumRecord, NashSubset
from ..oracle.verify import NashCheck

Rational = str


def q(value: Fraction) -> Rational:
    return str(value)


def qvec(values: Sequence[Fraction]) -> List[Rational]:
    return [str(v) for v in values]


def qmat(M: RatMatrix) -> List[List[Rational]]:
    return [qvec(M.row(i)) for i in range(M.rows)]


class Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


class EquilibriumReport(Report):
    command: str = "solve"
    x: List[Rational]
    y: List[Rational]
    payoff_1: Rational
    payoff_2: Rational
    lambda_: Rational = Field(alias="lambda")
    iterations: int

    @classmethod
    def from_record(cls, record: EquilibriumRecord) -> "EquilibriumReport":
        return cls(
            x=qvec(record.profile.x),
            y=qvec(record.profile.y),
            payoff_1=q(record.payoff_1),
            payoff_2=q(record.payoff_2),
            lambda_=q(record.lam),
            iterations=record.iterations,
        )


class SubsetReport(Report):
    kind: str
    lambda_lower: Rational
    lambda_upper: Rational
    x_vertices: List[List[Rational]]
    y_vertices: List[List[Rational]]
    rows: List[int] = Field(description="true inequality rows M, 0-based")
    cols: List[int] = Field(description="true inequality columns N, 0-based")

    @classmethod
    def from_subset(cls, subset: NashSubset) -> "SubsetReport":
        return cls(
            kind=subset.kind.value,
            lambda_lower=q(subset.lambda_set.lower),
            lambda_upper=q(subset.lambda_set.upper),
            x_vertices=[qvec(x) for x in subset.x_vertices],
            y_vertices=[qvec(y) for y in subset.y_vertices],
            rows=sorted(subset.defining_trueineq.rows),
            cols=sorted(subset.defining_trueineq.cols),
        )


class EnumerationReport(Report):
    command: str = "enumerate"
    m: int
    n: int
    count: int
    subsets: List[SubsetReport]


class CertificateReport(Report):
    payoffs: List[Rational]
    best_value: Rational
    best_responses: List[int]
    support_ok: List[bool]


class CheckReport(Report):
    command: str = "check"
    is_equilibrium: bool
    u: Rational
    v: Rational
    qp_value: Rational
    row: CertificateReport
    col: CertificateReport

    @classmethod
    def from_check(cls, check: NashCheck, qp: Fraction) -> "CheckReport":
        def cert(c) -> CertificateReport:
            return CertificateReport(
                payoffs=qvec(c.payoff_vector),
                best_value=q(c.best_value),
                best_responses=list(c.best_responses()),
                support_ok=list(c.support_ok),
            )
        return cls(
            is_equilibrium=check.is_equilibrium,
            u=q(check.u),
            v=q(check.v),
            qp_value=q(qp),
            row=cert(check.row),
            col=cert(check.col),
        )


class RankReport(Report):
    command: str = "rank"
    m: int
    n: int
    rank: int
    a: Optional[List[Rational]] = None
    b: Optional[List[Rational]] = None


class HomeoReport(Report):
    command: str = "homeo"
    map: str
    C: List[List[Rational]]
    D: List[List[Rational]]
    A: List[List[Rational]]
    B: List[List[Rational]]
    x: List[Rational]
    y: List[Rational]
    round_trip_exact: bool
    sum_preserved: Optional[bool] = None
    image_is_equilibrium: bool


class ErrorReport(Report):
    error: str
    message: str
    exit_code: int
