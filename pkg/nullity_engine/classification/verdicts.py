"""
Result types of the nullity classifiers.
"""

from dataclasses import dataclass
from enum import Enum

from nullity_engine.utils.numeric import format_number


class Verdict(str, Enum):
    NULL = 'Null'
    NOT_NULL = 'NotNull'
    UNKNOWN = 'Unknown'


class Justification(str, Enum):
    HAUSDORFF_BELOW = 'HausdorffBelow'
    HAUSDORFF_ABOVE = 'HausdorffAbove'
    CANTOR_SERIES = 'CantorSeries'
    ZOO_CLOSED_FORM = 'ZooClosedForm'
    MEASURE_POSITIVE = 'MeasurePositive'
    EMPTY_INTERIOR_HIGH_S = 'EmptyInteriorHighS'
    DELTA_LOW_S = 'DeltaLowS'
    CHEESE_CERTIFICATE = 'CheeseCertificate'
    BOUNDARY_FACT = 'BoundaryFact'
    PRODUCT_BOUND = 'ProductBound'
    FOURIER_MEMBERSHIP = 'FourierMembership'
    UNION = 'Union'
    BASIC = 'Basic'


@dataclass(frozen=True)
class NullityVerdict:
    """
    Three-valued answer to "is E (s,p)-null?".

    Unknown verdicts carry no justification tag; ``detail`` says why no rule
    applied.
    """

    verdict: Verdict
    justification: Justification = None
    detail: str = ''
    s: object = None
    p: object = None
    family: str = None

    def __post_init__(self):
        if self.verdict is Verdict.UNKNOWN and self.justification is not None:
            raise ValueError("an Unknown verdict cannot carry a justification")
        if self.verdict is not Verdict.UNKNOWN and self.justification is None:
            raise ValueError(f"a {self.verdict.value} verdict needs a justification")

    @classmethod
    def null(cls, justification, detail='', **context):
        return cls(Verdict.NULL, justification, detail, **context)

    @classmethod
    def not_null(cls, justification, detail='', **context):
        return cls(Verdict.NOT_NULL, justification, detail, **context)

    @classmethod
    def unknown(cls, detail='', **context):
        return cls(Verdict.UNKNOWN, None, detail, **context)

    @property
    def is_null(self):
        return self.verdict is Verdict.NULL

    @property
    def is_not_null(self):
        return self.verdict is Verdict.NOT_NULL

    def to_dict(self):
        return {
            'verdict': self.verdict.value,
            'justification': self.justification.value if self.justification else None,
            'detail': self.detail,
            's': None if self.s is None else format_number(self.s),
            'p': None if self.p is None else format_number(self.p),
            'family': self.family,
        }


class ConvergenceOutcome(str, Enum):
    CONVERGES = 'Converges'
    DIVERGES = 'Diverges'
    INCONCLUSIVE = 'Inconclusive'


@dataclass(frozen=True)
class ConvergenceVerdict:
    """
    Outcome of a numeric series test.

    Attributes:
        outcome (ConvergenceOutcome): What the test concluded
        last_index (int): Largest term index examined
        test (str): ``'term'``, ``'ratio'``, ``'log-comparison'`` or ``'insufficient'``
        measured_ratio (float): Extrapolated limiting ratio of consecutive terms
    """

    outcome: ConvergenceOutcome
    last_index: int
    test: str
    measured_ratio: float = None

    @property
    def converges(self):
        return self.outcome is ConvergenceOutcome.CONVERGES

    @property
    def diverges(self):
        return self.outcome is ConvergenceOutcome.DIVERGES
