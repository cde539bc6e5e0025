"""
Zoo Service - checks the Cantor classifier against the committed golden table

Each golden row names a zoo family with its (d, p*), a dimension n, an
integrability p and a rule for s: the dimension threshold (d-n)/p' or the
interior threshold n/p, each shifted by an offset. Expected verdicts are
derived from the closed-form thresholds, not recomputed by the classifier.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property

import pandas as pd

from nullity_engine.classification import SobolevIndex, classify_cantor
from nullity_engine.conf import get_config
from nullity_engine.exceptions import ConfigurationError
from nullity_engine.fractal_sets import CantorFamily, make_cantor
from nullity_engine.utils.numeric import to_fraction

logger = logging.getLogger(__name__)

GOLDEN_COLUMNS = ('family', 'd', 'p_star', 'n', 'p', 's_rule', 's_offset', 'expected')
S_RULES = ('threshold', 'n_over_p')


@dataclass(frozen=True)
class ZooCase:
    family: CantorFamily
    d: object
    p_star: object
    n: int
    p: object
    s_rule: str
    s_offset: object
    expected: str

    @classmethod
    def from_record(cls, record):
        try:
            family = CantorFamily(record['family'])
            if not family.is_zoo:
                raise ConfigurationError(f"{family.label} is not a zoo family")
            if record['s_rule'] not in S_RULES:
                raise ConfigurationError(f"unknown s_rule {record['s_rule']!r}")
            p_star = to_fraction(record['p_star']) if record['p_star'] else None
            return cls(
                family, to_fraction(record['d']), p_star, int(record['n']),
                to_fraction(record['p']), record['s_rule'], to_fraction(record['s_offset']),
                record['expected'],
            )
        except (KeyError, ValueError, ZeroDivisionError) as exc:
            raise ConfigurationError(f"malformed golden row {record}: {exc}") from exc

    @cached_property
    def index(self):
        p_conj = self.p / (self.p - 1)
        if self.s_rule == 'threshold':
            base = (self.d - self.n) / p_conj
        else:
            base = self.n / self.p
        return SobolevIndex(base + self.s_offset, self.p)

    def spec(self):
        values = {'d': self.d, 'p_star': self.p_star}
        params = {name: values[name] for name in self.family.required_params}
        return make_cantor(self.family, params, self.n)

    def to_row(self):
        return {
            'family': self.family.value, 'd': self.d, 'p_star': self.p_star, 'n': self.n,
            'p': self.p, 's_rule': self.s_rule, 's_offset': self.s_offset, 's': self.index.s,
            'expected': self.expected,
        }


@dataclass(frozen=True)
class ZooOutcome:
    case: ZooCase
    verdict: object

    @property
    def matches(self):
        return self.verdict.verdict.value == self.case.expected

    def to_row(self):
        return {
            **self.case.to_row(),
            'verdict': self.verdict.verdict.value,
            'justification': self.verdict.justification,
            'match': self.matches,
        }


@dataclass(frozen=True)
class ZooReport:
    outcomes: tuple

    @property
    def mismatches(self):
        return tuple(outcome for outcome in self.outcomes if not outcome.matches)

    @property
    def passed(self):
        return not self.mismatches

    def rows(self):
        return [outcome.to_row() for outcome in self.outcomes]


class ZooService:
    """
    Service for running the zoo truth table
    """

    def __init__(self, table_path=None, threads=None):
        config = get_config('EXPERIMENT_CONFIG')
        self.table_path = table_path or config['golden_table']
        self.threads = max(1, int(threads or config['threads']))

    def load_cases(self, filters=None):
        """
        Read the golden table, optionally keeping only rows whose columns take
        one of the listed values.

        Args:
            filters (dict, optional): e.g. ``{'family': ['e_d'], 'n': [1]}``

        Returns:
            list: ZooCase per kept row, in file order
        """
        if not self.table_path:
            raise ConfigurationError('no golden table configured')
        try:
            frame = pd.read_csv(self.table_path, dtype=str, keep_default_na=False)
        except FileNotFoundError as exc:
            raise ConfigurationError(f"golden table {self.table_path} not found") from exc
        missing = [column for column in GOLDEN_COLUMNS if column not in frame.columns]
        if missing:
            raise ConfigurationError(f"golden table lacks columns {', '.join(missing)}")

        cases = [ZooCase.from_record(record) for record in frame.to_dict('records')]
        for column, allowed in (filters or {}).items():
            if column not in GOLDEN_COLUMNS:
                raise ConfigurationError(f"cannot filter on {column!r}")
            if column == 'family':
                wanted = {CantorFamily(value) for value in allowed}
            elif column in ('s_rule', 'expected'):
                wanted = set(allowed)
            elif column == 'n':
                wanted = {int(value) for value in allowed}
            else:
                wanted = {to_fraction(value) for value in allowed}
            cases = [case for case in cases if getattr(case, column) in wanted]
        logger.info(f"loaded {len(cases)} zoo cases from {self.table_path}")
        return cases

    @staticmethod
    def classify_case(case):
        return ZooOutcome(case, classify_cantor(case.spec(), case.n, case.index))

    def run(self, cases=None):
        """
        Classify every case; output order follows input order whatever the
        thread count.

        Returns:
            ZooReport: Outcomes and mismatches
        """
        cases = self.load_cases() if cases is None else list(cases)
        if self.threads == 1:
            outcomes = [self.classify_case(case) for case in cases]
        else:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                outcomes = list(pool.map(self.classify_case, cases))
        report = ZooReport(tuple(outcomes))
        if report.passed:
            logger.info(f"zoo truth table: all {len(outcomes)} verdicts match")
        else:
            first = report.mismatches[0]
            logger.warning(
                f"zoo truth table: {len(report.mismatches)} mismatches, first "
                f"{first.case.family.value} d={first.case.d} n={first.case.n} p={first.case.p} "
                f"s={first.case.index.s}: got {first.verdict.verdict.value}, "
                f"expected {first.case.expected}"
            )
        return report
