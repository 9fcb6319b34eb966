import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np
import pandas as pd

from cnorm.constants import series as kinds
from cnorm.errors import InternalInvariantViolated
from cnorm.structures.groups import FiniteGroup, SubgroupSet, is_normal, normal_witness, quotient
from cnorm.structures.series.norms import centralizer_norm
from cnorm.structures.subgroups import center, derived_subgroup, generated, is_subgroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesReport:
    """
    A subgroup series computed to stabilization.

    terms holds term 0 through term stabilized_at; the terminal term is not
    repeated. Every later term equals the terminal one.

    Attributes:
        kind: One of constants.series.ALL.
        terms: The distinct terms, term 0 first.
        stabilized_at: The least i with term i equal to term i+1.
        reaches_whole_group: Whether the terminal term is the whole group.
        reaches_trivial: Whether the terminal term is the trivial subgroup.

    Methods:
        term: Term i, for any i >= 0.
        orders: The orders of the stored terms.
    """

    kind: str
    terms: Tuple[SubgroupSet, ...]
    stabilized_at: int
    reaches_whole_group: bool
    reaches_trivial: bool

    @property
    def terminal(self) -> SubgroupSet:
        return self.terms[-1]

    @property
    def ascending(self) -> bool:
        return self.kind in kinds.ASCENDING

    def term(self, i: int) -> SubgroupSet:
        """Term i, clamped to the terminal term past stabilization."""
        return self.terms[min(i, self.stabilized_at)]

    def orders(self) -> List[int]:
        return [term.size for term in self.terms]

    def verdict(self) -> str:
        """The terminal verdict: reaches G, reaches 1, or stalls."""
        if self.ascending:
            return "reaches G" if self.reaches_whole_group else "stalls"
        return "reaches 1" if self.reaches_trivial else "stalls"


def c_step(g: FiniteGroup, term: SubgroupSet) -> SubgroupSet:
    """
    C_{i+1} from C_i: the preimage of C(G/C_i).

    Raises:
        InternalInvariantViolated: term is not normal in g.
    """
    if (witness := normal_witness(g, term)) is not None:
        raise InternalInvariantViolated(
            f"C-series term of order {term.size} is not normal, witness {witness}"
        )
    qmap = quotient(g, term)
    return qmap.preimage(centralizer_norm(qmap.quotient))


def upper_central_step(g: FiniteGroup, term: SubgroupSet) -> SubgroupSet:
    """Z_{i+1} from Z_i: the preimage of Z(G/Z_i)."""
    qmap = quotient(g, term)
    return qmap.preimage(center(qmap.quotient))


def lower_central_step(g: FiniteGroup, term: SubgroupSet) -> SubgroupSet:
    """[term, G]."""
    return generated(g, np.unique(g.commutator_table[term.elements]))


def derived_step(g: FiniteGroup, term: SubgroupSet) -> SubgroupSet:
    return derived_subgroup(g, term)


STEPS = {
    kinds.C_SERIES: c_step,
    kinds.UPPER_CENTRAL: upper_central_step,
    kinds.LOWER_CENTRAL: lower_central_step,
    kinds.DERIVED: derived_step,
}


def _iterate(kind: str, g: FiniteGroup, first: SubgroupSet) -> SeriesReport:
    """Apply the kind's step until two consecutive terms are equal as sets."""
    step = STEPS[kind]
    terms = [first]
    while True:
        following = step(g, terms[-1])
        if following == terms[-1]:
            break
        terms.append(following)
    terminal = terms[-1]
    logger.debug("%s stabilized at %s with orders %s.", kind, len(terms) - 1, [t.size for t in terms])
    return SeriesReport(
        kind, tuple(terms), len(terms) - 1, terminal.is_whole(), terminal.is_trivial()
    )


def c_series(g: FiniteGroup) -> SeriesReport:
    """
    C_0 = 1 and C_{i+1}/C_i = C(G/C_i), up to the terminal term C_inf.

    Raises:
        InternalInvariantViolated: A computed term is not normal in g.
    """
    return _iterate(kinds.C_SERIES, g, SubgroupSet.trivial(g))


def upper_central_series(g: FiniteGroup) -> SeriesReport:
    """Z_0 = 1 and Z_{i+1}/Z_i = Z(G/Z_i)."""
    return _iterate(kinds.UPPER_CENTRAL, g, SubgroupSet.trivial(g))


def lower_central_series(g: FiniteGroup) -> SeriesReport:
    """gamma_1 = G (stored as term 0) and gamma_{i+1} = [gamma_i, G]."""
    return _iterate(kinds.LOWER_CENTRAL, g, SubgroupSet.whole(g))


def derived_series(g: FiniteGroup) -> SeriesReport:
    """G^(0) = G and G^(i+1) = [G^(i), G^(i)]."""
    return _iterate(kinds.DERIVED, g, SubgroupSet.whole(g))


def follows_series(g: FiniteGroup, kind: str, terms: Sequence[SubgroupSet]) -> bool:
    """
    Whether terms is exactly the stored series of this kind: the right first
    term, each term one step from the last, and stable after the final term.
    """
    if not terms:
        return False
    first = SubgroupSet.whole(g) if kind in kinds.DESCENDING else SubgroupSet.trivial(g)
    if terms[0] != first:
        return False
    if not all(is_subgroup(g, term.members) and is_normal(g, term) for term in terms):
        return False
    step = STEPS[kind]
    for term, following in zip(terms, terms[1:]):
        if term == following or step(g, term) != following:
            return False
    return step(g, terms[-1]) == terms[-1]


SERIES = {
    kinds.C_SERIES: c_series,
    kinds.UPPER_CENTRAL: upper_central_series,
    kinds.LOWER_CENTRAL: lower_central_series,
    kinds.DERIVED: derived_series,
}


def is_nilpotent(g: FiniteGroup) -> bool:
    return upper_central_series(g).reaches_whole_group


def nilpotency_class(report: SeriesReport) -> int | None:
    """The class read off an upper central series, None when it stalls."""
    return report.stabilized_at if report.reaches_whole_group else None


def to_df(reports: Iterable[SeriesReport]) -> pd.DataFrame:
    """
    Export series reports to a dataframe, one row per series.

    Args:
        reports: The series reports to export.
    """
    reports = list(reports)
    data = {
        "series": [report.kind for report in reports],
        "orders": [", ".join(map(str, report.orders())) for report in reports],
        "stabilized_at": [report.stabilized_at for report in reports],
        "terminal": [report.verdict() for report in reports],
    }
    return pd.DataFrame(data)
