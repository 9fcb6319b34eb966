import logging
from functools import cached_property
from typing import Dict, List, Tuple

import numpy as np

from cnorm import settings
from cnorm.constants import series as kinds
from cnorm.structures.groups import FiniteGroup, SubgroupSet
from cnorm.structures.series import commutators, norms
from cnorm.structures.series.profile import GroupProfile, is_baer, profile_from_series
from cnorm.structures.series.series import SERIES, SeriesReport
from cnorm.structures.subgroups import center, derived_subgroup, subgroups_for_checks

logger = logging.getLogger(__name__)


class GroupAnalysis:
    """
    Memoized series, norms and profile of one group.

    Every check run against the same group shares one GroupAnalysis, so each
    series and norm is computed once.

    Attributes:
        group: The group being analysed.
        name: Its display name.
        exhaustive: Whether subgroup checks should enumerate every subgroup when
            the order permits.

    Methods:
        series: A series report by kind.
        engel_depths: Engel depths up to a cap, memoized per cap.
    """

    def __init__(self, group: FiniteGroup, name: str = "G", exhaustive: bool = False):
        self.group = group
        self.name = name
        self.exhaustive = exhaustive
        self._series: Dict[str, SeriesReport] = {}
        self._depths: Dict[int, np.ndarray] = {}

    def __repr__(self) -> str:
        return f"GroupAnalysis({self.name}, order={self.group.order})"

    def series(self, kind: str) -> SeriesReport:
        if kind not in self._series:
            self._series[kind] = SERIES[kind](self.group)
        return self._series[kind]

    @property
    def c_series(self) -> SeriesReport:
        return self.series(kinds.C_SERIES)

    @property
    def upper_central(self) -> SeriesReport:
        return self.series(kinds.UPPER_CENTRAL)

    @property
    def lower_central(self) -> SeriesReport:
        return self.series(kinds.LOWER_CENTRAL)

    @property
    def derived(self) -> SeriesReport:
        return self.series(kinds.DERIVED)

    @cached_property
    def center(self) -> SubgroupSet:
        return center(self.group)

    @cached_property
    def derived_subgroup(self) -> SubgroupSet:
        return derived_subgroup(self.group, SubgroupSet.whole(self.group))

    @cached_property
    def centralizer_norm(self) -> SubgroupSet:
        return norms.centralizer_norm(self.group)

    @cached_property
    def baer_norm(self) -> SubgroupSet:
        return norms.baer_norm(self.group)

    @cached_property
    def is_baer(self) -> bool:
        return is_baer(self.group)

    @cached_property
    def profile(self) -> GroupProfile:
        return profile_from_series(
            self.upper_central, self.derived, self.c_series, self.is_baer
        )

    @property
    def engel_cap(self) -> int:
        """2 * (C-series stabilization index) + settings.engel_padding."""
        return 2 * self.c_series.stabilized_at + settings.engel_padding

    def engel_depths(self, cap: int | None = None) -> np.ndarray:
        cap = self.engel_cap if cap is None else cap
        if cap not in self._depths:
            self._depths[cap] = commutators.engel_depths(self.group, cap)
        return self._depths[cap]

    @cached_property
    def subgroups(self) -> Tuple[List[SubgroupSet], bool]:
        """
        The subgroups universally quantified checks run over, and whether they
        are every subgroup of the group.
        """
        extra = [
            self.center,
            self.derived_subgroup,
            self.centralizer_norm,
            self.baer_norm,
            *self.c_series.terms,
            *self.upper_central.terms,
        ]
        return subgroups_for_checks(self.group, extra, self.exhaustive)
