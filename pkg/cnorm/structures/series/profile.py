from dataclasses import asdict, dataclass

from cnorm.structures.groups import FiniteGroup
from cnorm.structures.series.series import (
    SeriesReport,
    c_series,
    derived_series,
    nilpotency_class,
    upper_central_series,
)
from cnorm.structures.subgroups import cyclic_subgroups, is_subnormal


@dataclass(frozen=True)
class GroupProfile:
    """
    The classification data of one group.

    Attributes:
        is_nilpotent: Whether the upper central series reaches G.
        nilpotency_class: Its stabilization index when it does.
        is_soluble: Whether the derived series reaches 1.
        derived_length: Its stabilization index when it does.
        c_length: The least n with C_n(G) = G, if any. The trivial group has
            c_length 0.
        is_baer: Whether every cyclic subgroup is subnormal.
    """

    is_nilpotent: bool
    nilpotency_class: int | None
    is_soluble: bool
    derived_length: int | None
    c_length: int | None
    is_baer: bool

    def to_json(self) -> dict:
        return asdict(self)


def is_baer(g: FiniteGroup) -> bool:
    return all(is_subnormal(g, h).is_subnormal for h in cyclic_subgroups(g))


def profile_from_series(
    upper: SeriesReport, derived: SeriesReport, c: SeriesReport, baer: bool
) -> GroupProfile:
    return GroupProfile(
        is_nilpotent=upper.reaches_whole_group,
        nilpotency_class=nilpotency_class(upper),
        is_soluble=derived.reaches_trivial,
        derived_length=derived.stabilized_at if derived.reaches_trivial else None,
        c_length=c.stabilized_at if c.reaches_whole_group else None,
        is_baer=baer,
    )


def profile(g: FiniteGroup) -> GroupProfile:
    return profile_from_series(
        upper_central_series(g), derived_series(g), c_series(g), is_baer(g)
    )
