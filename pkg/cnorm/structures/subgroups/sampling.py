import logging
from itertools import combinations
from typing import Iterable, List

from cnorm import settings
from cnorm.structures.groups import FiniteGroup, SubgroupSet, conjugacy_classes
from cnorm.structures.subgroups.generation import (
    all_subgroups,
    cyclic_subgroups,
    generated,
)

logger = logging.getLogger(__name__)


def sampled_subgroups(
    g: FiniteGroup, extra: Iterable[SubgroupSet] = ()
) -> List[SubgroupSet]:
    """
    The structurally relevant subgroups used for universally quantified checks.

    Every cyclic subgroup, every subgroup generated by a pair of conjugacy
    class representatives, the whole group, and the extra subgroups supplied
    by the caller (center, derived subgroup, series terms). Duplicates are
    dropped; first occurrence wins.
    """
    found = dict.fromkeys(cyclic_subgroups(g))
    representatives = [int(members[0]) for members in conjugacy_classes(g)]
    for x, y in combinations(representatives, 2):
        found.setdefault(generated(g, [x, y]), None)
    found.setdefault(SubgroupSet.whole(g), None)
    for h in extra:
        found.setdefault(h, None)
    logger.debug("Sampled %s subgroups of a group of order %s.", len(found), g.order)
    return list(found)


def subgroups_for_checks(
    g: FiniteGroup, extra: Iterable[SubgroupSet] = (), exhaustive: bool = False
) -> tuple[List[SubgroupSet], bool]:
    """
    The subgroups a check should quantify over.

    Returns:
        The subgroups, and whether they are every subgroup of g. Exhaustive
        enumeration is used only when requested and the order permits it.
    """
    if exhaustive and g.order <= settings.exhaustive_subgroup_limit:
        return all_subgroups(g), True
    return sampled_subgroups(g, extra), False
