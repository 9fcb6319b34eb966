import logging
from typing import Iterable, List

import numpy as np

from cnorm import settings
from cnorm.errors import BadParameter, NotASubgroup
from cnorm.structures.groups import FiniteGroup, SubgroupSet

logger = logging.getLogger(__name__)


def generated(g: FiniteGroup, seeds: Iterable[int]) -> SubgroupSet:
    """
    The smallest subgroup containing the seeds.

    In a finite group the monoid generated by the seeds is already a group, so
    right multiplication by the seeds from the identity reaches everything.
    """
    seeds = np.unique(np.fromiter(seeds, dtype=np.int64))
    members = np.zeros(g.order, dtype=bool)
    members[g.identity] = True
    frontier = np.array([g.identity])
    while len(frontier) and len(seeds):
        products = np.unique(g.table[np.ix_(frontier, seeds)])
        frontier = products[~members[products]]
        members[frontier] = True
    return SubgroupSet(members)


def intersect(a: SubgroupSet, b: SubgroupSet) -> SubgroupSet:
    """The intersection of two subgroups of the same parent."""
    a.check_parent(b)
    return SubgroupSet(a.members & b.members)


def is_subgroup(g: FiniteGroup, members: np.ndarray) -> bool:
    """Whether a nonempty membership set contains the identity and is closed under products."""
    members = np.asarray(members, dtype=bool)
    if len(members) != g.order or not members[g.identity]:
        return False
    elements = np.flatnonzero(members)
    return bool(members[g.table[np.ix_(elements, elements)]].all())


def require_subgroup(g: FiniteGroup, h: SubgroupSet) -> None:
    if not is_subgroup(g, h.members):
        raise NotASubgroup(f"{h!r} is not closed in a group of order {g.order}")


def derived_subgroup(g: FiniteGroup, h: SubgroupSet) -> SubgroupSet:
    """[H, H], generated by the commutators of members of h."""
    commutators = g.commutator_table[np.ix_(h.elements, h.elements)]
    return generated(g, np.unique(commutators))


def cyclic_subgroups(g: FiniteGroup) -> List[SubgroupSet]:
    """The distinct cyclic subgroups of g, in order of their least generator."""
    found = {}
    for x in range(g.order):
        cyclic = generated(g, [x])
        found.setdefault(cyclic, None)
    return list(found)


def all_subgroups(g: FiniteGroup) -> List[SubgroupSet]:
    """
    Every subgroup of g, by closing the cyclic subgroups under pairwise joins.

    Only attempted for small groups (settings.exhaustive_subgroup_limit).

    Returns:
        The subgroups sorted by order, then by member indices.

    Raises:
        BadParameter: The group is too large to enumerate.
    """
    if g.order > settings.exhaustive_subgroup_limit:
        raise BadParameter(
            f"full subgroup enumeration is limited to order "
            f"{settings.exhaustive_subgroup_limit}, got {g.order}"
        )
    known = set(cyclic_subgroups(g))
    frontier = list(known)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(known):
                join = generated(g, np.concatenate((a.elements, b.elements)))
                if join not in known:
                    known.add(join)
                    fresh.append(join)
        frontier = fresh
    logger.debug("Enumerated %s subgroups of a group of order %s.", len(known), g.order)
    return sorted(known, key=lambda h: (h.size, h.to_list()))
