from dataclasses import dataclass
from typing import List

import numpy as np

from cnorm.errors import NotContained
from cnorm.structures.groups import FiniteGroup, SubgroupSet
from cnorm.structures.subgroups.generation import generated, require_subgroup


@dataclass(frozen=True)
class SubnormalVerdict:
    """
    The outcome of a subnormality test by normal-closure descent.

    Attributes:
        is_subnormal: Whether the descent ended at the tested subgroup.
        defect: len(chain) - 1 when subnormal, else None.
        chain: The descent from the whole group to the tested subgroup, when
            subnormal; None otherwise.
        terminal: Where the descent stabilized.
    """

    is_subnormal: bool
    defect: int | None
    chain: List[SubgroupSet] | None
    terminal: SubgroupSet


def normalizer(g: FiniteGroup, h: SubgroupSet, check: bool = True) -> SubgroupSet:
    """
    N_G(H) = { x : x^-1 H x = H }.

    Args:
        g: The group.
        h: A subgroup of g.
        check: Whether to verify that h is a subgroup first.

    Raises:
        NotASubgroup: check is set and h is not closed.
    """
    if check:
        require_subgroup(g, h)
    # x^-1 H x is contained in H, and so equal to it, for every listed x.
    return SubgroupSet(h.members[g.conjugation_table[:, h.elements]].all(axis=1))


def normal_closure(g: FiniteGroup, h: SubgroupSet, ambient: SubgroupSet) -> SubgroupSet:
    """
    The smallest subgroup of ambient containing h and normal in ambient.

    Raises:
        NotContained: h is not a subset of ambient.
    """
    if not h.issubset(ambient):
        raise NotContained(f"{h!r} is not contained in {ambient!r}")
    conjugates = g.conjugation_table[np.ix_(ambient.elements, h.elements)]
    return generated(g, np.unique(conjugates))


def is_subnormal(g: FiniteGroup, h: SubgroupSet) -> SubnormalVerdict:
    """
    Test h for subnormality: K_0 = G, K_{i+1} = normal closure of h in K_i.

    The descent is strictly decreasing until it stabilizes, so it terminates;
    h is subnormal exactly when it stabilizes at h.
    """
    chain = [SubgroupSet.whole(g)]
    while True:
        following = normal_closure(g, h, chain[-1])
        if following == chain[-1]:
            break
        chain.append(following)
    terminal = chain[-1]
    if terminal == h:
        return SubnormalVerdict(True, len(chain) - 1, chain, terminal)
    return SubnormalVerdict(False, None, None, terminal)
