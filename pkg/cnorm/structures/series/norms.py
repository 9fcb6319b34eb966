"""
The centralizer norm C(G) and Baer's norm B_1(G).

C(G) is the intersection of the normalizers N_G(C_G(a)) over all a in G, and
B_1(G) is the intersection of the normalizers of all subgroups.
"""

import logging
from functools import reduce
from typing import Iterable

import numpy as np

from cnorm import settings
from cnorm.errors import BadParameter, InternalInvariantViolated
from cnorm.structures.groups import FiniteGroup, SubgroupSet, conjugacy_classes
from cnorm.structures.subgroups import (
    all_subgroups,
    centralizer,
    cyclic_subgroups,
    normalizer,
)

logger = logging.getLogger(__name__)


def _intersection(g: FiniteGroup, subgroups: Iterable[SubgroupSet]) -> SubgroupSet:
    members = reduce(
        np.logical_and,
        (h.members for h in subgroups),
        np.ones(g.order, dtype=bool),
    )
    return SubgroupSet(members)


def normal_core(g: FiniteGroup, h: SubgroupSet) -> SubgroupSet:
    """The largest normal subgroup of g inside h: the intersection of its conjugates."""
    return SubgroupSet(h.members[g.conjugation_table].all(axis=0))


def centralizer_norm_naive(g: FiniteGroup) -> SubgroupSet:
    """C(G) straight from its definition, one normalizer per element."""
    return _intersection(
        g, (normalizer(g, centralizer(g, a), check=False) for a in g.elements())
    )


def centralizer_norm_classwise(g: FiniteGroup) -> SubgroupSet:
    """
    C(G) from one element per conjugacy class.

    C_G(x^t) = C_G(x)^t, so the normalizers belonging to a whole class are the
    conjugates of one of them, and their intersection is its normal core.
    """
    return _intersection(
        g,
        (
            normal_core(g, normalizer(g, centralizer(g, int(members[0])), check=False))
            for members in conjugacy_classes(g)
        ),
    )


def centralizer_norm(g: FiniteGroup) -> SubgroupSet:
    """
    C(G), the intersection of the normalizers of all centralizers.

    Computed from class representatives. Up to settings.classwise_oracle_limit
    the naive all-elements form is computed as well and must agree.

    Raises:
        InternalInvariantViolated: The two forms disagree.
    """
    norm = centralizer_norm_classwise(g)
    if g.order <= settings.classwise_oracle_limit:
        naive = centralizer_norm_naive(g)
        if naive != norm:
            raise InternalInvariantViolated(
                f"C(G) by classes {norm.to_list()} differs from the naive {naive.to_list()}"
            )
    return norm


def baer_norm(g: FiniteGroup) -> SubgroupSet:
    """
    B_1(G) as the intersection of the normalizers of the cyclic subgroups.

    An element normalizing every cyclic subgroup maps every generator of any
    subgroup back into that subgroup, so it normalizes every subgroup.
    """
    return _intersection(
        g, (normalizer(g, h, check=False) for h in cyclic_subgroups(g))
    )


def baer_norm_oracle(g: FiniteGroup) -> SubgroupSet:
    """
    B_1(G) over every subgroup, for small groups only.

    Raises:
        BadParameter: g is larger than settings.baer_oracle_limit.
    """
    if g.order > settings.baer_oracle_limit:
        raise BadParameter(
            f"the subgroup-lattice norm is limited to order "
            f"{settings.baer_oracle_limit}, got {g.order}"
        )
    return _intersection(
        g, (normalizer(g, h, check=False) for h in all_subgroups(g))
    )
