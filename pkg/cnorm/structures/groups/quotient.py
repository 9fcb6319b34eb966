import logging
from dataclasses import dataclass

import numpy as np

from cnorm.errors import InternalInvariantViolated, NotNormal
from cnorm.structures.groups.finite_group import FiniteGroup
from cnorm.structures.groups.subgroup_set import SubgroupSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class QuotientMap:
    """
    The surjection from a group onto its quotient by a normal subgroup.

    Attributes:
        kernel: The normal subgroup being factored out.
        coset_of: coset_of[x] is the quotient element containing parent element x.
        quotient: The quotient group. Cosets are indexed by their least member.
        representatives: representatives[c] is the least member of coset c.

    Methods:
        preimage: Pull a subgroup of the quotient back to the parent.
        image: Push a subgroup of the parent forward to the quotient.
    """

    kernel: SubgroupSet
    coset_of: np.ndarray
    quotient: FiniteGroup
    representatives: np.ndarray

    def preimage(self, sub: SubgroupSet) -> SubgroupSet:
        """{ x : coset_of[x] in sub }"""
        return SubgroupSet(sub.members[self.coset_of])

    def image(self, h: SubgroupSet) -> SubgroupSet:
        """The set of cosets meeting h."""
        return SubgroupSet.from_elements(self.quotient.order, self.coset_of[h.elements])


def normal_witness(g: FiniteGroup, n: SubgroupSet) -> tuple[int, int] | None:
    """
    Find h in n and t in g with t^-1 h t outside n.

    Returns:
        The pair (h, t), or None when n is normal.
    """
    conjugates = g.conjugation_table[:, n.elements]  # [t, k] = t^-1 n_k t
    escaped = np.argwhere(~n.members[conjugates])
    if not len(escaped):
        return None
    t, k = escaped[0]
    return int(n.elements[k]), int(t)


def is_normal(g: FiniteGroup, n: SubgroupSet) -> bool:
    return normal_witness(g, n) is None


def quotient(g: FiniteGroup, n: SubgroupSet) -> QuotientMap:
    """
    Form G/N.

    Cosets are discovered in increasing order of their least member, so the
    quotient's indexing is deterministic, and the coset of the identity is the
    quotient identity.

    Args:
        g: The parent group.
        n: A normal subgroup of g.

    Returns:
        QuotientMap: The coset map and the quotient's Cayley table.

    Raises:
        NotNormal: n is not normal; the witness (h, t) is reported.
    """
    if (witness := normal_witness(g, n)) is not None:
        raise NotNormal(witness)

    coset_of = np.full(g.order, -1, dtype=np.int64)
    representatives = []
    for x in range(g.order):
        if coset_of[x] < 0:
            coset_of[g.table[x, n.elements]] = len(representatives)
            representatives.append(x)
    representatives = np.array(representatives, dtype=np.int64)

    order = len(representatives)
    if order * n.size != g.order:
        raise InternalInvariantViolated(
            f"{order} cosets of a subgroup of order {n.size} in a group of order {g.order}"
        )

    table = coset_of[g.table[np.ix_(representatives, representatives)]]
    inverse = coset_of[g.inverse[representatives]]
    labels = [f"[{g.labels[rep]}]" for rep in representatives]
    factor = FiniteGroup(table, int(coset_of[g.identity]), inverse, labels)

    coset_of.setflags(write=False)
    representatives.setflags(write=False)
    logger.debug("Formed quotient of order %s by a kernel of order %s.", order, n.size)
    return QuotientMap(n, coset_of, factor, representatives)
