import numpy as np

from cnorm.structures.groups.finite_group import FiniteGroup
from cnorm.structures.groups.subgroup_set import SubgroupSet


def restrict(g: FiniteGroup, h: SubgroupSet) -> tuple[FiniteGroup, np.ndarray]:
    """
    Re-index the members of a subgroup into a group of their own.

    Args:
        g: The parent group.
        h: A subgroup of g.

    Returns:
        The subgroup as a FiniteGroup, and the index map: sub-element k is
        parent element index_map[k]. Members keep their ascending order.
    """
    index_map = h.elements.astype(np.int64)
    position = np.full(g.order, -1, dtype=np.int64)
    position[index_map] = np.arange(h.size)

    table = position[g.table[np.ix_(index_map, index_map)]]
    inverse = position[g.inverse[index_map]]
    labels = [g.labels[x] for x in index_map]
    sub = FiniteGroup(table, int(position[g.identity]), inverse, labels)
    return sub, index_map


def lift(g: FiniteGroup, sub: SubgroupSet, index_map: np.ndarray) -> SubgroupSet:
    """Carry a subgroup of restrict(g, h) back into g."""
    return SubgroupSet.from_elements(g.order, index_map[sub.elements])
