import numpy as np

from cnorm.structures.groups import FiniteGroup, SubgroupSet


def commuting_matrix(g: FiniteGroup) -> np.ndarray:
    """commuting[x, y] is True when xy = yx; row x is the centralizer of x."""
    return g.table == g.table.T


def centralizer(g: FiniteGroup, x: int) -> SubgroupSet:
    """C_G(x) = { y : xy = yx }."""
    return SubgroupSet(g.table[x, :] == g.table[:, x])


def center(g: FiniteGroup) -> SubgroupSet:
    """Z(G), the elements commuting with everything."""
    return SubgroupSet(commuting_matrix(g).all(axis=1))


def distinct_centralizer_count(g: FiniteGroup) -> int:
    """
    The number of distinct centralizers C_G(x), x in G.

    The whole group (the centralizer of the identity) is counted.
    """
    packed = np.packbits(commuting_matrix(g), axis=1)
    return len(np.unique(packed, axis=0))
