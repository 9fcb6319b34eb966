import math
from itertools import permutations

import numpy as np

from cnorm.errors import BadParameter
from cnorm.structures.groups import FiniteGroup, cycle_notation
from cnorm.structures.groups.finite_group import check_order


def lexicographic_rank(perms: np.ndarray) -> np.ndarray:
    """The position of each row among all permutations of its length in lexicographic order."""
    degree = perms.shape[1]
    ranks = np.zeros(len(perms), dtype=np.int64)
    for k in range(degree - 1):
        smaller_later = (perms[:, k + 1 :] < perms[:, k : k + 1]).sum(axis=1)
        ranks += smaller_later * math.factorial(degree - 1 - k)
    return ranks


def make_symmetric(n: int, cap: int | None = None) -> FiniteGroup:
    """
    The symmetric group S_n on the points 0..n-1.

    Permutations are indexed lexicographically by their image lists, so the
    identity comes first. The product p*q applies p, then q.

    Args:
        n: The degree, n >= 1.
        cap: The order cap. Defaults to settings.order_cap.
    """
    if n < 1:
        raise BadParameter(f"symmetric degree must be at least 1, got {n}")
    check_order(math.factorial(n), cap)

    elements = np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)
    order = len(elements)
    table = np.empty((order, order), dtype=np.int64)
    for i in range(order):
        # Row j of elements[:, elements[i]] is elements[j] after elements[i].
        table[i] = lexicographic_rank(elements[:, elements[i]])
    inverse = np.argmax(table == 0, axis=1)
    return FiniteGroup(table, 0, inverse, [cycle_notation(p) for p in elements])
