"""
Commutator calculus and right Engel elements.

[x, y] = x^-1 y^-1 x y, and the left-normed Engel commutators are
[x,_1 y] = [x, y], [x,_{m+1} y] = [[x,_m y], y]. All scans here read the
group's memoized commutator table.
"""

import logging

import numpy as np

from cnorm.errors import BadParameter
from cnorm.structures.groups import FiniteGroup

logger = logging.getLogger(__name__)


def _check_length(n: int) -> None:
    if n < 1:
        raise BadParameter(f"Engel length must be at least 1, got {n}")


def commutator(g: FiniteGroup, x: int, y: int) -> int:
    """[x, y] = x^-1 y^-1 x y."""
    return int(g.commutator_table[x, y])


def iterated_commutator(g: FiniteGroup, x: int, y: int, m: int) -> int:
    """
    The Engel commutator [x,_m y].

    Args:
        g: The group.
        x: The left element.
        y: The element commuted in repeatedly.
        m: The number of commutations, at least 1.
    """
    _check_length(m)
    for _ in range(m):
        x = commutator(g, x, y)
    return x


def _engel_rows(g: FiniteGroup, start: np.ndarray, n: int) -> np.ndarray:
    """rows[k, y] = [start[k],_n y] for every y in g."""
    everything = np.arange(g.order)
    rows = np.broadcast_to(np.asarray(start)[:, None], (len(start), g.order))
    for _ in range(n):
        rows = g.commutator_table[rows, everything]
    return rows


def is_right_n_engel(g: FiniteGroup, x: int, n: int) -> bool:
    """Whether [x,_n y] = 1 for every y in g."""
    _check_length(n)
    return bool((_engel_rows(g, np.array([x]), n) == g.identity).all())


def engel_partner(g: FiniteGroup, x: int, n: int) -> int | None:
    """Some y with [x,_n y] != 1, or None when x is right n-Engel."""
    _check_length(n)
    row = _engel_rows(g, np.array([x]), n)[0]
    escaped = np.flatnonzero(row != g.identity)
    return int(escaped[0]) if len(escaped) else None


def engel_depths(g: FiniteGroup, cap: int) -> np.ndarray:
    """
    The least n <= cap with x in R_n(G), for every element x.

    Since [1, y] = 1, R_n(G) is contained in R_{n+1}(G), so R_n(G) is exactly the
    set of elements whose depth lies in [1, n].

    Returns:
        An integer array; -1 marks elements outside R_cap(G).
    """
    depths = np.full(g.order, -1, dtype=np.int64)
    everything = np.arange(g.order)
    rows = np.broadcast_to(everything[:, None], (g.order, g.order))
    for n in range(1, cap + 1):
        rows = g.commutator_table[rows, everything]
        reached = (rows == g.identity).all(axis=1) & (depths < 0)
        depths[reached] = n
        if (depths > 0).all():
            break
    logger.debug("Computed Engel depths up to %s for order %s.", cap, g.order)
    return depths


def right_engel_set(g: FiniteGroup, n: int) -> np.ndarray:
    """
    R_n(G), the right n-Engel elements, as a boolean membership array.

    The result is deliberately not wrapped as a SubgroupSet.
    """
    _check_length(n)
    return (_engel_rows(g, np.arange(g.order), n) == g.identity).all(axis=1)


def is_n_engel_group(g: FiniteGroup, n: int) -> bool:
    return bool(right_engel_set(g, n).all())
