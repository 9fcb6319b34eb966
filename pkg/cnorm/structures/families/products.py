from functools import reduce

import numpy as np

from cnorm.errors import BadParameter
from cnorm.structures.groups import FiniteGroup
from cnorm.structures.groups.finite_group import check_order
from cnorm.utils import is_prime


def make_cyclic(n: int, cap: int | None = None) -> FiniteGroup:
    """The cyclic group Z_n, written additively: element k is k mod n."""
    if n < 1:
        raise BadParameter(f"cyclic order must be at least 1, got {n}")
    check_order(n, cap)
    k = np.arange(n)
    return FiniteGroup((k[:, None] + k[None, :]) % n, 0, (-k) % n)


def direct_product(g: FiniteGroup, h: FiniteGroup, cap: int | None = None) -> FiniteGroup:
    """
    The direct product G x H, multiplied componentwise.

    The pair (i, j) is stored at index i * |H| + j.
    """
    check_order(g.order * h.order, cap)
    m = h.order
    table = g.table.astype(np.int64)[:, None, :, None] * m + h.table[None, :, None, :]
    table = table.reshape(g.order * m, g.order * m)
    inverse = (g.inverse.astype(np.int64)[:, None] * m + h.inverse[None, :]).ravel()
    labels = [f"({a},{b})" for a in g.labels for b in h.labels]
    return FiniteGroup(table, g.identity * m + h.identity, inverse, labels)


def make_elementary_abelian(p: int, k: int, cap: int | None = None) -> FiniteGroup:
    """
    The elementary abelian group (Z_p)^k.

    Elements are labelled by their digit vectors, most significant first.
    """
    if not is_prime(p) or k < 1:
        raise BadParameter(f"elementary abelian group needs a prime and k >= 1, got {p}, {k}")
    check_order(p**k, cap)
    cyclic = make_cyclic(p)
    group = reduce(lambda a, b: direct_product(a, b, cap), [cyclic] * k)
    labels = [
        "(" + ",".join(str((x // p**t) % p) for t in reversed(range(k))) + ")"
        for x in range(group.order)
    ]
    return FiniteGroup(group.table, group.identity, group.inverse, labels)
