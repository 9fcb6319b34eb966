import numpy as np

from cnorm.errors import BadParameter
from cnorm.structures.groups import FiniteGroup
from cnorm.structures.groups.finite_group import check_order


def _power_label(base: str, k: int) -> str:
    if k == 0:
        return ""
    return base if k == 1 else f"{base}^{k}"


def make_dihedral(n: int, cap: int | None = None) -> FiniteGroup:
    """
    The dihedral group D_n of the regular n-gon, of order 2n.

    D_n is <r, s | r^n = s^2 = 1, srs = r^-1>. Index k holds r^k and index
    n + k holds s*r^k, so r sits at index 1 and s at index n.

    Args:
        n: The degree, n >= 1. D_1 is Z_2 and D_2 is the Klein four group.
        cap: The order cap. Defaults to settings.order_cap.
    """
    if n < 1:
        raise BadParameter(f"dihedral degree must be at least 1, got {n}")
    check_order(2 * n, cap)

    k = np.arange(n)
    total = (k[:, None] + k[None, :]) % n
    difference = (k[None, :] - k[:, None]) % n  # b - a
    table = np.block([[total, n + difference], [n + total, difference]])
    inverse = np.concatenate(((-k) % n, n + k))

    labels = [_power_label("r", i) or "1" for i in range(n)]
    labels += [f"s·{_power_label('r', i)}".rstrip("·") for i in range(n)]
    return FiniteGroup(table, 0, inverse, labels)


def dihedral_degree(g: FiniteGroup) -> int | None:
    """
    Recognize a dihedral group from its table.

    G is D_n when |G| = 2n and G holds an r of order n and an s outside <r>
    with s^2 = 1 and srs = r^-1.

    Returns:
        The degree n, or None when g is not dihedral.
    """
    if g.order % 2:
        return None
    n = g.order // 2
    everything = np.arange(g.order)
    for r in np.flatnonzero(g.element_orders == n):
        rotations = np.zeros(g.order, dtype=bool)
        power = g.identity
        for _ in range(n):
            rotations[power] = True
            power = g.mul(power, int(r))
        flips = (
            ~rotations
            & (g.table[everything, everything] == g.identity)
            & (g.table[g.table[everything, r], everything] == g.inverse[r])
        )
        if flips.any():
            return n
    return None
