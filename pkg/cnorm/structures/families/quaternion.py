import numpy as np

from cnorm.errors import BadParameter
from cnorm.structures.groups import FiniteGroup
from cnorm.structures.groups.finite_group import check_order


def make_generalized_quaternion(order: int, cap: int | None = None) -> FiniteGroup:
    """
    The generalized quaternion (dicyclic) group of a given 2-power order.

    Elements are a^i b^j with 0 <= i < order/2 and j in {0, 1}, stored at index
    j * order/2 + i, where b^2 = a^(order/4) and b^-1 a b = a^-1.

    Args:
        order: 2^k with k >= 3. Order 8 is the quaternion group Q_8.
        cap: The order cap. Defaults to settings.order_cap.

    Raises:
        BadParameter: order is not a power of two of at least 8.
    """
    if order < 8 or order & (order - 1):
        raise BadParameter(f"quaternion order must be a power of two >= 8, got {order}")
    check_order(order, cap)

    half, quarter = order // 2, order // 4
    i = np.arange(half)
    total = (i[:, None] + i[None, :]) % half
    difference = (i[:, None] - i[None, :]) % half  # i - k, since b a^k = a^-k b
    table = np.block(
        [[total, half + total], [half + difference, (difference + quarter) % half]]
    )
    inverse = np.concatenate(((-i) % half, half + (i + quarter) % half))

    labels = ["1" if k == 0 else ("a" if k == 1 else f"a^{k}") for k in range(half)]
    labels += ["b" if k == 0 else f"{labels[k]}·b" for k in range(half)]
    return FiniteGroup(table, 0, inverse, labels)
