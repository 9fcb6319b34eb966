"""
The standard verification corpus.

standard_corpus lists, in this fixed order: the cyclic groups Z_n for
n <= min(max_order, 64); the dihedral groups D_n for 2n <= max_order; S_3, S_4
and S_5 as the order permits; the generalized quaternion groups Q_8, Q_16, ...
up to max_order; the elementary abelian groups Z_2^k then Z_3^k (k >= 2); and
the products S_3xZ_2, D_4xZ_2, Q_8xZ_3, S_3xS_3.
"""

import logging
import math
from typing import List, Tuple

from cnorm import settings
from cnorm.constants import families
from cnorm.errors import BadFamily
from cnorm.structures.families.family_spec import FamilySpec
from cnorm.structures.groups import FiniteGroup
from cnorm.structures.groups.finite_group import check_order
from cnorm.utils import timer

logger = logging.getLogger(__name__)

FIXED_PRODUCTS = (
    FamilySpec.product(FamilySpec.symmetric(3), FamilySpec.cyclic(2)),
    FamilySpec.product(FamilySpec.dihedral(4), FamilySpec.cyclic(2)),
    FamilySpec.product(FamilySpec.quaternion(8), FamilySpec.cyclic(3)),
    FamilySpec.product(FamilySpec.symmetric(3), FamilySpec.symmetric(3)),
)


def _powers(base: int, start: int, max_order: int) -> List[int]:
    """Exponents k >= start with base^k <= max_order."""
    exponents = []
    k = start
    while base**k <= max_order:
        exponents.append(k)
        k += 1
    return exponents


def family_members(family: str, max_order: int) -> List[FamilySpec]:
    """
    The members of one family with order at most max_order.

    Args:
        family: A name from constants.families.ALL.
        max_order: The largest order to include.
    """
    match family:
        case families.CYCLIC:
            return [FamilySpec.cyclic(n) for n in range(1, max_order + 1)]
        case families.DIHEDRAL:
            return [FamilySpec.dihedral(n) for n in range(1, max_order // 2 + 1)]
        case families.SYMMETRIC:
            return [
                FamilySpec.symmetric(n)
                for n in range(1, max_order + 1)
                if math.factorial(n) <= max_order
            ]
        case families.QUATERNION:
            return [FamilySpec.quaternion(2**k) for k in _powers(2, 3, max_order)]
        case families.ELEMENTARY_ABELIAN:
            return [
                FamilySpec.elementary_abelian(p, k)
                for p in (2, 3)
                for k in _powers(p, 2, max_order)
            ]
        case families.PRODUCT:
            return [spec for spec in FIXED_PRODUCTS if spec.order <= max_order]
    raise BadFamily(family)


def corpus_specs(max_order: int) -> List[FamilySpec]:
    """The specs of standard_corpus(max_order), in corpus order."""
    specs = [
        FamilySpec.cyclic(n)
        for n in range(1, min(max_order, settings.corpus_cyclic_limit) + 1)
    ]
    specs += family_members(families.DIHEDRAL, max_order)
    specs += [
        FamilySpec.symmetric(n) for n in (3, 4, 5) if math.factorial(n) <= max_order
    ]
    specs += family_members(families.QUATERNION, max_order)
    specs += family_members(families.ELEMENTARY_ABELIAN, max_order)
    specs += family_members(families.PRODUCT, max_order)
    return specs


@timer(logger=logger, task_name="Building the standard corpus")
def standard_corpus(
    max_order: int = settings.corpus_max_order, cap: int | None = None
) -> List[Tuple[str, FiniteGroup]]:
    """
    The named verification corpus, deterministic in content and order.

    Args:
        max_order: The largest group order to include; must not exceed the cap.
        cap: The order cap. Defaults to settings.order_cap.
    """
    check_order(max_order, cap)
    return [(spec.name, spec.build(cap)) for spec in corpus_specs(max_order)]
