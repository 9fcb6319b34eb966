from .finite_group import (
    FiniteGroup,
    conjugacy_classes,
    cycle_notation,
    element_order,
    element_order_census,
    from_cayley_table,
    from_permutation_generators,
)
from .quotient import QuotientMap, is_normal, normal_witness, quotient
from .restriction import lift, restrict
from .subgroup_set import SubgroupSet
