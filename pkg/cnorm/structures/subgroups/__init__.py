from .centralizers import center, centralizer, commuting_matrix, distinct_centralizer_count
from .generation import (
    all_subgroups,
    cyclic_subgroups,
    derived_subgroup,
    generated,
    intersect,
    is_subgroup,
    require_subgroup,
)
from .normalizers import SubnormalVerdict, is_subnormal, normal_closure, normalizer
from .sampling import sampled_subgroups, subgroups_for_checks
