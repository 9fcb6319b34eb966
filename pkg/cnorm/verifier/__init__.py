from .results import ClaimResult, VerificationReport
from .checks import (
    check_baer_in_centralizer_norm,
    check_baer_nilpotent,
    check_baer_oracle,
    check_baer_sandwich,
    check_c_nilpotent_class3,
    check_centralizer_count_bound,
    check_class_agreement,
    check_classwise_oracle,
    check_hall_criterion,
    check_nilpotent_cbar,
    check_quotient_central_series,
    check_quotient_equivalences,
    check_remark_soluble_2n,
    check_sandwich,
    check_subgroup_monotonicity,
)
from .dihedral import check_dihedral_in_group, check_dihedral_lemma, expected_first_term_order
from .suite import CHECKS, recheck, run_all
