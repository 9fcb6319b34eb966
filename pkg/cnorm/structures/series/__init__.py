from .commutators import (
    commutator,
    engel_depths,
    engel_partner,
    is_n_engel_group,
    is_right_n_engel,
    iterated_commutator,
    right_engel_set,
)
from .norms import (
    baer_norm,
    baer_norm_oracle,
    centralizer_norm,
    centralizer_norm_classwise,
    centralizer_norm_naive,
    normal_core,
)
from .series import (
    SERIES,
    STEPS,
    SeriesReport,
    c_series,
    derived_series,
    follows_series,
    is_nilpotent,
    lower_central_series,
    nilpotency_class,
    to_df,
    upper_central_series,
)
from .profile import GroupProfile, is_baer, profile, profile_from_series
from .analysis import GroupAnalysis
