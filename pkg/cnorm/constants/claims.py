HOLDS = "holds"
HOLDS_VACUOUSLY = "holds-vacuously"
FAILS = "fails"

EXACT = "exact"
SAMPLED = "sampled"
EXHAUSTIVE = "exhaustive"

C_CLASS3 = "lemma-c-class3"
SOLUBLE_2N = "remark-soluble-2n"
SUBGROUP_MONOTONE = "lemma-subgroup-monotone"
SANDWICH = "lemma-sandwich"
DIHEDRAL = "lemma-dihedral"
HALL = "theorem-hall"
EQUIVALENCE = "theorem-equivalence"
CENTRALIZER_COUNT = "bound-centralizer-count"
ORACLE_C_CLASSWISE = "oracle-c-classwise"
ORACLE_B1_SUBGROUPS = "oracle-b1-subgroups"
B1_SANDWICH = "norm-b1-sandwich"
B1_IN_C = "norm-b1-in-c"
CLASS_AGREEMENT = "class-agreement"
QUOTIENT_CENTRAL = "quotient-central-series"
NILPOTENT_CBAR = "remark-nilpotent-cbar"
BAER_NILPOTENT = "profile-baer-nilpotent"

# Report order. Every claim appears exactly once per report.
ORDER = (
    C_CLASS3,
    SOLUBLE_2N,
    SUBGROUP_MONOTONE,
    SANDWICH,
    DIHEDRAL,
    HALL,
    EQUIVALENCE,
    CENTRALIZER_COUNT,
    ORACLE_C_CLASSWISE,
    ORACLE_B1_SUBGROUPS,
    B1_SANDWICH,
    B1_IN_C,
    CLASS_AGREEMENT,
    QUOTIENT_CENTRAL,
    NILPOTENT_CBAR,
    BAER_NILPOTENT,
)
