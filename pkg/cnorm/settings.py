name = "cnorm"
version = "1.0.0"

# Largest group order any constructor will materialize. A 4096x4096 table of
# uint16 indices is 32 MiB.
order_cap = 4096

# Standard corpus parameters.
corpus_max_order = 256
corpus_cyclic_limit = 64

# Full subgroup enumeration is only attempted at or below this order.
exhaustive_subgroup_limit = 24
baer_oracle_limit = 24

# The naive all-elements C(G) intersection is cross-checked at or below this
# order.
classwise_oracle_limit = 64

# Engel scans stop at 2 * (c-series stabilization index) + engel_padding.
engel_padding = 2

default_jobs = 1

extensions = ("cay", "perm")

log_level = "WARNING"
log_format = "%(levelname)s:%(name)s: %(message)s"
