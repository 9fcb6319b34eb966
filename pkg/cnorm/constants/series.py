C_SERIES = "c_series"
UPPER_CENTRAL = "upper_central"
LOWER_CENTRAL = "lower_central"
DERIVED = "derived"

ASCENDING = (C_SERIES, UPPER_CENTRAL)
DESCENDING = (LOWER_CENTRAL, DERIVED)
ALL = (C_SERIES, UPPER_CENTRAL, LOWER_CENTRAL, DERIVED)

# Keys used for each series in the JSON report.
JSON_KEYS = {
    C_SERIES: "c",
    UPPER_CENTRAL: "upper_central",
    LOWER_CENTRAL: "lower_central",
    DERIVED: "derived",
}
