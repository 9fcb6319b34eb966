"""
Centralizer norms of dihedral groups.

For D_n, of order 2n, the C-series doubles the upper central series:
C_i = Z_{2i}. The order of C_1 follows the 2-adic valuation alpha of the order
2n: 1 when alpha <= 1, 2 when alpha = 2 and 4 when alpha >= 3. The exceptions
are the abelian D_1 and D_2 and the class-2 group D_4, where C_1 is the whole
group. Read with alpha taken from the degree n instead, the same table is
wrong (D_6 has |C_1| = 2), so both readings are reported.
"""

import logging

from cnorm.constants import claims
from cnorm.structures.families import dihedral_degree, make_dihedral
from cnorm.structures.series import GroupAnalysis
from cnorm.utils import two_adic_valuation
from cnorm.verifier.results import ClaimResult, claim, verdict

logger = logging.getLogger(__name__)


def case_table(alpha: int) -> int:
    if alpha <= 1:
        return 1
    return 2 if alpha == 2 else 4


def expected_first_term_order(n: int) -> int:
    """The order of C_1(D_n)."""
    if n <= 2 or n == 4:
        return 2 * n
    return case_table(two_adic_valuation(2 * n))


def check_dihedral_group(analysis: GroupAnalysis, n: int) -> ClaimResult:
    """Check the |C_1| table and C_i = Z_{2i} on a group known to be D_n."""
    c, upper = analysis.c_series, analysis.upper_central
    first = c.term(1).size
    expected = expected_first_term_order(n)
    degree_reading = case_table(two_adic_valuation(n))
    details = {
        "degree": n,
        "order": 2 * n,
        "alpha_of_order": two_adic_valuation(2 * n),
        "alpha_of_degree": two_adic_valuation(n),
        "c1_order": first,
        "expected_c1_order": expected,
        "degree_reading_expected": degree_reading,
        "degree_reading_agrees": degree_reading == first,
    }
    if first != expected:
        witness = {
            "degree": n,
            "c1_order": first,
            "expected": expected,
            "c1": c.term(1).to_list(),
        }
        return verdict(claims.DIHEDRAL, witness, details=details)

    for i in range(max(c.stabilized_at, upper.stabilized_at) + 1):
        if c.term(i) != upper.term(2 * i):
            witness = {
                "degree": n,
                "i": i,
                "c_term": c.term(i).to_list(),
                "upper_term": upper.term(2 * i).to_list(),
                "c_terms": [term.to_list() for term in c.terms],
                "upper_terms": [term.to_list() for term in upper.terms],
            }
            return verdict(claims.DIHEDRAL, witness, details=details)
    return verdict(claims.DIHEDRAL, None, details=details)


@claim(claims.DIHEDRAL)
def check_dihedral_in_group(analysis: GroupAnalysis):
    """The dihedral check on any group; vacuous unless the group is dihedral."""
    n = dihedral_degree(analysis.group)
    if n is None:
        return verdict(claims.DIHEDRAL, None, details={"dihedral": False}, vacuous=True)
    return check_dihedral_group(analysis, n)


def check_dihedral_lemma(n: int, cap: int | None = None) -> ClaimResult:
    """
    Build D_n and check it.

    Raises:
        OrderCapExceeded: 2n is above the cap.
    """
    return check_dihedral_in_group(GroupAnalysis(make_dihedral(n, cap), f"D_{n}"))
