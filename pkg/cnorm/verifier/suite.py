import logging
from typing import Callable, Dict, List

from cnorm.constants import claims
from cnorm.constants import series as kinds
from cnorm.structures.families import dihedral_degree
from cnorm.structures.groups import (
    FiniteGroup,
    SubgroupSet,
    conjugacy_classes,
    is_normal,
    quotient,
    restrict,
)
from cnorm.structures.series import (
    GroupAnalysis,
    centralizer_norm,
    derived_series,
    follows_series,
    is_baer,
    iterated_commutator,
    nilpotency_class,
    normal_core,
    upper_central_series,
)
from cnorm.structures.subgroups import (
    all_subgroups,
    centralizer,
    cyclic_subgroups,
    derived_subgroup,
    distinct_centralizer_count,
    generated,
    is_subgroup,
    is_subnormal,
    normalizer,
)
from cnorm.utils import Timer, factorial_exceeds
from cnorm.verifier import checks
from cnorm.verifier.dihedral import check_dihedral_in_group, expected_first_term_order
from cnorm.verifier.results import ClaimResult, VerificationReport

logger = logging.getLogger(__name__)

CHECKS: Dict[str, Callable] = {
    check.claim_id: check
    for check in (
        checks.check_c_nilpotent_class3,
        checks.check_remark_soluble_2n,
        checks.check_subgroup_monotonicity,
        checks.check_sandwich,
        check_dihedral_in_group,
        checks.check_hall_criterion,
        checks.check_quotient_equivalences,
        checks.check_centralizer_count_bound,
        checks.check_classwise_oracle,
        checks.check_baer_oracle,
        checks.check_baer_sandwich,
        checks.check_baer_in_centralizer_norm,
        checks.check_class_agreement,
        checks.check_quotient_central_series,
        checks.check_nilpotent_cbar,
        checks.check_baer_nilpotent,
    )
}


def run_all(g: FiniteGroup, name: str = "G", exhaustive: bool = False) -> VerificationReport:
    """
    Run every registered check on one group, in constants.claims.ORDER.

    Claim failures are returned as data; nothing is raised for them.

    Args:
        g: The group.
        name: Its display name.
        exhaustive: Quantify subgroup claims over every subgroup when the
            order permits it (settings.exhaustive_subgroup_limit).
    """
    analysis = GroupAnalysis(g, name, exhaustive)
    with Timer(f"Verifying {name}", logger=logger):
        results = [CHECKS[claim_id](analysis) for claim_id in claims.ORDER]
    series = {
        kinds.JSON_KEYS[kind]: analysis.series(kind).orders() for kind in kinds.ALL
    }
    report = VerificationReport(name, g.order, results, analysis.profile, series)
    for failure in report.failures():
        logger.warning("%s fails on %s: %s", failure.claim_id, name, failure.witness)
    return report


def _members(g: FiniteGroup, elements) -> SubgroupSet:
    return SubgroupSet.from_elements(g.order, elements)


def _chain(g: FiniteGroup, kind: str, lists) -> List[SubgroupSet] | None:
    """The recorded terms of a series, or None when they are not that series of g."""
    terms = [_members(g, members) for members in lists]
    return terms if follows_series(g, kind, terms) else None


def _cyclic_subgroup(g: FiniteGroup, elements) -> SubgroupSet | None:
    h = _members(g, elements)
    if any(generated(g, [x]) == h for x in h.elements):
        return h
    return None


def _normalizes(g: FiniteGroup, x: int, h: SubgroupSet) -> bool:
    return bool(h.members[g.conjugation_table[x, h.elements]].all())


def _recheck_engel(g: FiniteGroup, witness: dict) -> bool:
    i = witness["i"]
    x, y = witness["element"], witness["partner"]
    return (
        x in witness["c_term"]
        and y is not None
        and iterated_commutator(g, x, y, 2 * i) != g.identity
    )


def _recheck_sandwich(g: FiniteGroup, witness: dict) -> bool:
    if witness["relation"] == "engel":
        return _recheck_engel(g, witness)
    x = witness["element"]
    return x in witness["upper_term"] and x not in witness["c_term"]


def _recheck_c_class3(g: FiniteGroup, witness: dict) -> bool:
    members = _members(g, witness["members"])
    if "x" not in witness:
        if members != centralizer_norm(g):
            return False
        sub, _ = restrict(g, members)
        cls = nilpotency_class(upper_central_series(sub))
        derived = derived_series(sub)
        return (
            cls is None or cls > 3 or not derived.reaches_trivial or derived.stabilized_at > 2
        )
    x, y = witness["x"], witness["y"]
    once = g.commutator_table[x, y]
    return x in members and y in members and g.commutator_table[once, y] != g.identity


def _recheck_soluble_2n(g: FiniteGroup, witness: dict) -> bool:
    c = _chain(g, kinds.C_SERIES, witness["c_terms"])
    derived = _chain(g, kinds.DERIVED, witness["derived_terms"])
    if c is None or derived is None or not c[-1].is_whole():
        return False
    return not derived[-1].is_trivial() or len(derived) - 1 > 2 * (len(c) - 1)


def _recheck_monotone(g: FiniteGroup, witness: dict) -> bool:
    h = _members(g, witness["subgroup"])
    x = witness["element"]
    sub, _ = restrict(g, h)
    local = centralizer_norm(sub)
    position = witness["subgroup"].index(x)
    return x in witness["centralizer_norm"] and position not in local


def _recheck_dihedral(g: FiniteGroup, witness: dict) -> bool:
    n = witness["degree"]
    if dihedral_degree(g) != n:
        return False
    if "c1" in witness:
        c1 = _members(g, witness["c1"])
        return c1 == centralizer_norm(g) and c1.size != expected_first_term_order(n)
    c = _chain(g, kinds.C_SERIES, witness["c_terms"])
    upper = _chain(g, kinds.UPPER_CENTRAL, witness["upper_terms"])
    if c is None or upper is None:
        return False
    i = witness["i"]
    return c[min(i, len(c) - 1)] != upper[min(2 * i, len(upper) - 1)]


def _recheck_hall(g: FiniteGroup, witness: dict) -> bool:
    n = _members(g, witness["normal_subgroup"])
    if not is_subgroup(g, n.members) or not is_normal(g, n):
        return False
    commutators = derived_subgroup(g, n)
    upper = _chain(g, kinds.UPPER_CENTRAL, witness["upper_terms"])
    return (
        commutators == _members(g, witness["derived"])
        and checks.quotient_is_nilpotent(g, commutators)
        and checks.restricted_is_nilpotent(g, n)
        and upper is not None
        and not upper[-1].is_whole()
    )


def _recheck_equivalence(g: FiniteGroup, witness: dict) -> bool:
    c = _chain(g, kinds.C_SERIES, witness["c_terms"])
    if c is None:
        return False
    if witness["kind"] == "predicates":
        upper = _chain(g, kinds.UPPER_CENTRAL, witness["upper_terms"])
        return upper is not None and not checks.predicates_agree(
            checks.nilpotency_predicates(g, c, upper)
        )
    if witness["kind"] == "baer":
        if not checks.quotient_is_nilpotent(g, c[min(1, len(c) - 1)]):
            return False
        if witness["cyclic_subgroup"] is None:
            return not is_baer(g)
        h = _cyclic_subgroup(g, witness["cyclic_subgroup"])
        return h is not None and not is_subnormal(g, h).is_subnormal
    i = witness["i"]
    h = _members(g, witness["subgroup"])
    term = _members(g, witness["c_term"])
    return (
        0 < i < len(c)
        and c[i] == term
        and is_subgroup(g, h.members)
        and term.issubset(h)
        and not checks.subgroup_quotient_agrees(g, h, term)
    )


def _recheck_centralizer_count(g: FiniteGroup, witness: dict) -> bool:
    count = distinct_centralizer_count(g)
    return count == witness["centralizers"] and not factorial_exceeds(
        count - 1, witness["index"] - 1
    )


def _recheck_classwise_oracle(g: FiniteGroup, witness: dict) -> bool:
    x = witness["element"]
    naive = all(_normalizes(g, x, centralizer(g, a)) for a in g.elements())
    classwise = all(
        x in normal_core(g, normalizer(g, centralizer(g, int(members[0])), check=False))
        for members in conjugacy_classes(g)
    )
    return naive != classwise


def _recheck_baer_oracle(g: FiniteGroup, witness: dict) -> bool:
    x = witness["element"]
    cyclic = all(_normalizes(g, x, h) for h in cyclic_subgroups(g))
    every = all(_normalizes(g, x, h) for h in all_subgroups(g))
    return cyclic != every


def _recheck_inclusion(g: FiniteGroup, witness: dict) -> bool:
    x = witness["element"]
    return x in witness["inner"] and x not in witness["outer"]


def _recheck_class_agreement(g: FiniteGroup, witness: dict) -> bool:
    upper = _chain(g, kinds.UPPER_CENTRAL, witness["upper_terms"])
    lower = _chain(g, kinds.LOWER_CENTRAL, witness["lower_terms"])
    if upper is None or lower is None:
        return False
    from_upper = len(upper) - 1 if upper[-1].is_whole() else None
    from_lower = len(lower) - 1 if lower[-1].is_trivial() else None
    return from_upper != from_lower


def _recheck_quotient_central(g: FiniteGroup, witness: dict) -> bool:
    upper = _chain(g, kinds.UPPER_CENTRAL, witness["upper_terms"])
    if upper is None:
        return False
    i, j = witness["i"], witness["j"]
    top = len(upper) - 1
    qmap = quotient(g, upper[min(i, top)])
    factor = upper_central_series(qmap.quotient)
    return factor.term(j) != qmap.image(upper[min(i + j, top)])


def _recheck_nilpotent_cbar(g: FiniteGroup, witness: dict) -> bool:
    upper = _chain(g, kinds.UPPER_CENTRAL, witness["upper_terms"])
    c = _chain(g, kinds.C_SERIES, witness["c_terms"])
    if upper is None or c is None or not upper[-1].is_whole():
        return False
    bound = max(1, len(upper) - 2)
    return not c[-1].is_whole() or len(c) - 1 > bound


def _recheck_baer_nilpotent(g: FiniteGroup, witness: dict) -> bool:
    upper = _chain(g, kinds.UPPER_CENTRAL, witness["upper_terms"])
    if upper is None:
        return False
    nilpotent = upper[-1].is_whole()
    if witness["cyclic_subgroup"] is None:
        return not nilpotent and is_baer(g)
    h = _cyclic_subgroup(g, witness["cyclic_subgroup"])
    return nilpotent and h is not None and not is_subnormal(g, h).is_subnormal


RECHECKS: Dict[str, Callable[[FiniteGroup, dict], bool]] = {
    claims.C_CLASS3: _recheck_c_class3,
    claims.SOLUBLE_2N: _recheck_soluble_2n,
    claims.SUBGROUP_MONOTONE: _recheck_monotone,
    claims.SANDWICH: _recheck_sandwich,
    claims.DIHEDRAL: _recheck_dihedral,
    claims.HALL: _recheck_hall,
    claims.EQUIVALENCE: _recheck_equivalence,
    claims.CENTRALIZER_COUNT: _recheck_centralizer_count,
    claims.ORACLE_C_CLASSWISE: _recheck_classwise_oracle,
    claims.ORACLE_B1_SUBGROUPS: _recheck_baer_oracle,
    claims.B1_SANDWICH: _recheck_inclusion,
    claims.B1_IN_C: _recheck_inclusion,
    claims.CLASS_AGREEMENT: _recheck_class_agreement,
    claims.QUOTIENT_CENTRAL: _recheck_quotient_central,
    claims.NILPOTENT_CBAR: _recheck_nilpotent_cbar,
    claims.BAER_NILPOTENT: _recheck_baer_nilpotent,
}


def recheck(result: ClaimResult, g: FiniteGroup) -> bool:
    """
    Re-evaluate a failing claim from its witness alone.

    Recorded series are accepted only when they are the series of g; the
    claim is then decided on the recorded data. A witness that does not fit g
    is not a reproduction.

    Returns:
        Whether the failure is reproduced.
    """
    if result.holds:
        return False
    try:
        return bool(RECHECKS[result.claim_id](g, result.witness))
    except (KeyError, IndexError, TypeError, ValueError) as e:
        logger.warning("Witness for %s does not fit the group: %r", result.claim_id, e)
        return False
