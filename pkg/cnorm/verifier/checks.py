"""
One check per claim about centralizer norms and the series built from them.

Every check takes a FiniteGroup or a shared GroupAnalysis and returns a
ClaimResult. A failing result always carries a witness that recheck can
evaluate again.
"""

import logging
from typing import Sequence

import numpy as np

from cnorm import settings
from cnorm.constants import claims
from cnorm.structures.groups import FiniteGroup, SubgroupSet, is_normal, lift, quotient, restrict
from cnorm.structures.series import (
    GroupAnalysis,
    baer_norm_oracle,
    centralizer_norm,
    centralizer_norm_classwise,
    centralizer_norm_naive,
    engel_partner,
    nilpotency_class,
    right_engel_set,
    upper_central_series,
)
from cnorm.structures.subgroups import (
    cyclic_subgroups,
    derived_subgroup,
    distinct_centralizer_count,
    intersect,
    is_subnormal,
)
from cnorm.utils import factorial_exceeds
from cnorm.verifier.results import claim, verdict

logger = logging.getLogger(__name__)


def escapee(a: SubgroupSet, b: SubgroupSet) -> int | None:
    """The least member of a outside b, or None when a is a subset of b."""
    outside = a.elements[~b.members[a.elements]]
    return int(outside[0]) if len(outside) else None


def first_difference(a: SubgroupSet, b: SubgroupSet) -> int | None:
    """The least element in exactly one of a and b."""
    differing = np.flatnonzero(a.members ^ b.members)
    return int(differing[0]) if len(differing) else None


def member_lists(terms) -> list:
    """Series terms as plain member lists, for witnesses."""
    return [term.to_list() for term in terms]


def sampling_scope(exhaustive: bool) -> str:
    return claims.EXHAUSTIVE if exhaustive else claims.SAMPLED


def restricted_is_nilpotent(g: FiniteGroup, h: SubgroupSet) -> bool:
    """Whether the subgroup h, taken as a group of its own, is nilpotent."""
    sub, _ = restrict(g, h)
    return upper_central_series(sub).reaches_whole_group


def quotient_is_nilpotent(g: FiniteGroup, n: SubgroupSet) -> bool:
    return upper_central_series(quotient(g, n).quotient).reaches_whole_group


@claim(claims.C_CLASS3)
def check_c_nilpotent_class3(analysis: GroupAnalysis):
    """C(G) is 2-Engel, nilpotent of class at most 3 and of derived length at most 2."""
    g = analysis.group
    norm = analysis.centralizer_norm
    sub, index_map = restrict(g, norm)
    local = GroupAnalysis(sub, f"C({analysis.name})")
    derived = local.derived
    details = {
        "order": norm.size,
        "nilpotency_class": nilpotency_class(local.upper_central),
        "derived_length": derived.stabilized_at if derived.reaches_trivial else None,
    }

    witness = None
    engel = right_engel_set(sub, 2)
    if not engel.all():
        x = int(np.flatnonzero(~engel)[0])
        y = engel_partner(sub, x, 2)
        witness = {
            "members": norm.to_list(),
            "x": int(index_map[x]),
            "y": int(index_map[y]),
        }
    elif (
        details["nilpotency_class"] is None
        or details["nilpotency_class"] > 3
        or details["derived_length"] is None
        or details["derived_length"] > 2
    ):
        witness = {"members": norm.to_list(), **details}
    return verdict(claims.C_CLASS3, witness, details=details)


@claim(claims.SOLUBLE_2N)
def check_remark_soluble_2n(analysis: GroupAnalysis):
    """A group with C_n(G) = G has derived length at most 2n."""
    profile = analysis.profile
    details = {"c_length": profile.c_length, "derived_length": profile.derived_length}
    if profile.c_length is None:
        return verdict(claims.SOLUBLE_2N, None, details=details, vacuous=True)
    bounded = (
        profile.derived_length is not None
        and profile.derived_length <= 2 * profile.c_length
    )
    witness = None
    if not bounded:
        witness = {
            **details,
            "c_terms": member_lists(analysis.c_series.terms),
            "derived_terms": member_lists(analysis.derived.terms),
        }
    return verdict(claims.SOLUBLE_2N, witness, details=details)


@claim(claims.SUBGROUP_MONOTONE)
def check_subgroup_monotonicity(analysis: GroupAnalysis):
    """H meet C(G) lies in C(H) for every subgroup H checked."""
    g = analysis.group
    norm = analysis.centralizer_norm
    subgroups, exhaustive = analysis.subgroups

    witness = None
    for h in subgroups:
        inside = intersect(h, norm)
        if inside.is_trivial():
            continue
        sub, index_map = restrict(g, h)
        local = lift(g, centralizer_norm(sub), index_map)
        if (x := escapee(inside, local)) is not None:
            witness = {
                "subgroup": h.to_list(),
                "element": x,
                "centralizer_norm": norm.to_list(),
            }
            break
    return verdict(
        claims.SUBGROUP_MONOTONE,
        witness,
        scope=sampling_scope(exhaustive),
        details={"subgroups": len(subgroups)},
    )


@claim(claims.SANDWICH)
def check_sandwich(analysis: GroupAnalysis):
    """Z_{i+1}(G) <= C_i(G) and C_i(G) lies in R_{2i}(G), for i >= 1."""
    g = analysis.group
    upper, c = analysis.upper_central, analysis.c_series
    top = max(upper.stabilized_at, c.stabilized_at, 1)
    depths = analysis.engel_depths(max(analysis.engel_cap, 2 * top))

    witness = None
    strict = []
    for i in range(1, top + 1):
        z_next, c_i = upper.term(i + 1), c.term(i)
        if (x := escapee(z_next, c_i)) is not None:
            witness = {
                "i": i,
                "relation": "upper",
                "element": x,
                "upper_term": z_next.to_list(),
                "c_term": c_i.to_list(),
            }
            break
        member_depths = depths[c_i.elements]
        outside = c_i.elements[(member_depths < 1) | (member_depths > 2 * i)]
        if len(outside):
            x = int(outside[0])
            witness = {
                "i": i,
                "relation": "engel",
                "element": x,
                "partner": engel_partner(g, x, 2 * i),
                "c_term": c_i.to_list(),
            }
            break
        if z_next.size < c_i.size:
            strict.append(i)
    return verdict(claims.SANDWICH, witness, details={"levels": top, "strict": strict})


@claim(claims.HALL)
def check_hall_criterion(analysis: GroupAnalysis):
    """If N is normal, and N and G/N' are nilpotent, then G is nilpotent."""
    g = analysis.group
    subgroups, exhaustive = analysis.subgroups
    nilpotent = analysis.profile.is_nilpotent

    normal = antecedents = 0
    witness = None
    top_nilpotent = {}  # N' -> whether G/N' is nilpotent
    for n in subgroups:
        if not is_normal(g, n):
            continue
        normal += 1
        commutators = derived_subgroup(g, n)
        if commutators not in top_nilpotent:
            top_nilpotent[commutators] = quotient_is_nilpotent(g, commutators)
        if top_nilpotent[commutators] and restricted_is_nilpotent(g, n):
            antecedents += 1
            if not nilpotent:
                witness = {
                    "normal_subgroup": n.to_list(),
                    "derived": commutators.to_list(),
                    "upper_terms": member_lists(analysis.upper_central.terms),
                }
                break
    return verdict(
        claims.HALL,
        witness,
        scope=sampling_scope(exhaustive),
        details={"normal_subgroups": normal, "antecedent_true": antecedents},
        vacuous=antecedents == 0,
    )


def subgroup_quotient_agrees(g: FiniteGroup, h: SubgroupSet, term: SubgroupSet) -> bool:
    """Whether H/term and H are nilpotent together, for a normal term inside h."""
    sub, index_map = restrict(g, h)
    kernel = SubgroupSet.from_elements(sub.order, np.searchsorted(index_map, term.elements))
    return quotient_is_nilpotent(sub, kernel) == restricted_is_nilpotent(g, h)


def nilpotency_predicates(
    g: FiniteGroup, c_terms: Sequence[SubgroupSet], upper_terms: Sequence[SubgroupSet]
) -> dict:
    """The four readings of nilpotency, from the stored C-series and upper central series."""
    quotient_nilpotent = [quotient_is_nilpotent(g, term) for term in c_terms]
    return {
        "nilpotent": upper_terms[-1].is_whole(),
        "c_length": len(c_terms) - 1 if c_terms[-1].is_whole() else None,
        "quotient_by_c_nilpotent": quotient_nilpotent[min(1, len(c_terms) - 1)],
        "quotient_nilpotent_at": next(
            (m for m, flag in enumerate(quotient_nilpotent) if flag), None
        ),
    }


def predicates_agree(predicates: dict) -> bool:
    return (
        predicates["nilpotent"]
        == (predicates["c_length"] is not None)
        == (predicates["quotient_nilpotent_at"] is not None)
        == predicates["quotient_by_c_nilpotent"]
    )


@claim(claims.EQUIVALENCE)
def check_quotient_equivalences(analysis: GroupAnalysis):
    """
    Nilpotency of G, of G/C(G), of some G/C_m(G), and G = C_n(G) all coincide.

    Also H/C_i(G) is nilpotent exactly when H is, for the checked subgroups H
    containing C_i(G), and a nilpotent G/C(G) makes every cyclic subgroup
    subnormal.
    """
    g = analysis.group
    c = analysis.c_series
    c_terms = member_lists(c.terms)
    predicates = nilpotency_predicates(g, c.terms, analysis.upper_central.terms)
    details = {
        "predicates": predicates,
        "note": "subgroup pairs are restricted to subgroups containing C_i(G)",
    }

    if not predicates_agree(predicates):
        witness = {
            "kind": "predicates",
            "predicates": predicates,
            "c_terms": c_terms,
            "upper_terms": member_lists(analysis.upper_central.terms),
        }
        return verdict(claims.EQUIVALENCE, witness, details=details)
    if predicates["quotient_by_c_nilpotent"] and not analysis.is_baer:
        stuck = next(
            (h for h in cyclic_subgroups(g) if not is_subnormal(g, h).is_subnormal), None
        )
        witness = {
            "kind": "baer",
            "predicates": predicates,
            "c_terms": c_terms,
            "cyclic_subgroup": stuck.to_list() if stuck else None,
        }
        return verdict(claims.EQUIVALENCE, witness, details=details)

    subgroups, exhaustive = analysis.subgroups
    pairs = 0
    for i, term in enumerate(c.terms[1:], start=1):
        for h in subgroups:
            if not term.issubset(h):
                continue
            pairs += 1
            if not subgroup_quotient_agrees(g, h, term):
                witness = {
                    "kind": "subgroup",
                    "i": i,
                    "subgroup": h.to_list(),
                    "c_term": term.to_list(),
                    "c_terms": c_terms,
                }
                return verdict(
                    claims.EQUIVALENCE,
                    witness,
                    scope=sampling_scope(exhaustive),
                    details=details,
                )
    details["pairs"] = pairs
    return verdict(claims.EQUIVALENCE, None, scope=sampling_scope(exhaustive), details=details)


@claim(claims.CENTRALIZER_COUNT)
def check_centralizer_count_bound(analysis: GroupAnalysis):
    """[G : C(G)] <= (n - 1)! where n is the number of distinct centralizers."""
    g = analysis.group
    count = distinct_centralizer_count(g)
    index = g.order // analysis.centralizer_norm.size
    details = {"centralizers": count, "index": index}
    bounded = factorial_exceeds(count - 1, index - 1)
    return verdict(claims.CENTRALIZER_COUNT, None if bounded else details, details=details)


@claim(claims.ORACLE_C_CLASSWISE)
def check_classwise_oracle(analysis: GroupAnalysis):
    """C(G) from class representatives equals the naive intersection."""
    g = analysis.group
    if g.order > settings.classwise_oracle_limit:
        return verdict(
            claims.ORACLE_C_CLASSWISE,
            None,
            details={"skipped_above": settings.classwise_oracle_limit},
            vacuous=True,
        )
    classwise, naive = centralizer_norm_classwise(g), centralizer_norm_naive(g)
    witness = None
    if classwise != naive:
        witness = {
            "element": first_difference(classwise, naive),
            "classwise": classwise.to_list(),
            "naive": naive.to_list(),
        }
    return verdict(claims.ORACLE_C_CLASSWISE, witness, details={"order": naive.size})


@claim(claims.ORACLE_B1_SUBGROUPS)
def check_baer_oracle(analysis: GroupAnalysis):
    """B_1(G) from cyclic subgroups equals the intersection over every subgroup."""
    g = analysis.group
    if g.order > settings.baer_oracle_limit:
        return verdict(
            claims.ORACLE_B1_SUBGROUPS,
            None,
            scope=claims.EXHAUSTIVE,
            details={"skipped_above": settings.baer_oracle_limit},
            vacuous=True,
        )
    cyclic, oracle = analysis.baer_norm, baer_norm_oracle(g)
    witness = None
    if cyclic != oracle:
        witness = {
            "element": first_difference(cyclic, oracle),
            "cyclic": cyclic.to_list(),
            "all_subgroups": oracle.to_list(),
        }
    return verdict(
        claims.ORACLE_B1_SUBGROUPS, witness, scope=claims.EXHAUSTIVE, details={"order": oracle.size}
    )


@claim(claims.B1_SANDWICH)
def check_baer_sandwich(analysis: GroupAnalysis):
    """Z(G) <= B_1(G) <= Z_2(G)."""
    norm = analysis.baer_norm
    second = analysis.upper_central.term(2)
    witness = None
    if (x := escapee(analysis.center, norm)) is not None:
        witness = {"element": x, "inner": analysis.center.to_list(), "outer": norm.to_list()}
    elif (x := escapee(norm, second)) is not None:
        witness = {"element": x, "inner": norm.to_list(), "outer": second.to_list()}
    details = {"center": analysis.center.size, "norm": norm.size, "second_center": second.size}
    return verdict(claims.B1_SANDWICH, witness, details=details)


@claim(claims.B1_IN_C)
def check_baer_in_centralizer_norm(analysis: GroupAnalysis):
    """B_1(G) <= C(G)."""
    norm, outer = analysis.baer_norm, analysis.centralizer_norm
    witness = None
    if (x := escapee(norm, outer)) is not None:
        witness = {"element": x, "inner": norm.to_list(), "outer": outer.to_list()}
    return verdict(claims.B1_IN_C, witness, details={"norm": norm.size, "c": outer.size})


@claim(claims.CLASS_AGREEMENT)
def check_class_agreement(analysis: GroupAnalysis):
    """The upper and lower central series give the same nilpotency class."""
    upper, lower = analysis.upper_central, analysis.lower_central
    from_above = nilpotency_class(upper)
    from_below = lower.stabilized_at if lower.reaches_trivial else None
    details = {"from_upper": from_above, "from_lower": from_below}
    witness = None
    if from_above != from_below:
        witness = {
            **details,
            "upper_terms": member_lists(upper.terms),
            "lower_terms": member_lists(lower.terms),
        }
    return verdict(claims.CLASS_AGREEMENT, witness, details=details)


@claim(claims.QUOTIENT_CENTRAL)
def check_quotient_central_series(analysis: GroupAnalysis):
    """Z_j(G/Z_i(G)) = Z_{i+j}(G)/Z_i(G) for every i, j up to stabilization."""
    g = analysis.group
    upper = analysis.upper_central
    for i, term in enumerate(upper.terms):
        qmap = quotient(g, term)
        factor = upper_central_series(qmap.quotient)
        for j in range(upper.stabilized_at - i + 2):
            if factor.term(j) != qmap.image(upper.term(i + j)):
                witness = {
                    "i": i,
                    "j": j,
                    "quotient_term": factor.term(j).to_list(),
                    "image": qmap.image(upper.term(i + j)).to_list(),
                    "upper_terms": member_lists(upper.terms),
                }
                return verdict(claims.QUOTIENT_CENTRAL, witness)
    return verdict(claims.QUOTIENT_CENTRAL, None, details={"levels": upper.stabilized_at})


@claim(claims.NILPOTENT_CBAR)
def check_nilpotent_cbar(analysis: GroupAnalysis):
    """A nilpotent group of class c >= 2 has c_length <= c - 1; of class <= 1, c_length <= 1."""
    profile = analysis.profile
    details = {"nilpotency_class": profile.nilpotency_class, "c_length": profile.c_length}
    if not profile.is_nilpotent:
        return verdict(claims.NILPOTENT_CBAR, None, details=details, vacuous=True)
    bound = max(1, profile.nilpotency_class - 1)
    bounded = profile.c_length is not None and profile.c_length <= bound
    witness = None
    if not bounded:
        witness = {
            **details,
            "upper_terms": member_lists(analysis.upper_central.terms),
            "c_terms": member_lists(analysis.c_series.terms),
        }
    return verdict(claims.NILPOTENT_CBAR, witness, details=details)


@claim(claims.BAER_NILPOTENT)
def check_baer_nilpotent(analysis: GroupAnalysis):
    """A finite group is Baer exactly when it is nilpotent."""
    profile = analysis.profile
    details = {"is_baer": profile.is_baer, "is_nilpotent": profile.is_nilpotent}
    if profile.is_baer == profile.is_nilpotent:
        return verdict(claims.BAER_NILPOTENT, None, details=details)
    g = analysis.group
    stuck = next(
        (h for h in cyclic_subgroups(g) if not is_subnormal(g, h).is_subnormal), None
    )
    witness = {
        **details,
        "cyclic_subgroup": stuck.to_list() if stuck else None,
        "upper_terms": member_lists(analysis.upper_central.terms),
    }
    return verdict(claims.BAER_NILPOTENT, witness, details=details)
