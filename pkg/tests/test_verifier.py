import json
from dataclasses import replace

import pytest

from cnorm.constants import claims
from cnorm.constants import series as kinds
from cnorm.errors import InternalInvariantViolated
from cnorm.structures.families import make_cyclic, make_dihedral, standard_corpus
from cnorm.structures.groups import SubgroupSet
from cnorm.structures.series import (
    GroupAnalysis,
    centralizer_norm,
    engel_partner,
    lower_central_series,
    upper_central_series,
)
from cnorm.verifier import (
    CHECKS,
    ClaimResult,
    check_dihedral_in_group,
    check_dihedral_lemma,
    check_sandwich,
    expected_first_term_order,
    recheck,
    run_all,
)
from cnorm.verifier import checks, suite
from cnorm.verifier.dihedral import case_table
from cnorm.verifier.suite import RECHECKS

from conftest import S3_ALTERNATING, S3_THREE_CYCLE, S3_TRANSPOSITION


@pytest.mark.parametrize("fixture", ["trivial", "z6", "s3", "d4", "d8", "d16", "q8"])
def test_every_claim_holds(fixture, request):
    group = request.getfixturevalue(fixture)
    report = run_all(group, fixture)
    assert report.all_hold, [r.to_json() for r in report.failures()]
    assert [r.claim_id for r in report.results] == list(claims.ORDER)


def test_every_claim_is_registered():
    assert list(CHECKS) == list(claims.ORDER)


def test_vacuous_claims_on_s3(s3):
    report = run_all(s3, "S_3")
    vacuous = {r.claim_id for r in report.results if r.status == claims.HOLDS_VACUOUSLY}
    assert vacuous == {claims.SOLUBLE_2N, claims.HALL, claims.NILPOTENT_CBAR}
    assert report.result(claims.DIHEDRAL).details["degree"] == 3


def test_oracles_are_vacuous_on_large_groups():
    report = run_all(make_dihedral(40))
    assert report.result(claims.ORACLE_C_CLASSWISE).status == claims.HOLDS_VACUOUSLY
    assert report.result(claims.ORACLE_B1_SUBGROUPS).status == claims.HOLDS_VACUOUSLY


def test_sandwich_is_strict_in_d16(d16):
    result = check_sandwich(d16)
    assert result.holds
    assert result.details == {"levels": 4, "strict": [2]}


def test_exhaustive_scope(s3, d16):
    exhaustive = run_all(s3, exhaustive=True)
    assert exhaustive.result(claims.SUBGROUP_MONOTONE).scope == claims.EXHAUSTIVE
    sampled = run_all(d16, exhaustive=True)
    assert sampled.result(claims.SUBGROUP_MONOTONE).scope == claims.SAMPLED
    assert sampled.result(claims.CLASS_AGREEMENT).scope == claims.EXACT


def test_checks_share_an_analysis(d8):
    analysis = GroupAnalysis(d8, "D_8")
    CHECKS[claims.SANDWICH](analysis)
    c = analysis.c_series
    CHECKS[claims.EQUIVALENCE](analysis)
    assert analysis.c_series is c


def test_verification_json(d4):
    data = json.loads(json.dumps(run_all(d4, "D_4").to_json()))
    assert data["group"] == {"name": "D_4", "order": 8}
    assert data["series"]["c"] == [1, 8]
    assert data["series"]["lower_central"] == [8, 2, 1]
    assert data["profile"]["c_length"] == 1
    assert len(data["claims"]) == len(claims.ORDER)
    assert set(data["claims"][0]) == {"id", "status", "scope", "witness", "details", "elapsed"}


def test_dihedral_case_table():
    assert [case_table(alpha) for alpha in range(6)] == [1, 1, 2, 4, 4, 4]


def test_dihedral_first_terms():
    assert [expected_first_term_order(n) for n in (1, 2, 3, 4, 5, 6, 8, 12, 16)] == [
        2, 4, 1, 8, 1, 2, 4, 4, 4,
    ]


def test_degree_reading_of_the_table_disagrees():
    result = check_dihedral_lemma(6)
    assert result.holds
    assert result.details["c1_order"] == 2
    assert result.details["degree_reading_expected"] == 1
    assert not result.details["degree_reading_agrees"]


@pytest.mark.parametrize("n", range(3, 41))
def test_dihedral_lemma(n):
    result = check_dihedral_lemma(n)
    assert result.holds, result.witness
    assert result.details["c1_order"] == expected_first_term_order(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(41, 129))
def test_dihedral_lemma_to_order_256(n):
    assert check_dihedral_lemma(n).holds


def test_dihedral_claim_is_vacuous_elsewhere(q8, z6):
    for group in (q8, z6):
        result = check_dihedral_in_group(group)
        assert result.status == claims.HOLDS_VACUOUSLY
        assert result.details == {"dihedral": False}


def test_failures_need_a_witness():
    with pytest.raises(InternalInvariantViolated):
        ClaimResult(claims.SANDWICH, claims.FAILS)
    with pytest.raises(InternalInvariantViolated):
        ClaimResult(claims.SANDWICH, "maybe")


def test_recheck_reproduces_an_engel_witness(s3):
    witness = {
        "i": 1,
        "relation": "engel",
        "element": S3_THREE_CYCLE,
        "partner": engel_partner(s3, S3_THREE_CYCLE, 2),
        "c_term": S3_ALTERNATING,
    }
    assert recheck(ClaimResult(claims.SANDWICH, claims.FAILS, witness=witness), s3)


def test_recheck_rejects_a_fabricated_failure(s3, d4):
    fake = ClaimResult(claims.CLASS_AGREEMENT, claims.FAILS, witness={"from_upper": 1})
    assert not recheck(fake, s3)
    inclusion = {"element": 1, "inner": [0, 1, 2, 3], "outer": [0, 1, 2, 3]}
    assert not recheck(ClaimResult(claims.B1_IN_C, claims.FAILS, witness=inclusion), d4)


def test_recheck_of_a_holding_claim(s3):
    assert not recheck(ClaimResult(claims.SANDWICH, claims.HOLDS), s3)


def test_every_claim_holds_on_the_small_corpus(corpus_32):
    for name, group in corpus_32:
        report = run_all(group, name)
        assert report.all_hold, (name, [r.to_json() for r in report.failures()])


@pytest.mark.slow
def test_every_claim_holds_on_the_corpus():
    for name, group in standard_corpus(256):
        assert run_all(group, name).all_hold, name


def test_reports_are_deterministic(d8, s3):
    def untimed(report):
        data = report.to_json()
        for entry in data["claims"]:
            del entry["elapsed"]
        return json.dumps(data)

    for group in (d8, s3):
        assert untimed(run_all(group)) == untimed(run_all(group))


def _corrupt_profile(**changes):
    def fault(monkeypatch, analysis):
        monkeypatch.setitem(analysis.__dict__, "profile", replace(analysis.profile, **changes))

    return fault


def _swap_series(kind, replacement):
    def fault(monkeypatch, analysis):
        monkeypatch.setitem(analysis._series, kind, analysis.series(replacement))

    return fault


def _patch(target, name, value):
    def fault(monkeypatch, analysis):
        monkeypatch.setattr(target, name, value)

    return fault


def _patch_many(*faults):
    def fault(monkeypatch, analysis):
        for each in faults:
            each(monkeypatch, analysis)

    return fault


# Each fault makes a check report a failure on a group where the claim holds.
FAULTS = {
    "c-class3": (claims.C_CLASS3, "d8", _patch(checks, "nilpotency_class", lambda report: 99)),
    "soluble-2n": (claims.SOLUBLE_2N, "d8", _corrupt_profile(derived_length=9)),
    "dihedral": (claims.DIHEDRAL, "d8", _swap_series(kinds.C_SERIES, kinds.UPPER_CENTRAL)),
    "hall": (
        claims.HALL,
        "s3",
        _patch_many(
            _patch(checks, "quotient_is_nilpotent", lambda g, n: True),
            _patch(checks, "restricted_is_nilpotent", lambda g, h: True),
        ),
    ),
    "equivalence-predicates": (
        claims.EQUIVALENCE,
        "d8",
        _patch(checks, "quotient_is_nilpotent", lambda g, n: False),
    ),
    "equivalence-baer": (
        claims.EQUIVALENCE,
        "d8",
        lambda monkeypatch, analysis: monkeypatch.setitem(analysis.__dict__, "is_baer", False),
    ),
    "equivalence-subgroup": (
        claims.EQUIVALENCE,
        "d8",
        _patch(checks, "subgroup_quotient_agrees", lambda g, h, term: False),
    ),
    "centralizer-count": (
        claims.CENTRALIZER_COUNT,
        "s3",
        _patch(checks, "distinct_centralizer_count", lambda g: 1),
    ),
    "oracle-c": (
        claims.ORACLE_C_CLASSWISE,
        "s3",
        _patch(checks, "centralizer_norm_naive", SubgroupSet.whole),
    ),
    "oracle-b1": (
        claims.ORACLE_B1_SUBGROUPS,
        "s3",
        _patch(checks, "baer_norm_oracle", SubgroupSet.whole),
    ),
    "class-agreement": (
        claims.CLASS_AGREEMENT,
        "d8",
        _patch(checks, "nilpotency_class", lambda report: 99),
    ),
    "quotient-central": (
        claims.QUOTIENT_CENTRAL,
        "d8",
        _swap_series(kinds.UPPER_CENTRAL, kinds.C_SERIES),
    ),
    "nilpotent-cbar": (claims.NILPOTENT_CBAR, "d8", _corrupt_profile(c_length=7)),
    "baer-nilpotent-s3": (claims.BAER_NILPOTENT, "s3", _corrupt_profile(is_baer=True)),
    "baer-nilpotent-d8": (claims.BAER_NILPOTENT, "d8", _corrupt_profile(is_baer=False)),
}


@pytest.mark.parametrize("claim_id, fixture, fault", list(FAULTS.values()), ids=list(FAULTS))
def test_recheck_rejects_failures_of_a_faulty_check(
    claim_id, fixture, fault, monkeypatch, request
):
    group = request.getfixturevalue(fixture)
    analysis = GroupAnalysis(group, fixture)
    fault(monkeypatch, analysis)
    result = CHECKS[claim_id](analysis)
    assert result.status == claims.FAILS
    monkeypatch.undo()
    assert not recheck(result, group), result.witness


def test_recheck_covers_every_claim():
    assert set(RECHECKS) == set(claims.ORDER)


def test_recheck_decides_on_the_witness(d8, monkeypatch):
    witness = {
        "degree": 8,
        "c1_order": 4,
        "expected": 1,
        "c1": centralizer_norm(d8).to_list(),
    }
    result = ClaimResult(claims.DIHEDRAL, claims.FAILS, witness=witness)
    assert not recheck(result, d8)
    monkeypatch.setattr(suite, "expected_first_term_order", lambda n: 1)
    assert recheck(result, d8)


def test_recheck_reproduces_a_c_class3_witness(s3):
    witness = {
        "members": list(range(6)),
        "x": S3_TRANSPOSITION,
        "y": engel_partner(s3, S3_TRANSPOSITION, 2),
    }
    assert recheck(ClaimResult(claims.C_CLASS3, claims.FAILS, witness=witness), s3)


def test_recheck_rejects_series_of_another_group(d8):
    witness = {
        "from_upper": 3,
        "from_lower": 4,
        "upper_terms": [term.to_list() for term in upper_central_series(d8).terms],
        "lower_terms": [term.to_list() for term in lower_central_series(make_cyclic(16)).terms],
    }
    assert not recheck(ClaimResult(claims.CLASS_AGREEMENT, claims.FAILS, witness=witness), d8)


def test_recheck_of_a_malformed_witness(s3):
    witness = {"normal_subgroup": [0, 99], "derived": [0]}
    assert not recheck(ClaimResult(claims.HALL, claims.FAILS, witness=witness), s3)
