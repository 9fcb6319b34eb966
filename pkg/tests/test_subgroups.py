import pytest

from cnorm.errors import BadParameter, NotASubgroup, NotContained, ParentMismatch
from cnorm.structures.families import make_cyclic, make_dihedral, make_symmetric
from cnorm.structures.groups import SubgroupSet, is_normal, normal_witness
from cnorm.structures.series import is_nilpotent
from cnorm.structures.subgroups import (
    all_subgroups,
    center,
    centralizer,
    cyclic_subgroups,
    derived_subgroup,
    distinct_centralizer_count,
    generated,
    intersect,
    is_subgroup,
    is_subnormal,
    normal_closure,
    normalizer,
    sampled_subgroups,
    subgroups_for_checks,
)

from conftest import (
    S3_ALTERNATING,
    S3_OTHER_TRANSPOSITION,
    S3_THREE_CYCLE,
    S3_TRANSPOSITION,
)


def test_centralizers(z6, d4):
    assert all(centralizer(z6, x).is_whole() for x in z6.elements())
    assert centralizer(d4, 1).to_list() == [0, 1, 2, 3]
    assert centralizer(d4, d4.identity).is_whole()


def test_centralizer_contains_the_element_and_the_center(corpus_32):
    for name, group in corpus_32:
        middle = center(group)
        for x in group.elements():
            c = centralizer(group, x)
            assert generated(group, [x]) <= c, name
            assert middle <= c, name


def test_centers(z6, s3, d4):
    assert center(z6).is_whole()
    assert center(s3).is_trivial()
    assert center(d4).to_list() == [0, 2]


def test_normalizers(s3, d4):
    assert normalizer(s3, SubgroupSet.whole(s3)).is_whole()
    assert normalizer(d4, center(d4)).is_whole()
    flip = generated(s3, [S3_TRANSPOSITION])
    assert normalizer(s3, flip) == flip


def test_normalizer_rejects_non_subgroups(s3):
    with pytest.raises(NotASubgroup):
        normalizer(s3, SubgroupSet.from_elements(s3.order, [0, S3_THREE_CYCLE]))


def test_normalizer_contains_the_subgroup(corpus_32):
    for name, group in corpus_32:
        for h in cyclic_subgroups(group):
            n = normalizer(group, h)
            assert h <= n, name
            assert n.is_whole() == is_normal(group, h), name


def test_generated(s3, d8):
    assert generated(s3, []).is_trivial()
    assert generated(d8, [1]).size == 8
    assert generated(s3, [S3_TRANSPOSITION, S3_OTHER_TRANSPOSITION]).is_whole()


def test_generated_is_idempotent(d8):
    h = generated(d8, [3, 8])
    assert generated(d8, h.elements) == h
    assert is_subgroup(d8, h.members)


def test_intersections(d4):
    rotations, flip = generated(d4, [1]), generated(d4, [4])
    assert intersect(rotations, SubgroupSet.whole(d4)) == rotations
    assert intersect(rotations, flip).is_trivial()
    assert intersect(flip, flip) == flip


def test_intersecting_subgroups_of_different_groups(d4, s3):
    with pytest.raises(ParentMismatch):
        intersect(center(d4), center(s3))


def test_normal_closures(s3, d4):
    whole = SubgroupSet.whole(s3)
    alternating = SubgroupSet.from_elements(6, S3_ALTERNATING)
    assert normal_closure(s3, alternating, whole) == alternating
    assert normal_closure(s3, generated(s3, [S3_TRANSPOSITION]), whole).is_whole()
    trivial = SubgroupSet.trivial(d4)
    assert normal_closure(d4, trivial, SubgroupSet.whole(d4)) == trivial


def test_normal_closure_outside_the_ambient(d4):
    with pytest.raises(NotContained):
        normal_closure(d4, generated(d4, [4]), generated(d4, [1]))


def test_subnormality_in_d4(d4):
    verdict = is_subnormal(d4, generated(d4, [4]))
    assert verdict.is_subnormal
    assert verdict.defect == 2
    assert [k.size for k in verdict.chain] == [8, 4, 2]


def test_transposition_is_not_subnormal(s3):
    verdict = is_subnormal(s3, generated(s3, [S3_TRANSPOSITION]))
    assert not verdict.is_subnormal
    assert verdict.chain is None and verdict.defect is None
    assert verdict.terminal.is_whole()


def test_whole_group_has_defect_zero(s3):
    verdict = is_subnormal(s3, SubgroupSet.whole(s3))
    assert verdict.is_subnormal and verdict.defect == 0


def test_subnormal_subgroups_of_s3(s3):
    subnormal = [h.size for h in all_subgroups(s3) if is_subnormal(s3, h).is_subnormal]
    assert subnormal == [1, 3, 6]


def test_nilpotent_groups_have_only_subnormal_subgroups(corpus_32):
    for name, group in corpus_32:
        if not is_nilpotent(group):
            continue
        for h in sampled_subgroups(group):
            verdict = is_subnormal(group, h)
            assert verdict.is_subnormal, name
            assert len(verdict.chain) <= group.order


def test_distinct_centralizer_counts(z6, s3, d4):
    assert distinct_centralizer_count(z6) == 1
    assert distinct_centralizer_count(s3) == 5
    assert distinct_centralizer_count(d4) == 4


def test_normal_witness(s3):
    flip = generated(s3, [S3_TRANSPOSITION])
    h, t = normal_witness(s3, flip)
    assert h in flip and s3.conjugation_table[t, h] not in flip
    assert normal_witness(s3, SubgroupSet.from_elements(6, S3_ALTERNATING)) is None


def test_derived_subgroup(s3, d4):
    assert derived_subgroup(s3, SubgroupSet.whole(s3)).to_list() == S3_ALTERNATING
    assert derived_subgroup(d4, SubgroupSet.whole(d4)) == center(d4)


def test_cyclic_subgroups(s3):
    assert sorted(h.size for h in cyclic_subgroups(s3)) == [1, 2, 2, 2, 3]


def test_all_subgroups(s3, d4):
    assert [h.size for h in all_subgroups(s3)] == [1, 2, 2, 2, 3, 6]
    assert len(all_subgroups(d4)) == 10


def test_all_subgroups_is_limited_to_small_groups():
    with pytest.raises(BadParameter):
        all_subgroups(make_cyclic(25))


def test_sampled_subgroups_cover_the_structure(d8):
    extra = [center(d8)]
    sampled = sampled_subgroups(d8, extra)
    assert SubgroupSet.whole(d8) in sampled
    assert center(d8) in sampled
    assert set(cyclic_subgroups(d8)) <= set(sampled)
    assert len(set(sampled)) == len(sampled)


def test_subgroups_for_checks():
    small, large = make_symmetric(3), make_dihedral(16)
    subgroups, exhaustive = subgroups_for_checks(small, exhaustive=True)
    assert exhaustive and len(subgroups) == 6
    _, exhaustive = subgroups_for_checks(large, exhaustive=True)
    assert not exhaustive
