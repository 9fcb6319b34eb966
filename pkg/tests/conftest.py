from pathlib import Path

import pytest

from cnorm.structures.families import (
    make_cyclic,
    make_dihedral,
    make_generalized_quaternion,
    make_symmetric,
    standard_corpus,
)

SNAPSHOTS = Path(__file__).parent / "snapshots"

# Element indices in make_symmetric(3), which lists permutations lexicographically.
S3_TRANSPOSITION = 1  # (1 2)
S3_OTHER_TRANSPOSITION = 2  # (0 1)
S3_THREE_CYCLE = 3  # (0 1 2)
S3_ALTERNATING = [0, 3, 4]


@pytest.fixture
def trivial():
    return make_cyclic(1)


@pytest.fixture
def z6():
    return make_cyclic(6)


@pytest.fixture
def s3():
    return make_symmetric(3)


@pytest.fixture
def d4():
    return make_dihedral(4)


@pytest.fixture
def d8():
    return make_dihedral(8)


@pytest.fixture
def d16():
    return make_dihedral(16)


@pytest.fixture
def q8():
    return make_generalized_quaternion(8)


@pytest.fixture(scope="session")
def corpus_32():
    return standard_corpus(32)


@pytest.fixture(scope="session")
def corpus_64():
    return standard_corpus(64)
