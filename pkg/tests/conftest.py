"""Shared test fixtures: loaded ideal tuples and cached wall atlases."""

from fractions import Fraction

import pytest

from mmideal import build_tuple, cell_decomposition, load_fixture

FIXTURE_NAMES = ("CHAIN10", "NEST14", "PROP16", "RAT6", "SMOOTH1")


@pytest.fixture(scope="session")
def tuples():
    """Name -> IdealTuple for every bundled fixture."""
    return {name: build_tuple(load_fixture(name)) for name in FIXTURE_NAMES}


@pytest.fixture(scope="session")
def rat6(tuples):
    return tuples["RAT6"]


@pytest.fixture(scope="session")
def chain10(tuples):
    return tuples["CHAIN10"]


@pytest.fixture(scope="session")
def nest14(tuples):
    return tuples["NEST14"]


@pytest.fixture(scope="session")
def prop16(tuples):
    return tuples["PROP16"]


@pytest.fixture(scope="session")
def smooth1(tuples):
    return tuples["SMOOTH1"]


@pytest.fixture(scope="session")
def rat6_atlas(rat6):
    return cell_decomposition(rat6, (Fraction(1), Fraction(1)))


@pytest.fixture(scope="session")
def chain10_atlas(chain10):
    return cell_decomposition(chain10, (Fraction(1), Fraction(1)))


@pytest.fixture(scope="session")
def prop16_atlas(prop16):
    # the log-canonical wall z1 + z2 = 1/9 fits well inside this box and the
    # arrangement stays small
    box = (Fraction(1, 8), Fraction(1, 8))
    return cell_decomposition(prop16, box)
