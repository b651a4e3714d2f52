import random

import pytest

from pradical.fields import ExtensionField, PrimeField, RationalFunctionField


@pytest.fixture(scope="session")
def F2():
    return PrimeField(2)


@pytest.fixture(scope="session")
def F5():
    return PrimeField(5)


@pytest.fixture(scope="session")
def F8():
    return ExtensionField(2, 3)


@pytest.fixture(scope="session")
def K2t():
    return RationalFunctionField(2)


@pytest.fixture(scope="session")
def K3t():
    return RationalFunctionField(3)


@pytest.fixture
def rng():
    return random.Random(20260826)
