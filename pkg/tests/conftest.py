import random

import pytest

from hullforge.ffield import field_new


@pytest.fixture(scope="session")
def f2():
    return field_new(2, 1)


@pytest.fixture(scope="session")
def f3():
    return field_new(3, 1)


@pytest.fixture(scope="session")
def f4():
    return field_new(2, 2)


@pytest.fixture(scope="session")
def f5():
    return field_new(5, 1)


@pytest.fixture(scope="session")
def f8():
    return field_new(2, 3)


@pytest.fixture(scope="session")
def f9():
    return field_new(3, 2)


@pytest.fixture(scope="session")
def f25():
    return field_new(5, 2)


@pytest.fixture(scope="session")
def f27():
    return field_new(3, 3)


@pytest.fixture(scope="session")
def f64():
    return field_new(2, 6)


@pytest.fixture(scope="session")
def f81():
    return field_new(3, 4)


@pytest.fixture
def rng():
    return random.Random(0xC0DE5)
