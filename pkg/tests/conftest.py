import pytest

from mixshuffle.kernel import make_alphabet


@pytest.fixture(scope="session")
def stuffle():
    return make_alphabet("stuffle")


@pytest.fixture(scope="session")
def zero_xy():
    return make_alphabet("zero", {"x": 1, "y": 1})
