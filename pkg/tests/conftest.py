import pytest

from wedderburn import builtin_s5, builtin_sl32_on_p2f2, builtin_sl32_s8, make_field


@pytest.fixture(scope="session")
def sl32_s8():
    return builtin_sl32_s8()


@pytest.fixture(scope="session")
def sl32_p2f2():
    return builtin_sl32_on_p2f2()


@pytest.fixture(scope="session")
def s5():
    return builtin_s5()


@pytest.fixture(scope="session")
def f11():
    return make_field(11)


@pytest.fixture(scope="session")
def f13():
    return make_field(13)


@pytest.fixture(scope="session")
def f169():
    return make_field(13, 2, seed=0)
