import pytest

from hanoiseq.catalog import catalog_prefix


@pytest.fixture(scope="session")
def classical_64k():
    return catalog_prefix("classical-hanoi", 2 ** 16)


@pytest.fixture(scope="session")
def lazy_64k():
    return catalog_prefix("lazy-hanoi", 2 ** 16)


@pytest.fixture(scope="session")
def period_doubling_64k():
    return catalog_prefix("period-doubling", 2 ** 16)


@pytest.fixture(scope="session")
def thue_morse_64k():
    return catalog_prefix("thue-morse", 2 ** 16)
