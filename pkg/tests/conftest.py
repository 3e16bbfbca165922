import pytest

from frobring import (
    build_gf,
    build_matrix_ring,
    build_product,
    build_zmod,
)
from frobring.rings import build_table_ring, builtin_table_spec


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run tests marked slow",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def z4():
    return build_zmod(4)


@pytest.fixture(scope="session")
def z6():
    return build_zmod(6)


@pytest.fixture(scope="session")
def z8():
    return build_zmod(8)


@pytest.fixture(scope="session")
def z9():
    return build_zmod(9)


@pytest.fixture(scope="session")
def z12():
    return build_zmod(12)


@pytest.fixture(scope="session")
def gf2():
    return build_gf(2)


@pytest.fixture(scope="session")
def gf3():
    return build_gf(3)


@pytest.fixture(scope="session")
def gf4():
    return build_gf(4)


@pytest.fixture(scope="session")
def gf9():
    return build_gf(9)


@pytest.fixture(scope="session")
def m2f2(gf2):
    return build_matrix_ring(2, gf2)


@pytest.fixture(scope="session")
def m2f3(gf3):
    return build_matrix_ring(2, gf3)


@pytest.fixture(scope="session")
def f2xf2(gf2):
    return build_product([gf2, gf2])


@pytest.fixture(scope="session")
def ex5_5_ring():
    return build_table_ring(builtin_table_spec("ex5_5"), max_size=10000)
