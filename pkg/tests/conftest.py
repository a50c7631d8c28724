import pytest

import semiring_lab as sl


@pytest.fixture(scope="session")
def B():
    return sl.boolean_semiring()


@pytest.fixture(scope="session")
def B3():
    return sl.chain_semiring(2)


@pytest.fixture(scope="session")
def B4():
    return sl.chain_semiring(3)


@pytest.fixture(scope="session")
def B31():
    return sl.b31()


@pytest.fixture(scope="session")
def F2():
    return sl.cyclic_ring(2)


@pytest.fixture(scope="session")
def Z3():
    return sl.cyclic_ring(3)


@pytest.fixture(scope="session")
def Z4():
    return sl.cyclic_ring(4)


@pytest.fixture(scope="session")
def ExtF2(F2):
    return sl.ext_semiring(F2)


@pytest.fixture(scope="session")
def ExtZ3(Z3):
    return sl.ext_semiring(Z3)


@pytest.fixture(scope="session")
def L3():
    return sl.chain_lattice_semiring(3)


@pytest.fixture(scope="session")
def Bool2():
    return sl.boolean_lattice_semiring(2)
