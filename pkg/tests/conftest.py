import pytest

from artinrep.characters import GroupTable
from artinrep.frobenius import find_s4_quartic
from artinrep.registry import ingest_registry


@pytest.fixture(scope="session")
def s4():
    return GroupTable.load("group_s4")


@pytest.fixture(scope="session")
def s4p():
    return GroupTable.load("group_s4", table_id="s4p")


@pytest.fixture(scope="session")
def c2():
    return GroupTable.load("group_c2")


@pytest.fixture(scope="session")
def compositum():
    return GroupTable.load("group_compositum")


@pytest.fixture(scope="session")
def registry():
    return ingest_registry()


@pytest.fixture(scope="session")
def e21(registry):
    return registry.curve("21.A1")


@pytest.fixture(scope="session")
def e63(registry):
    return registry.curve("63.A2")


@pytest.fixture(scope="session")
def c1(registry):
    return registry.quartic("C1")


@pytest.fixture(scope="session")
def field_l():
    return find_s4_quartic(6)


@pytest.fixture(scope="session")
def field_lp(field_l):
    return find_s4_quartic(6, exclude=(field_l,))
