import pytest

from zfam.groups import ElementaryAbelianGroup, cyclic_table, d4, q8, s3


@pytest.fixture(scope="session")
def z2_2():
    return ElementaryAbelianGroup(2)


@pytest.fixture(scope="session")
def z2_3():
    return ElementaryAbelianGroup(3)


@pytest.fixture(scope="session")
def group_s3():
    return s3()


@pytest.fixture(scope="session")
def group_d4():
    return d4()


@pytest.fixture(scope="session")
def group_q8():
    return q8()


@pytest.fixture(scope="session")
def group_z4():
    return cyclic_table(4)
