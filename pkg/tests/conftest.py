import pytest

from entwine import corpus
from entwine.smash import smash_coproduct, smash_product


@pytest.fixture(scope="session")
def h4():
    return corpus.sweedler_h4()


@pytest.fixture(scope="session")
def kz2():
    return corpus.cyclic_group_algebra(2)


@pytest.fixture(scope="session")
def dual_kz2():
    return corpus.dual_cyclic_group_algebra(2)


@pytest.fixture(scope="session")
def yd_h4(h4):
    return corpus.yd_datum(h4)


@pytest.fixture(scope="session")
def long_h4(h4):
    return corpus.long_datum(h4, h4)


@pytest.fixture(scope="session")
def long_kz2(kz2):
    return corpus.long_datum(kz2, kz2)


@pytest.fixture(scope="session")
def yd_dqg_h4(h4):
    return corpus.yd_dqg(h4)


@pytest.fixture(scope="session")
def long_dqg_kz2():
    return corpus.corpus_dqgs()["long_dqg_kz2"]


@pytest.fixture(scope="session")
def double_h4(yd_h4):
    return smash_product(yd_h4)


@pytest.fixture(scope="session")
def cosmash_yd_h4(yd_h4):
    return smash_coproduct(yd_h4)


@pytest.fixture(scope="session")
def monoidal_datums():
    return corpus.corpus_monoidal_datums()


@pytest.fixture(scope="session")
def dqgs():
    return corpus.corpus_dqgs()
