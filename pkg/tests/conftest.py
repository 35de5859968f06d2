import pytest

from vgitcurves.golden import load_corpus


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()
