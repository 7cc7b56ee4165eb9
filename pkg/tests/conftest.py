import pytest

from nsalg.corpus import random_pairs


@pytest.fixture(scope="session")
def corpus_pairs():
    """The fixed-seed 500-pair corpus shared by the cross-validation suites."""
    return random_pairs(500)
