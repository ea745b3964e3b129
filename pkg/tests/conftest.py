import pytest

from mteval import MetricConfig, normalize, tokenize


@pytest.fixture
def cfg():
    return MetricConfig()


def tok(text: str):
    """Normalize and tokenize in one step, as the corpus pipeline does."""
    return tokenize(normalize(text))


@pytest.fixture
def bhopal_pair():
    hyp = tok("Bhopal is the capital of Madhya Pradesh and also called Lake City.")
    ref = tok("Bhopal is a Lake City and capital of Madhya Pradesh.")
    return hyp, ref
