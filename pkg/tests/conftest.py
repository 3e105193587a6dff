import pytest

from sftkit import full_shift, golden_mean, word
from sftkit.presentation import Presentation


@pytest.fixture
def full2():
    return full_shift(2)


@pytest.fixture
def full3():
    return full_shift(3)


@pytest.fixture
def gm():
    return golden_mean()


@pytest.fixture
def single_loop():
    return Presentation(["a"], [("a", "a")])


@pytest.fixture
def std_exchange(full2):
    """The running example: 0 -> 10, 10 -> 0, 11 -> 11 on the full 2-shift."""
    from sftkit import prefix_exchange
    return prefix_exchange(full2, {word("0"): word("10"),
                                   word("10"): word("0"),
                                   word("11"): word("11")})
