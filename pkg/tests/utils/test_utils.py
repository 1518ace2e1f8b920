import math

import pytest

from refutepy.utils import utils


def test_get_kwargs_used():
    def func(a, b=1):
        return a + b

    kwargs = utils.get_kwargs_used({'a': 1, 'c': 3}, func)
    assert kwargs == {'a': 1}, 'utils.get_kwargs_used failed. Only the parameters of the function should be kept'


def test_get_not_none():
    assert utils.get_not_none(None, 5) == 5
    assert utils.get_not_none(0, 5) == 0, 'utils.get_not_none failed. Falsy values are not None'


def test_sigmoid():
    assert utils.sigmoid(0) == 0.5
    assert utils.sigmoid(-math.inf) == 0, 'utils.sigmoid failed on -inf'
    assert utils.sigmoid(math.inf) == 1, 'utils.sigmoid failed on +inf'
    assert utils.sigmoid(-1000) == 0 and utils.sigmoid(1000) == 1
    assert utils.sigmoid(2) + utils.sigmoid(-2) == pytest.approx(1)
