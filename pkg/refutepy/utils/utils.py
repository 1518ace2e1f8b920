"""
This module provides a set of functions which can be useful in any subpackage of `refutepy` package

"""
import inspect
import math


def get_kwargs_used(kwargs, func):
    """Return `kwargs` which are parameters of `func`"""
    possible_kwargs = inspect.signature(func).parameters
    kwargs_used = {k: v for k, v in kwargs.items() if k in possible_kwargs}
    return kwargs_used


def get_not_none(v, v_if_none):
    return v if v is not None else v_if_none


def sigmoid(x: float) -> float:
    """Squash a real ``x`` into (0, 1) by 1/(1+exp(-x)). Infinite values map to 0 and 1"""
    if x == -math.inf:
        return 0.0
    if x >= 0:
        return 1 / (1 + math.exp(-x))
    z = math.exp(x)
    return z / (1 + z)
