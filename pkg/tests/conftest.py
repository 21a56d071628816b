import os
import sys
from functools import lru_cache

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from fintop.catalog import three_point_catalog  # noqa: E402
from fintop.enumeration import enumerate_labeled  # noqa: E402


@lru_cache(maxsize=None)
def spaces_upto(n: int):
    return tuple(s for k in range(1, n + 1) for s in enumerate_labeled(k))


@pytest.fixture(scope="session")
def catalog():
    return three_point_catalog()


@pytest.fixture(scope="session")
def tau(catalog):
    return catalog


@pytest.fixture(scope="session")
def small_spaces():
    return spaces_upto(3)


@pytest.fixture(scope="session")
def spaces4():
    return spaces_upto(4)
