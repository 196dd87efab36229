from functools import lru_cache

import pytest

from unitquad.qgraph import build_graph


@lru_cache(maxsize=None)
def graph(q):
    return build_graph(q)


@pytest.fixture
def D():
    """Cached D_q builder, shared across tests."""
    return graph
