import pytest

from tempex import NonStrictTemporalGraph, StrictTemporalGraph


@pytest.fixture
def g1():
    """Strict path fixture: edge {0,1} at step 1, {1,2} at step 2."""
    return StrictTemporalGraph(3, 2, [[(0, 1)], [(1, 2)]])


@pytest.fixture
def g2():
    """Non-strict fixture with one free transition."""
    return NonStrictTemporalGraph(4, 2, [[{0, 1}, {2, 3}], [{0, 2}, {1, 3}]])


@pytest.fixture
def g3():
    """g2 extended by a single full component at step 3."""
    return NonStrictTemporalGraph(
        4, 3, [[{0, 1}, {2, 3}], [{0, 2}, {1, 3}], [{0, 1, 2, 3}]]
    )


@pytest.fixture
def h1():
    """Two isolated vertices in both steps; nothing is ever co-located."""
    return NonStrictTemporalGraph(2, 2, [[{0}, {1}], [{0}, {1}]])
