import pytest

from kirchhoff_bounds.graph import complete_graph, cycle_graph, from_edge_list, path_graph, star_graph


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def star5():
    return star_graph(5)


@pytest.fixture
def broom():
    return from_edge_list(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5)])


@pytest.fixture
def double_hub():
    # vertices 0 and 1 adjacent to each other and to all of 2..7
    pairs = [(0, 1)] + [(h, v) for h in (0, 1) for v in range(2, 8)]
    return from_edge_list(8, pairs)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
