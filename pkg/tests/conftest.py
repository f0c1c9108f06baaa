import pytest

from irrbound import generators

EDGE_PROBS = (0.1, 0.3, 0.5, 0.8)


def random_corpus(count=1000, n_max=40):
    """Deterministic G(n, p) corpus: graph i has n = 1 + i % n_max, p = EDGE_PROBS[i % 4]."""
    for i in range(count):
        yield generators.random_graph(1 + i % n_max, EDGE_PROBS[i % len(EDGE_PROBS)], seed=i)


def family_graphs():
    yield generators.path(1)
    for n in (2, 3, 4, 7, 10, 25):
        yield generators.path(n)
        yield generators.star(n)
        yield generators.complete(n)
    for n in (3, 4, 9):
        yield generators.cycle(n)
    for a, b in ((1, 1), (1, 5), (2, 3), (4, 4)):
        yield generators.complete_bipartite(a, b)
    for n1, n2 in ((3, 3), (7, 5), (4, 11)):
        yield generators.yoke(n1, n2)


@pytest.fixture(scope="session")
def corpus():
    return list(random_corpus())


@pytest.fixture(scope="session")
def families():
    return list(family_graphs())


ACCEPTANCE_LINES = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    if call.when == "call":
        item.call_passed = outcome.get_result().passed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
