from pathlib import Path

import pytest

from lettericity.graph import Graph, from_graph6

DATA = Path(__file__).parent / "data"


def load_corpus(n: int) -> list[Graph]:
    return [from_graph6(line) for line in (DATA / f"graphs_n{n}.g6").read_text().split()]


@pytest.fixture(scope="session")
def corpus():
    cache: dict[int, list[Graph]] = {}

    def get(n: int) -> list[Graph]:
        if n not in cache:
            cache[n] = load_corpus(n)
        return cache[n]

    return get


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


_ACCEPTANCE: list[str] = []


def record_acceptance(line: str) -> None:
    print(line)
    _ACCEPTANCE.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
