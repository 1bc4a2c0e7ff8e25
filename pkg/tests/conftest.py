import pytest

from mingen import groupio

ACCEPTANCE_LINES = []


def names(G, spec):
    """Indices for a space-separated list of element names."""
    return [G.element(s) for s in spec.split()]


def small_corpus():
    """Groups of order <= 8."""
    groups = {f"cyclic:{n}": groupio.cyclic(n) for n in range(1, 9)}
    groups["klein4"] = groupio.klein4()
    groups["dihedral:3"] = groupio.dihedral(3)
    groups["dihedral:4"] = groupio.dihedral(4)
    groups["symmetric:3"] = groupio.symmetric(3)
    return groups


def medium_corpus():
    """Groups of order <= 24."""
    groups = small_corpus()
    for spec in [
        "dihedral:5",
        "dihedral:6",
        "a4",
        "cyclic:2*cyclic:4",
        "cyclic:2*cyclic:2*cyclic:2",
        "cyclic:3*cyclic:3",
        "cyclic:2*cyclic:6",
        "cyclic:4*cyclic:4",
        "cyclic:2*cyclic:3",
        "cyclic:12",
        "symmetric:4",
    ]:
        groups[spec] = groupio.builtin(spec)
    return groups


@pytest.fixture(scope="session")
def a4():
    return groupio.builtin("a4")


@pytest.fixture(scope="session")
def corpus8():
    return small_corpus()


@pytest.fixture(scope="session")
def corpus24():
    return medium_corpus()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
