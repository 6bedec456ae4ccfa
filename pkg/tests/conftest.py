import pytest

from hyperinduct import make_group

A4 = "perm(4;(1 2 3);(1 2)(3 4))"
Q8 = "perm(8;(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6))"

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def S3():
    return make_group("sym:3")


@pytest.fixture(scope="session")
def C6():
    return make_group("cyclic:6")


@pytest.fixture(scope="session")
def D8():
    return make_group("dihedral:4")


@pytest.fixture(scope="session")
def A4g():
    return make_group(A4)


def sub_by_order(G, order, *, index=0):
    from hyperinduct import all_subgroups
    return [H for H in all_subgroups(G) if H.order == order][index]


def perm_index(G, *cycle_points):
    """Index of the permutation given by one cycle (1-based points)."""
    n = len(G.labels[0])
    perm = list(range(n))
    pts = [c - 1 for c in cycle_points]
    for i, c in enumerate(pts):
        perm[c] = pts[(i + 1) % len(pts)]
    return G.index_of(tuple(perm))
