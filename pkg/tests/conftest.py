from pathlib import Path

import pytest

from treebij.trees import LabeledTree, RootedTree

DATA = Path(__file__).parent / "data"

# 16-vertex tree whose image under Phi_6 has type 1^7 2^1 3^2
TSTAR_EDGES = [(6, 9), (9, 11), (9, 13), (13, 14), (8, 12), (8, 15), (3, 16), (2, 6),
               (5, 6), (1, 7), (3, 8), (7, 9), (8, 9), (4, 12), (10, 12)]

# Phi_6(T*): chain edges plus the eight attachment edges
TPRIME_PARENT = {11: 14, 14: 13, 13: 9, 9: 6, 12: 15, 15: 8, 16: 3,
                 2: 11, 5: 11, 1: 7, 3: 12, 7: 6, 8: 6, 4: 15, 10: 15}

# rooted tree T_0 on [14], root 4, used for the leaf-group code
T0_PARENT = {1: 4, 6: 4, 13: 4, 14: 4, 3: 6, 7: 6, 8: 14, 2: 8, 11: 8,
             10: 13, 5: 10, 9: 10, 12: 10}


@pytest.fixture
def tstar() -> LabeledTree:
    return LabeledTree.from_edges(16, TSTAR_EDGES)


@pytest.fixture
def tprime() -> RootedTree:
    return RootedTree.on_range(16, 6, TPRIME_PARENT)


@pytest.fixture
def t0() -> RootedTree:
    return RootedTree.on_range(14, 4, T0_PARENT)


@pytest.fixture
def tstar_file() -> Path:
    return DATA / "tstar.tree"


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
