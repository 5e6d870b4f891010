import random
import sys
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from signed_at.generators import complete_graph, random_near_triangulation, random_signed_graph  # noqa: E402

_ACCEPTANCE = []


def small_graph_harness(seed=20240601, draws=100):
    """100 random signed graphs on at most 5 vertices / 8 edges, then all 64 signings of K4."""
    rng = random.Random(seed)
    graphs = []
    for _ in range(draws):
        n = rng.randint(1, 5)
        graphs.append(random_signed_graph(n, 8, rng, p=rng.choice((0.4, 0.6, 0.8))))
    k4 = complete_graph(4)
    for signs in product((1, -1), repeat=6):
        graphs.append(k4.with_signs(signs))
    return graphs


def triangulation_harness(seed=7, per_cell=2):
    """Near triangulations with outer length 3..6 and 0..3 interior vertices."""
    rng = random.Random(seed)
    out = []
    for k in range(3, 7):
        for m in range(4):
            for _ in range(per_cell):
                out.append(random_near_triangulation(k, m, rng))
    return out


@pytest.fixture(scope="session")
def small_graphs():
    return small_graph_harness()


@pytest.fixture
def criterion():
    """Record one acceptance line; printed in the terminal summary."""
    def record(number, text, passed):
        _ACCEPTANCE.append((number, text, passed))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, passed in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {text}")
