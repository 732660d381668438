from fractions import Fraction
from pathlib import Path

import pytest

from projinv import Configuration
from projinv.generate import random_permutation
from projinv.projective_maps import random_projmap, transform

DATA = Path(__file__).parent / "data"

E1, E2, E3, UNIT = (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)


def frame_config(*extra):
    return Configuration.from_coords([E1, E2, E3, UNIT, *extra])


@pytest.fixture
def f5():
    return frame_config((1, 2, 3))


@pytest.fixture
def data_dir():
    return DATA


def rank3(rows):
    """Rank of a 3x3 rational matrix by Gaussian elimination (independent of det3)."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    while rank < 3 and col < 3:
        piv = next((r for r in range(rank, 3) if m[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(3):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def transformed_copy(config, rng, relabel=True):
    """(g, perm, Q) with Q_i = g(P_perm(i))."""
    g = random_projmap(rng)
    perm = random_permutation(rng, config.n) if relabel else tuple(config.labels)
    return g, perm, transform(g, config.relabeled(perm))


_CRITERIA: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    prev_ok = _CRITERIA.get(number, (title, True))[1]
    _CRITERIA[number] = (title, prev_ok and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
