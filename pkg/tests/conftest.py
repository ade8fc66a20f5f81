import random

import pytest
from hypothesis import strategies as st

from fleetcharge import RobotSpec, scheduling_horizon

CRITERIA = {}


def record_criterion(number, title, passed, detail=""):
    CRITERIA[number] = (title, passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, passed, detail = CRITERIA[number]
        mark = "PASS" if passed else "FAIL"
        line = f"[{mark}] {number:>2}. {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)


@st.composite
def robots_st(draw, max_robots=4, max_charge=6, max_fly=6):
    n = draw(st.integers(1, max_robots))
    return [
        RobotSpec(f"r{i}", draw(st.integers(1, max_charge)), draw(st.integers(1, max_fly)))
        for i in range(n)
    ]


def horizon_of(robots):
    return scheduling_horizon([r.cycle_time for r in robots])


def random_fleet(rng, n, max_charge=6, max_fly=6):
    return [RobotSpec(f"r{i}", rng.randint(1, max_charge), rng.randint(1, max_fly)) for i in range(n)]


@pytest.fixture
def rng():
    return random.Random(20240611)
