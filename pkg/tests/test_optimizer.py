import re

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import Bounds, LinearConstraint, milp

from fleetcharge import (
    DomainError,
    PhaseAssignment,
    ResourceLimitError,
    RobotSpec,
    Schedule,
    density_bound,
    export_model,
    solve_max_flytime,
    solve_min_stations,
    total_flying,
    validate_schedule,
)
from fleetcharge.oracle import brute_max_flytime, brute_min_stations

from conftest import horizon_of, robots_st


def witness_ok(robots, phases, m, horizon):
    return validate_schedule(Schedule(robots, list(phases), m, horizon)).valid


class TestMinStations:
    def test_pair(self):
        robots = [RobotSpec("a", 1, 1), RobotSpec("b", 1, 1)]
        sol = solve_min_stations(robots, 2)
        assert sol.m_min == 1
        assert [p.offset for p in sol.phases] == [0, 1]

    def test_harmonic_three(self):
        robots = [RobotSpec("a", 1, 1), RobotSpec("b", 1, 3), RobotSpec("c", 1, 3)]
        sol = solve_min_stations(robots, 4)
        assert sol.m_min == 1 == brute_min_stations(robots, 4)
        assert witness_ok(robots, sol.phases, 1, 4)

    def test_single(self):
        sol = solve_min_stations([RobotSpec("a", 5, 2)], 7)
        assert sol.m_min == 1

    @pytest.mark.parametrize("n", range(1, 7))
    def test_perfect_staggering(self, n):
        robots = [RobotSpec(i, 1, n - 1) for i in range(n)] if n > 1 else [RobotSpec(0, 1, 1)]
        H = horizon_of(robots)
        sol = solve_min_stations(robots, H)
        assert sol.m_min == 1 == brute_min_stations(robots, H)
        if n > 1:
            assert sorted(p.offset for p in sol.phases) == list(range(n))

    def test_empty(self):
        assert solve_min_stations([], 5).m_min == 0

    def test_bad_horizon(self):
        with pytest.raises(DomainError):
            solve_min_stations([RobotSpec("a", 1, 2)], 4)

    def test_budget(self):
        robots = [RobotSpec(i, 3, 4) for i in range(7)]
        with pytest.raises(ResourceLimitError) as info:
            solve_min_stations(robots, 7, node_budget=5)
        assert info.value.lower >= density_bound(robots)
        assert info.value.upper == 7

    def test_coprime_cycles_collide(self):
        # c=1 on cycles 2 and 3: every residue pair occurs, so they always meet
        robots = [RobotSpec("a", 1, 1), RobotSpec("b", 1, 2)]
        assert solve_min_stations(robots, 6).m_min == 2 == brute_min_stations(robots, 6)


class TestMaxFlytime:
    three = [RobotSpec(i, 1, 1) for i in range(3)]

    def test_three_on_one(self):
        sol = solve_max_flytime(self.three, 1, 2)
        assert sol.objective == 2
        assert sum(sol.selection) == 2
        assert witness_ok(self.three, sol.phases, 1, 2)
        assert brute_max_flytime(self.three, 1, 2) == 2

    def test_no_stations(self):
        sol = solve_max_flytime(self.three, 0, 2)
        assert sol.objective == 0 and not any(sol.selection) and sol.phases == ()

    def test_at_m_min_everything_flies(self):
        robots = [RobotSpec("a", 2, 3), RobotSpec("b", 1, 4), RobotSpec("c", 3, 7)]
        H = horizon_of(robots)
        m = solve_min_stations(robots, H).m_min
        sol = solve_max_flytime(robots, m, H)
        assert all(sol.selection)
        assert sol.objective == total_flying(robots, [True] * 3, H)

    def test_negative_stations(self):
        with pytest.raises(DomainError):
            solve_max_flytime(self.three, -1, 2)


@settings(max_examples=60, deadline=None)
@given(robots_st())
def test_min_stations_matches_oracle(robots):
    H = horizon_of(robots)
    sol = solve_min_stations(robots, H)
    assert sol.m_min == brute_min_stations(robots, H)
    assert density_bound(robots) <= sol.m_min <= len(robots)
    assert witness_ok(robots, sol.phases, sol.m_min, H)


@settings(max_examples=40, deadline=None)
@given(robots_st(max_robots=3, max_charge=4, max_fly=4))
def test_max_flytime_matches_oracle(robots):
    H = horizon_of(robots)
    previous = -1
    for m in range(len(robots) + 1):
        sol = solve_max_flytime(robots, m, H)
        assert sol.objective == brute_max_flytime(robots, m, H)
        assert sol.objective >= previous
        previous = sol.objective
        assert sol.objective == total_flying(robots, sol.selection, H)
        assert witness_ok(robots, sol.phases, m, H)


@settings(max_examples=40, deadline=None)
@given(robots_st(), st.integers(0, 50))
def test_global_shift_keeps_feasibility(robots, k):
    H = horizon_of(robots)
    sol = solve_min_stations(robots, H)
    shifted = [PhaseAssignment(r.id, (p.offset + k) % r.cycle_time) for r, p in zip(robots, sol.phases)]
    assert witness_ok(robots, shifted, sol.m_min, H)


# -- LP export -------------------------------------------------------------

def parse_lp(text):
    """Minimal reader for the LP subset written by export_model."""
    body = [ln for ln in text.splitlines() if not ln.startswith("\\")]
    sections, current = {}, None
    heads = ("Minimize", "Maximize", "Subject To", "Bounds", "Generals", "Binaries", "End")
    for line in body:
        if line in heads:
            current = line
            sections[current] = []
        elif line.startswith("    "):
            sections[current][-1] += " " + line.strip()
        else:
            sections[current].append(line.strip())
    sense = "Minimize" if "Minimize" in sections else "Maximize"
    obj = " ".join(sections[sense])
    rows = sections.get("Subject To", [])
    binaries = " ".join(sections.get("Binaries", [])).split()
    generals = " ".join(sections.get("Generals", [])).split()
    return sense, obj, rows, binaries, generals, sections.get("Bounds", [])


def linear_terms(expr):
    terms = {}
    for coef, name in re.findall(r"([+-]?\s*\d*)\s*([A-Za-z_]\w*)", expr):
        coef = coef.replace(" ", "")
        value = -1 if coef == "-" else 1 if coef in ("", "+") else int(coef)
        terms[name] = terms.get(name, 0) + value
    return terms


def solve_lp_text(text):
    sense, obj, rows, binaries, generals, bounds = parse_lp(text)
    names = binaries + generals
    index = {n: k for k, n in enumerate(names)}
    c = np.zeros(len(names))
    for name, v in linear_terms(obj.split(":", 1)[1]).items():
        c[index[name]] = v
    if sense == "Maximize":
        c = -c
    A, lo, hi = [], [], []
    for row in rows:
        expr = row.split(":", 1)[1]
        lhs, op, rhs = re.match(r"(.*?)(<=|>=|=)\s*(-?\d+)\s*$", expr).groups()
        vec = np.zeros(len(names))
        for name, v in linear_terms(lhs).items():
            vec[index[name]] = v
        A.append(vec)
        rhs = float(rhs)
        lo.append(-np.inf if op == "<=" else rhs)
        hi.append(np.inf if op == ">=" else rhs)
    ub = np.ones(len(names))
    for line in bounds:
        low, _, var, _, up = line.split()
        ub[index[var]] = float(up)
    cons = [LinearConstraint(np.array(A), lo, hi)] if A else []
    res = milp(c, constraints=cons, integrality=np.ones(len(names)), bounds=Bounds(0, ub))
    assert res.success
    return round(-res.fun if sense == "Maximize" else res.fun)


class TestExportModel:
    def test_pair_counts(self):
        text = export_model([RobotSpec("a", 1, 1), RobotSpec("b", 1, 1)], 2)
        sense, obj, rows, binaries, generals, _ = parse_lp(text)
        assert sense == "Minimize" and obj == "obj: m"
        assert len(binaries) == 4 and generals == ["m"]
        assert sum(r.startswith("onehot_") for r in rows) == 2
        assert sum(r.startswith("cap_") for r in rows) == 2
        assert text.endswith("End\n") and text.isascii()

    def test_empty_fleet(self):
        text = export_model([], 1)
        sense, obj, rows, binaries, generals, _ = parse_lp(text)
        assert obj == "obj: 0" and rows == [] and binaries == []

    def test_harmonic_counts(self):
        robots = [RobotSpec("a", 1, 1), RobotSpec("b", 1, 3), RobotSpec("c", 1, 3)]
        _, _, rows, binaries, _, _ = parse_lp(export_model(robots, 4))
        assert len(binaries) == 10
        assert sum(r.startswith("onehot_") for r in rows) == 3
        assert sum(r.startswith("cap_") for r in rows) == 4

    def test_deterministic(self):
        robots = [RobotSpec("a", 2, 3), RobotSpec("b", 1, 4)]
        assert export_model(robots, 5) == export_model(robots, 5)

    def test_max_mode_needs_stations(self):
        with pytest.raises(DomainError):
            export_model([RobotSpec("a", 1, 1)], 2, mode="max-flytime")

    def test_long_rows_are_wrapped(self):
        robots = [RobotSpec(i, 20, 30) for i in range(6)]
        text = export_model(robots, 50)
        assert max(len(line) for line in text.splitlines()) <= 255


@settings(max_examples=25, deadline=None)
@given(robots_st(max_robots=3, max_charge=3, max_fly=3))
def test_exported_models_solve_to_same_optimum(robots):
    H = horizon_of(robots)
    assert solve_lp_text(export_model(robots, H)) == solve_min_stations(robots, H).m_min
    for m in range(len(robots) + 1):
        text = export_model(robots, H, mode="max-flytime", stations=m)
        assert solve_lp_text(text) == solve_max_flytime(robots, m, H).objective
