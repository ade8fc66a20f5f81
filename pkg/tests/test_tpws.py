import math

import pytest
from hypothesis import given, settings, strategies as st

from fleetcharge import DomainError, RobotSpec, conflict, round_instance, schedule_tpws
from fleetcharge.tpws import RoundedJob


def job(length, window, rid=None):
    return RoundedJob(rid, length, window, length >= window)


def slots(j, offset, horizon):
    return {t for t in range(horizon) if (t - offset) % j.window < j.length}


def enumerate_conflict(a, oa, b, ob):
    horizon = math.lcm(a.window, b.window)
    return bool(slots(a, oa, horizon) & slots(b, ob, horizon))


class TestRounding:
    def test_round_up_and_down(self):
        (j,) = round_instance([RobotSpec("a", 3, 7)])
        assert (j.length, j.window, j.full_machine) == (4, 8, False)

    def test_already_pow2(self):
        (j,) = round_instance([RobotSpec("a", 4, 4)])
        assert (j.length, j.window) == (4, 8)

    def test_full_machine(self):
        (j,) = round_instance([RobotSpec("a", 5, 4)])
        assert (j.length, j.window, j.full_machine) == (8, 8, True)

    def test_length_capped_at_window(self):
        (j,) = round_instance([RobotSpec("a", 5, 1)])
        assert (j.length, j.window, j.full_machine) == (4, 4, True)


class TestConflict:
    def test_even_vs_slot_two(self):
        assert conflict(job(1, 2), 0, job(1, 4), 2)
        assert enumerate_conflict(job(1, 2), 0, job(1, 4), 2)

    def test_even_vs_odd(self):
        assert not conflict(job(1, 2), 0, job(1, 4), 1)
        assert not enumerate_conflict(job(1, 2), 0, job(1, 4), 1)

    def test_full_machine_blocks_everything(self):
        full = job(4, 4)
        for other, offs in ((job(1, 2), (0, 1)), (job(2, 8), (0, 2, 4, 6)), (job(1, 16), range(16))):
            for o in offs:
                assert conflict(full, 0, other, o)

    def test_misaligned(self):
        with pytest.raises(DomainError):
            conflict(job(2, 4), 1, job(1, 2), 0)


@st.composite
def aligned_pair(draw):
    out = []
    for _ in range(2):
        b = draw(st.integers(0, 5))
        a = draw(st.integers(0, b))
        j = job(2**a, 2**b)
        out += [j, draw(st.integers(0, 2**b // 2**a - 1)) * 2**a]
    return out


@given(aligned_pair())
def test_conflict_matches_enumeration(pair):
    a, oa, b, ob = pair
    assert conflict(a, oa, b, ob) == enumerate_conflict(a, oa, b, ob)


class TestSchedule:
    def test_harmonic(self):
        count, assignments = schedule_tpws([job(1, 2, "a"), job(1, 4, "b"), job(1, 4, "c")])
        assert count == 1
        assert [a.offset for a in assignments] == [0, 1, 3]

    def test_two_full(self):
        assert schedule_tpws([job(2, 2), job(2, 2)])[0] == 2

    def test_rounded_pair(self):
        jobs = round_instance([RobotSpec("a", 3, 7), RobotSpec("b", 3, 7)])
        count, assignments = schedule_tpws(jobs)
        assert count == 1
        assert sorted(a.offset for a in assignments) == [0, 4]

    def test_empty(self):
        assert schedule_tpws([]) == (0, [])


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 4), st.integers(1, 5)), min_size=1, max_size=8))
def test_packing_is_conflict_free(pairs):
    jobs = [job(2**min(a, b - 1), 2**b, k) for k, (a, b) in enumerate(pairs)]
    count, assignments = schedule_tpws(jobs)
    assert len(assignments) == len(jobs)
    horizon = max(j.window for j in jobs)
    by_id = {j.robot_id: j for j in jobs}
    for machine in range(count):
        used = [0] * horizon
        for a in assignments:
            if a.machine_index == machine:
                for t in slots(by_id[a.robot_id], a.offset, horizon):
                    used[t] += 1
        assert max(used) <= 1
    density = sum(j.length / j.window for j in jobs)
    assert count >= math.ceil(density - 1e-9)


def test_rounded_windows_are_not_exact_periods():
    # cycles 3 and 2 round to window 2: the rounded jobs share one machine,
    # yet robots with exact periods 3 and 2 collide at every offset pair
    from fleetcharge import solve_min_stations

    robots = [RobotSpec("a", 1, 2), RobotSpec("b", 1, 1)]
    count, _ = schedule_tpws(round_instance(robots))
    assert count == 1
    assert solve_min_stations(robots, 6).m_min == 2
