"""
Exhaustive reference solvers.

These are deliberately naive: every offset tuple (and every selection) is
enumerated and its occupancy is evaluated on every slot of the horizon.
numpy only batches the innermost robot's offsets; no pruning, symmetry or
ordering tricks are used.  Caps fail loudly instead of sampling.
"""

import itertools
import math

import numpy as np

from .errors import ResourceLimitError

DEFAULT_CAP = 10**6


def charging_table(robot, horizon):
    """``table[s, t]`` is 1 when ``robot`` at offset ``s`` charges in slot ``t``."""
    s = np.arange(robot.cycle_time)[:, None]
    t = np.arange(horizon)[None, :]
    return (((s + t) % robot.cycle_time) < robot.charge_slots).astype(np.int32)


def _check_cap(robots, cap):
    size = math.prod(r.cycle_time for r in robots)
    if size > cap:
        raise ResourceLimitError(f"{size} offset tuples exceed the cap of {cap}")


def peak_occupancy(robots, offsets, horizon):
    """Largest number of robots charging together, by direct slot counting."""
    counts = [0] * horizon
    for r, s in zip(robots, offsets):
        for t in range(horizon):
            if (s + t) % r.cycle_time < r.charge_slots:
                counts[t] += 1
    return max(counts, default=0)


def brute_min_stations(robots, horizon, cap=DEFAULT_CAP):
    """Minimum over every offset tuple of the peak slot occupancy."""
    robots = list(robots)
    if not robots:
        return 0
    _check_cap(robots, cap)
    tables = [charging_table(r, horizon) for r in robots]
    *head, last = tables
    best = len(robots)
    for offs in itertools.product(*(range(r.cycle_time) for r in robots[:-1])):
        partial = np.zeros(horizon, dtype=np.int32)
        for table, s in zip(head, offs):
            partial += table[s]
        # peak for every offset of the last robot at once
        best = min(best, int((last + partial).max(axis=1).min()))
    return best


def brute_max_flytime(robots, m, horizon, cap=DEFAULT_CAP):
    """Largest total flying time over every feasible (selection, offsets) pair."""
    robots = list(robots)
    n = len(robots)
    total = 2**n * math.prod(r.cycle_time for r in robots)
    if total > cap:
        raise ResourceLimitError(f"{total} combinations exceed the cap of {cap}")
    best = 0
    for mask in range(2**n):
        chosen = [r for k, r in enumerate(robots) if mask >> k & 1]
        value = sum(
            1 for r in chosen for t in range(horizon) if t % r.cycle_time >= r.charge_slots
        )
        if value > best and brute_min_stations(chosen, horizon, cap) <= m:
            best = value
    return best


def brute_min_lcm(sets, cap=DEFAULT_CAP):
    """Smallest LCM over every choice of one candidate per set."""
    sets = list(sets)
    size = math.prod(len(s.candidates) for s in sets)
    if size > cap:
        raise ResourceLimitError(f"{size} candidate tuples exceed the cap of {cap}")
    return min(math.lcm(*choice) for choice in itertools.product(*(s.candidates for s in sets)))


def brute_replan(robots, phases, m, robot_id, arrival, horizon):
    """Minimum wait over every (offset, start slot) pair that keeps the fleet feasible.

    Returns ``(wait, offset)`` or ``None`` when no offset fits.
    """
    robot = next(r for r in robots if r.id == robot_id)
    by_id = {r.id: r for r in robots}
    others = [(by_id[p.robot_id], p.offset) for p in phases if p.robot_id != robot_id]
    fleet = [r for r, _ in others] + [robot]
    best = None
    for s in range(robot.cycle_time):
        if peak_occupancy(fleet, [o for _, o in others] + [s], horizon) > m:
            continue
        for start in range(arrival, arrival + robot.cycle_time):
            if (s + start) % robot.cycle_time == 0 and (best is None or start - arrival < best[0]):
                best = (start - arrival, s)
    return best
