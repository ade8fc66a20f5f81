"""
Re-phasing a robot that reached the depot late.

Every other robot keeps its offset.  The late robot may take any offset
whose charging slots fit into the stations the rest of the fleet leaves
free; among those, the one that lets it start charging soonest after its
arrival wins.
"""

from dataclasses import dataclass

import numpy as np

from .core import OccupancyProfile, PhaseAssignment, charging_mask, occupancy_profile
from .errors import DomainError
from .horizon import scheduling_horizon


@dataclass(frozen=True)
class ReplanResult:
    robot_id: object
    new_offset: int
    charge_start: int
    wait_slots: int

    def as_dict(self):
        return {
            "robot": self.robot_id,
            "new_offset": self.new_offset,
            "charge_start": self.charge_start,
            "wait_slots": self.wait_slots,
        }


def _find(robots, robot_id):
    for r in robots:
        if r.id == robot_id:
            return r
    raise DomainError(f"unknown robot {robot_id!r}")


def residual_capacity(robots, phases, exclude, m, horizon):
    """Free stations per slot once every robot except ``exclude`` is placed."""
    others = [p for p in phases if p.robot_id != exclude]
    used = occupancy_profile(robots, others, horizon).counts
    residual = m - used
    if (residual < 0).any():
        t = int(np.flatnonzero(residual < 0)[0])
        raise DomainError(f"schedule without {exclude!r} already exceeds {m} stations at slot {t}")
    return OccupancyProfile(residual)


def feasible_offsets(robot, residual):
    """Offsets whose charging slots all have a free station."""
    free = np.asarray(residual.counts) >= 1
    horizon = len(free)
    return [s for s in range(robot.cycle_time)
            if not (charging_mask(robot, s, horizon) & ~free).any()]


def next_charge_start(offset, cycle_time, arrival):
    """First slot ``t >= arrival`` at which a robot with ``offset`` begins charging."""
    return arrival + (-(offset + arrival)) % cycle_time


def replan_delayed(robots, phases, m, robot_id, arrival, horizon=None):
    """Give the late robot ``robot_id`` the offset that minimises its wait."""
    if arrival < 0:
        raise DomainError(f"arrival slot must be >= 0, got {arrival}")
    robot = _find(robots, robot_id)
    if horizon is None:
        horizon = scheduling_horizon(
            [r.cycle_time for r in robots if any(p.robot_id == r.id for p in phases)]
            + [robot.cycle_time]
        )
    residual = residual_capacity(robots, phases, robot_id, m, horizon)
    best = None
    for s in feasible_offsets(robot, residual):
        start = next_charge_start(s, robot.cycle_time, arrival)
        if best is None or start < best[1]:
            best = (s, start)
    if best is None:
        raise DomainError(f"no offset of robot {robot_id!r} fits into {m} stations")
    s, start = best
    return ReplanResult(robot_id, s, start, start - arrival)


def apply_replan(phases, result):
    """Phase list with the late robot moved to its new offset."""
    out = [p for p in phases if p.robot_id != result.robot_id]
    out.append(PhaseAssignment(result.robot_id, result.new_offset))
    return out
