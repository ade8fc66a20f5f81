"""
A robot comes back late
=======================

The other robots keep their slots.  The late robot takes the earliest
phase that fits in the pads they leave free.
"""

from fleetcharge import RobotSpec, Schedule, replan_delayed, residual_capacity, solve_min_stations, validate_schedule
from fleetcharge.replan import apply_replan

fleet = [RobotSpec("a", 2, 4), RobotSpec("b", 1, 2), RobotSpec("c", 2, 4)]
H = 6
sol = solve_min_stations(fleet, H)
phases = list(sol.phases)
print("pads", sol.m_min, "offsets", [(p.robot_id, p.offset) for p in phases])

print("free pads without c:", residual_capacity(fleet, phases, "c", sol.m_min, H).tolist())

for arrival in (7, 8, 9):
    r = replan_delayed(fleet, phases, sol.m_min, "c", arrival, horizon=H)
    moved = apply_replan(phases, r)
    ok = validate_schedule(Schedule(fleet, moved, sol.m_min, H)).valid
    print(f"back at {arrival}: charge at {r.charge_start}, waited {r.wait_slots}, valid={ok}")
