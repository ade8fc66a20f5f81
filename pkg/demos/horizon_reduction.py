"""
Shrinking the horizon with a safety margin
==========================================

Cycle times like 7, 11 and 13 make the horizon explode.  If each robot may
shorten its flight leg by a fraction ``epsilon``, picking cycle times with a
small common multiple keeps the search tractable.
"""

from fleetcharge import RobotSpec, candidate_set, reduce_horizon, scheduling_horizon, solve_min_stations
from fleetcharge.horizon import apply_plan
from fleetcharge.oracle import brute_min_lcm

fleet = [
    RobotSpec("a", 2, 5, 0.15),
    RobotSpec("b", 3, 8, 0.15),
    RobotSpec("c", 4, 9, 0.15),
]
print("unreduced:", scheduling_horizon([r.cycle_time for r in fleet]))

sets = [candidate_set(r) for r in fleet]
for s in sets:
    print(s.robot_id, s.candidates)

plan = reduce_horizon(fleet)
print("chosen cycles", plan.chosen, "horizon", plan.horizon, "exhaustive best", brute_min_lcm(sets))
print("flight legs", plan.new_fly_slots, "slack", plan.safety_slots)

shorter = apply_plan(fleet, plan)
print("pads needed:", solve_min_stations(shorter, plan.horizon).m_min)
