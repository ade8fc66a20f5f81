"""
How many charging pads does a small fleet need?
===============================================

Each robot charges for ``c`` slots, then flies for ``f`` slots, forever.
We pick a start offset per robot so that as few pads as possible are
busy at once.
"""

import numpy as np

from fleetcharge import RobotSpec, Schedule, scheduling_horizon, solve_min_stations, validate_schedule
from fleetcharge.core import charging_vector, one_hot, transition_matrix
from fleetcharge.gantt import render_ascii

fleet = [
    RobotSpec("scout", 1, 3),
    RobotSpec("mapper", 2, 6),
    RobotSpec("lifter", 3, 5),
]

# every schedule repeats after the lcm of the cycle times
H = scheduling_horizon([r.cycle_time for r in fleet])
print("horizon:", H)

# the state of a robot is a one-hot vector over its cycle; one slot later
# it is shifted down by one
A = transition_matrix(4)
print(A.astype(int))
state = one_hot(0, 4)
p = charging_vector(fleet[0])
print([int(p @ np.linalg.matrix_power(A, t) @ state) for t in range(8)])

# the density bound is a lower bound, the solver finds the true minimum
density = sum(r.charge_slots / r.cycle_time for r in fleet)
solution = solve_min_stations(fleet, H)
print(f"density {density:.2f} -> at least {int(np.ceil(density))}, optimum {solution.m_min}")

schedule = Schedule(fleet, list(solution.phases), solution.m_min, H)
print(validate_schedule(schedule).as_dict())
print(render_ascii(schedule))
