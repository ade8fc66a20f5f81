"""
Too few pads: which robots should fly?
======================================

With fewer pads than the fleet needs, some robots stay grounded.
The solver keeps the subset with the most flying slots over the horizon.
"""

from fleetcharge import RobotSpec, scheduling_horizon, solve_max_flytime, solve_min_stations

fleet = [RobotSpec(f"uav{i}", c, f) for i, (c, f) in enumerate([(2, 2), (1, 3), (2, 6), (1, 1)])]
H = scheduling_horizon([r.cycle_time for r in fleet])
needed = solve_min_stations(fleet, H).m_min
print("horizon", H, "pads for everyone", needed)

for m in range(needed + 1):
    sol = solve_max_flytime(fleet, m, H)
    print(m, "pads:", sol.selected_ids, "flying slots", sol.objective)

# the objective counts flying slots, so a robot with a long flight leg is worth more
print({r.id: r.fly_slots * (H // r.cycle_time) for r in fleet})
