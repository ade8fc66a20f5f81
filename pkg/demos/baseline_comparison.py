"""
Exact packing against rounded first-fit
=======================================

The baseline rounds charge times up and cycle times down to powers of two,
then packs the jobs onto machines first-fit.  On power-of-two fleets the
two counts agree.  With general cycle times the rounding changes the
problem, so the baseline count can land on either side of the exact one.
"""

from fleetcharge import RobotSpec, round_instance, schedule_tpws, solve_min_stations
from fleetcharge.bench import format_row, run_instance

for mode in ("pow2", "perturbed"):
    print(mode)
    print("seed,n,horizon,ilp_m,tpws_m,ilp_ms,tpws_ms")
    for seed in range(6):
        print(format_row(run_instance(mode, 4, seed)))

# two robots with cycles 3 and 2 share every offset pair once per 6 slots,
# but after rounding both windows are 2 and they alternate on one machine
pair = [RobotSpec("x", 1, 2), RobotSpec("y", 1, 1)]
print(round_instance(pair))
print("baseline", schedule_tpws(round_instance(pair))[0], "exact", solve_min_stations(pair, 6).m_min)
