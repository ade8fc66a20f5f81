"""
Seeded benchmark instances comparing the exact solver with the baseline.

``pow2`` instances draw ``c = 2**a`` and ``T = 2**b`` with
``0 <= a < b <= 5``.  ``perturbed`` instances start from the ``pow2``
instance of the same seed and nudge every ``c`` and ``T`` by -1, 0 or +1,
then clamp so that ``c >= 1`` and ``T >= c + 1``.
"""

import random
import time

from .core import RobotSpec
from .horizon import scheduling_horizon
from .optimizer import solve_min_stations
from .tpws import tpws_stations

MODES = ("pow2", "perturbed")
CSV_HEADER = "seed,n,horizon,ilp_m,tpws_m,ilp_ms,tpws_ms"


def _pow2_pairs(n, rng):
    pairs = []
    for _ in range(n):
        b = rng.randint(1, 5)
        a = rng.randint(0, b - 1)
        pairs.append((2**a, 2**b))
    return pairs


def generate_instance(mode, n, seed):
    """Robots for ``(mode, n, seed)``; a pure function of its arguments."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {MODES}")
    if n < 1:
        raise ValueError("need at least one robot")
    rng = random.Random(f"{n}:{seed}")
    pairs = _pow2_pairs(n, rng)
    if mode == "perturbed":
        noisy = []
        for c, T in pairs:
            c = max(1, c + rng.choice((-1, 0, 1)))
            T = max(c + 1, T + rng.choice((-1, 0, 1)))
            noisy.append((c, T))
        pairs = noisy
    return [RobotSpec(f"r{i}", c, T - c) for i, (c, T) in enumerate(pairs)]


def run_instance(mode, n, seed, node_budget=None):
    """Solve one instance both ways; returns a dict with the CSV fields."""
    robots = generate_instance(mode, n, seed)
    horizon = scheduling_horizon([r.cycle_time for r in robots])
    kwargs = {} if node_budget is None else {"node_budget": node_budget}

    start = time.perf_counter()
    ilp = solve_min_stations(robots, horizon, **kwargs)
    ilp_ms = (time.perf_counter() - start) * 1000

    start = time.perf_counter()
    tpws_m = tpws_stations(robots)
    tpws_ms = (time.perf_counter() - start) * 1000

    return {
        "seed": seed,
        "n": n,
        "horizon": horizon,
        "ilp_m": ilp.m_min,
        "tpws_m": tpws_m,
        "ilp_ms": ilp_ms,
        "tpws_ms": tpws_ms,
    }


def format_row(row):
    return (f"{row['seed']},{row['n']},{row['horizon']},{row['ilp_m']},{row['tpws_m']},"
            f"{row['ilp_ms']:.3f},{row['tpws_ms']:.3f}")
