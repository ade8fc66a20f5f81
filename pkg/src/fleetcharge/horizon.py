"""
Scheduling horizon and its reduction through safety margins.

The joint schedule repeats after the LCM of all cycle times.  Shortening a
robot's flying time by a few slots (at most ``epsilon`` of its cycle) can
shrink that LCM dramatically.  Choosing one cycle time per robot is cast as
a path through a layered graph whose path cost is the LCM of the visited
vertex values.
"""

from dataclasses import dataclass
import heapq
import math

from .core import RobotSpec
from .errors import DomainError

# Largest horizon accepted; anything bigger cannot be scheduled slot by slot
# and would overflow fixed-width integers in exported models.
MAX_HORIZON = 2**63 - 1


@dataclass(frozen=True)
class CandidateSet:
    robot_id: object
    candidates: tuple


@dataclass(frozen=True)
class HorizonPlan:
    chosen: tuple
    new_fly_slots: tuple
    safety_slots: tuple
    horizon: int


def checked_lcm(a, b):
    value = math.lcm(a, b)
    if value > MAX_HORIZON:
        raise OverflowError(f"lcm({a}, {b}) = {value} exceeds the 64-bit horizon limit")
    return value


def scheduling_horizon(cycle_times):
    """LCM of ``cycle_times``."""
    cycle_times = list(cycle_times)
    if not cycle_times:
        raise DomainError("need at least one cycle time")
    horizon = 1
    for value in cycle_times:
        if value < 1:
            raise DomainError(f"cycle times must be positive, got {value}")
        horizon = checked_lcm(horizon, value)
    return horizon


def candidate_set(robot):
    """Admissible shortened cycle times for ``robot``.

    ``V`` ranges over ``[ceil((1 - eps) * T), T]`` with the extra
    requirement that at least one flying slot remains.
    """
    cycle = robot.cycle_time
    low = max(math.ceil((1 - robot.epsilon) * cycle), robot.charge_slots + 1)
    if low > cycle:
        raise DomainError(f"robot {robot.id!r} has no admissible cycle time")
    return CandidateSet(robot.id, tuple(range(low, cycle + 1)))


def label_setting_lcm(sets):
    """Label-setting search over the layered candidate graph.

    Vertices are ``(layer, value)``; layer 0 is the source and layer
    ``len(sets) + 1`` the target, both of value 1.  Every vertex of layer
    ``i`` links to every vertex of layer ``i + 1`` and reaching vertex
    ``v`` from a path of cost ``c`` costs ``lcm(c, v.value)``.  Each vertex
    keeps only its best label, so the result is not guaranteed optimal:
    a cheaper prefix does not dominate under LCM.

    Returns ``(cost, chosen)`` for the first path that settles the target.
    """
    sets = list(sets)
    for s in sets:
        if not s.candidates:
            raise DomainError(f"empty candidate set for robot {s.robot_id!r}")
    layers = [(1,)] + [tuple(s.candidates) for s in sets] + [(1,)]
    target = (len(layers) - 1, 1)
    source = (0, 1)

    cost = {source: 1}
    predecessor = {}
    visited = set()
    # (cost, layer, value) orders ties deterministically
    queue = [(1, 0, 1)]
    while queue:
        min_cost, layer, value = heapq.heappop(queue)
        u = (layer, value)
        if u in visited:
            continue
        if u == target:
            path = [u]
            while u in predecessor:
                u = predecessor[u]
                path.append(u)
            path.reverse()
            return min_cost, tuple(v for _, v in path[1:-1])
        visited.add(u)
        for weight in layers[layer + 1]:
            v = (layer + 1, weight)
            new_cost = checked_lcm(min_cost, weight)
            if new_cost < cost.get(v, math.inf):
                cost[v] = new_cost
                predecessor[v] = u
                heapq.heappush(queue, (new_cost, layer + 1, weight))
    raise AssertionError("target unreachable in a layered graph")  # pragma: no cover


def make_plan(robots, chosen):
    chosen = tuple(chosen)
    new_fly = tuple(v - r.charge_slots for r, v in zip(robots, chosen))
    safety = tuple(r.fly_slots - f for r, f in zip(robots, new_fly))
    return HorizonPlan(chosen, new_fly, safety, scheduling_horizon(chosen) if chosen else 1)


def dijkstra_lcm(sets, robots=None):
    """Pick one cycle time per robot so that their LCM is small.

    Runs :func:`label_setting_lcm`.  Because that search is not exact it can
    land above the LCM of the unmodified cycle times (the largest member of
    every set); in that case the unmodified choice is returned instead.

    ``robots`` (aligned with ``sets``) fills in the flying-time fields of
    the plan; without it the largest candidate stands in for ``T_i`` and
    ``new_fly_slots`` is left empty.
    """
    sets = list(sets)
    if not sets:
        return HorizonPlan((), (), (), 1)
    cost, chosen = label_setting_lcm(sets)
    unreduced = tuple(s.candidates[-1] for s in sets)
    if cost > scheduling_horizon(unreduced):
        chosen = unreduced
    if robots is None:
        horizon = scheduling_horizon(chosen)
        return HorizonPlan(chosen, (), tuple(u - c for u, c in zip(unreduced, chosen)), horizon)
    return make_plan(robots, chosen)


def reduce_horizon(robots):
    """Candidate sets plus :func:`dijkstra_lcm` for a whole fleet."""
    robots = list(robots)
    return dijkstra_lcm([candidate_set(r) for r in robots], robots)


def apply_plan(robots, plan):
    """Robots with flying time shortened to the plan's cycle times."""
    return [
        RobotSpec(r.id, r.charge_slots, f, r.epsilon)
        for r, f in zip(robots, plan.new_fly_slots)
    ]
