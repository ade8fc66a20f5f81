"""
Exact solvers for station minimisation and flying-time maximisation.

Both problems are 0-1 programs over one-hot offset blocks.  Instead of
materialising the constraint matrix, offsets are searched directly: each
robot's charging slots over the horizon are a Python integer used as a
bitset, and the running occupancy is kept as ``m`` stacked bitsets where
level ``j`` marks the slots already holding more than ``j`` robots.  A
robot fits iff its bitset does not touch the top level.

Symmetry: shifting every offset by the same amount preserves feasibility.
Once robots ``1..j`` are placed, shifts by multiples of
``L = lcm(T_1..T_j)`` leave them unchanged, so robot ``j+1`` only needs
offsets below ``gcd(L, T_{j+1})``.  For the first robot that pins the
offset to 0.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

from .core import PhaseAssignment, density_bound
from .errors import DomainError, ResourceLimitError

DEFAULT_NODE_BUDGET = 5_000_000


@dataclass(frozen=True)
class MinStationsSolution:
    m_min: int
    phases: tuple
    horizon: int


@dataclass(frozen=True)
class MaxFlytimeSolution:
    selection: tuple
    phases: tuple
    objective: int
    stations: int
    horizon: int

    @property
    def selected_ids(self):
        return [p.robot_id for p in self.phases]


def _check_horizon(robots, horizon):
    if horizon < 1:
        raise DomainError(f"horizon must be >= 1, got {horizon}")
    for r in robots:
        if horizon % r.cycle_time:
            raise DomainError(
                f"horizon {horizon} is not a multiple of cycle time {r.cycle_time} of robot {r.id!r}"
            )


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise _OutOfBudget


class _OutOfBudget(Exception):
    pass


class PhasePacker:
    """Offset search for a fixed fleet and horizon."""

    def __init__(self, robots, horizon):
        _check_horizon(robots, horizon)
        self.robots = list(robots)
        self.horizon = horizon
        self._full = (1 << horizon) - 1
        self._base = []
        for r in self.robots:
            cycle_pattern = (1 << r.charge_slots) - 1
            # repeat the per-cycle pattern horizon // T times
            repeat = self._full // ((1 << r.cycle_time) - 1)
            self._base.append(cycle_pattern * repeat)
        self._masks = {}

    def mask(self, i, offset):
        """Bitset of slots in which robot ``i`` charges when started at ``offset``."""
        key = (i, offset)
        m = self._masks.get(key)
        if m is None:
            base = self._base[i]
            # bit t of the result is bit (t + offset) mod horizon of base
            m = ((base >> offset) | (base << (self.horizon - offset))) & self._full
            self._masks[key] = m
        return m

    def order(self, indices):
        """Densest first; ties keep longer charges first, then input order."""
        return sorted(indices, key=lambda i: (-self.robots[i].density, -self.robots[i].charge_slots, i))

    def find(self, indices, m, budget=None):
        """Offsets for ``indices`` keeping occupancy <= ``m``, or ``None``.

        Returns a dict ``index -> offset``.
        """
        indices = self.order(indices)
        if not indices:
            return {}
        if m <= 0:
            return None
        if sum((self.robots[i].density for i in indices), Fraction(0)) > m:
            return None
        budget = budget or _Budget(None)

        n = len(indices)
        limits = []
        span = 1
        for i in indices:
            cycle = self.robots[i].cycle_time
            limits.append(math.gcd(span, cycle))
            span = math.lcm(span, cycle)

        levels = [0] * m
        chosen = [0] * n

        def place(k):
            if k == n:
                return True
            i = indices[k]
            for offset in range(limits[k]):
                budget.tick()
                bits = self.mask(i, offset)
                if bits & levels[-1]:
                    continue
                saved = levels[:]
                for j in range(m - 1, 0, -1):
                    levels[j] |= levels[j - 1] & bits
                levels[0] |= bits
                chosen[k] = offset
                if place(k + 1):
                    return True
                levels[:] = saved
            return False

        if place(0):
            return dict(zip(indices, chosen))
        return None


def solve_min_stations(robots, horizon, node_budget=DEFAULT_NODE_BUDGET):
    """Smallest station count admitting a conflict-free offset assignment.

    Tries ``m`` upward from the density bound; the first feasible ``m`` is
    optimal.  Raises :class:`ResourceLimitError` when more than
    ``node_budget`` offset trials are needed; the error carries the
    interval still containing the optimum.
    """
    robots = list(robots)
    _check_horizon(robots, horizon)
    n = len(robots)
    if n == 0:
        return MinStationsSolution(0, (), horizon)

    packer = PhasePacker(robots, horizon)
    budget = _Budget(node_budget)
    m = density_bound(robots)
    while m <= n:
        try:
            found = packer.find(range(n), m, budget)
        except _OutOfBudget:
            raise ResourceLimitError(
                f"node budget {node_budget} exhausted while testing m = {m}",
                lower=m, upper=n,
            ) from None
        if found is not None:
            phases = tuple(PhaseAssignment(robots[i].id, found[i]) for i in range(n))
            return MinStationsSolution(m, phases, horizon)
        m += 1
    raise AssertionError("m = n is always feasible")  # pragma: no cover


def solve_max_flytime(robots, m, horizon, node_budget=DEFAULT_NODE_BUDGET):
    """Select robots and offsets maximising total flying slots with ``m`` stations.

    Branch and bound over the selection, most valuable robot first.  Each
    robot's contribution ``f_i * horizon / T_i`` does not depend on its
    offset, so a selection is scored up front and only its feasibility
    needs the offset search.
    """
    robots = list(robots)
    _check_horizon(robots, horizon)
    if m < 0:
        raise DomainError(f"station count must be >= 0, got {m}")
    n = len(robots)
    packer = PhasePacker(robots, horizon)
    budget = _Budget(node_budget)

    value = [r.fly_slots * (horizon // r.cycle_time) for r in robots]
    order = sorted(range(n), key=lambda i: (-value[i], i))
    suffix = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix[k] = suffix[k + 1] + value[order[k]]

    best = {"value": 0, "offsets": {}}
    infeasible = []

    def feasible(selection):
        key = frozenset(selection)
        if any(bad <= key for bad in infeasible):
            return None
        found = packer.find(selection, m, budget)
        if found is None:
            infeasible.append(key)
        return found

    def branch(k, selection, total, offsets):
        if total + suffix[k] <= best["value"]:
            return
        if total > best["value"]:
            best["value"] = total
            best["offsets"] = offsets
        if k == n:
            return
        i = order[k]
        found = feasible(selection + [i])
        if found is not None:
            branch(k + 1, selection + [i], total + value[i], found)
        branch(k + 1, selection, total, offsets)

    try:
        branch(0, [], 0, {})
    except _OutOfBudget:
        raise ResourceLimitError(
            f"node budget {node_budget} exhausted", lower=best["value"], upper=suffix[0]
        ) from None

    offsets = best["offsets"]
    selection = tuple(i in offsets for i in range(n))
    phases = tuple(PhaseAssignment(robots[i].id, offsets[i]) for i in range(n) if i in offsets)
    return MaxFlytimeSolution(selection, phases, best["value"], m, horizon)


def _wrap(terms, indent=" ", width=250):
    lines, line = [], indent
    for term in terms:
        piece = term if line == indent else " " + term
        if len(line) + len(piece) > width and line != indent:
            lines.append(line)
            line = indent + "   " + term
        else:
            line += piece
    lines.append(line)
    return lines


def _sum(names, coeffs=None):
    terms = []
    for k, name in enumerate(names):
        c = 1 if coeffs is None else coeffs[k]
        prefix = "" if k == 0 else "+ "
        terms.append(f"{prefix}{name}" if c == 1 else f"{prefix}{c} {name}")
    return terms


def export_model(robots, horizon, mode="min-stations", stations=None):
    """Write the 0-1 program in CPLEX LP text format.

    ``x_i_s`` is 1 when robot ``i`` (input order) starts at offset ``s``.
    In ``"min-stations"`` mode the integer variable ``m`` is minimised; in
    ``"max-flytime"`` mode ``stations`` is fixed and binary ``u_i`` selects
    robots, weighted by their flying slots over the horizon.
    """
    robots = list(robots)
    _check_horizon(robots, horizon)
    if mode not in ("min-stations", "max-flytime"):
        raise DomainError(f"unknown mode {mode!r}")
    if mode == "max-flytime" and (stations is None or stations < 0):
        raise DomainError("max-flytime mode needs a station count >= 0")

    def x(i, s):
        return f"x_{i}_{s}"

    out = [f"\\ mode: {mode}", f"\\ horizon: {horizon}"]
    for i, r in enumerate(robots):
        out.append(f"\\ robot {i}: id={r.id} charge={r.charge_slots} fly={r.fly_slots}")

    if not robots:
        out += ["Minimize" if mode == "min-stations" else "Maximize", " obj: 0", "End"]
        return "\n".join(out) + "\n"

    if mode == "min-stations":
        out += ["Minimize", " obj: m"]
    else:
        weights = [r.fly_slots * (horizon // r.cycle_time) for r in robots]
        out += ["Maximize"] + _wrap(["obj:"] + _sum([f"u_{i}" for i in range(len(robots))], weights))

    out.append("Subject To")
    for i, r in enumerate(robots):
        terms = _sum([x(i, s) for s in range(r.cycle_time)])
        tail = ["=", "1"] if mode == "min-stations" else [f"- u_{i}", "=", "0"]
        out += _wrap([f"onehot_{i}:"] + terms + tail)
    for t in range(horizon):
        names = []
        for i, r in enumerate(robots):
            offsets = sorted((k - t) % r.cycle_time for k in range(r.charge_slots))
            names += [x(i, s) for s in offsets]
        tail = ["- m", "<=", "0"] if mode == "min-stations" else ["<=", str(stations)]
        out += _wrap([f"cap_{t}:"] + _sum(names) + tail)

    if mode == "min-stations":
        out += ["Bounds", f" 0 <= m <= {len(robots)}", "Generals", " m"]
    binaries = [x(i, s) for i, r in enumerate(robots) for s in range(r.cycle_time)]
    if mode == "max-flytime":
        binaries += [f"u_{i}" for i in range(len(robots))]
    out.append("Binaries")
    out += _wrap(binaries)
    out.append("End")
    return "\n".join(out) + "\n"
