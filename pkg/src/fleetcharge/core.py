"""
Slot-level model of a recharging fleet.

Each robot alternates ``charge_slots`` slots on a station with
``fly_slots`` slots in the air, so its behaviour repeats every
``cycle_time = charge_slots + fly_slots`` slots.  The state of robot ``i``
is a one-hot vector of length ``cycle_time``; the position of the single 1
is the *offset* (phase) and advances by one position per slot, wrapping
around.  The robot charges while the 1 sits in the first ``charge_slots``
positions.

All indicator functions below work on the integer offset directly::

    charging(s, t) == ((s + t) % cycle_time) < charge_slots

The explicit permutation-matrix form is kept (``transition_matrix``,
``charging_vector``) so the two can be checked against each other.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import math

import numpy as np

from .errors import DomainError


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # str() first so that 0.1 becomes 1/10, not the binary expansion
        return Fraction(str(value))
    return Fraction(value)


@dataclass(frozen=True)
class RobotSpec:
    """Charging and flying durations (in slots) of one robot.

    ``epsilon`` is the largest fraction of the cycle that may be given up
    as safety margin when the scheduling horizon is reduced.
    """

    id: object
    charge_slots: int
    fly_slots: int
    epsilon: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("charge_slots", "fly_slots"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise DomainError(f"robot {self.id!r}: {name} must be an integer, got {value!r}")
            if value < 1:
                raise DomainError(f"robot {self.id!r}: {name} must be >= 1, got {value}")
            object.__setattr__(self, name, int(value))
        eps = _as_fraction(self.epsilon)
        if not 0 <= eps < 1:
            raise DomainError(f"robot {self.id!r}: epsilon must lie in [0, 1), got {self.epsilon}")
        object.__setattr__(self, "epsilon", eps)

    @property
    def cycle_time(self):
        return self.charge_slots + self.fly_slots

    @property
    def density(self):
        """Long-run fraction of one station this robot consumes."""
        return Fraction(self.charge_slots, self.cycle_time)


@dataclass(frozen=True)
class PhaseAssignment:
    robot_id: object
    offset: int


@dataclass(frozen=True)
class OccupancyProfile:
    """Number of robots charging in each slot of ``[0, len(counts))``."""

    counts: np.ndarray

    def __len__(self):
        return len(self.counts)

    def __getitem__(self, t):
        return self.counts[t]

    @property
    def peak(self):
        return int(self.counts.max()) if len(self.counts) else 0

    def tolist(self):
        return [int(c) for c in self.counts]


@dataclass(frozen=True)
class Schedule:
    robots: list
    phases: list
    stations: int
    horizon: int

    def deployed(self):
        """Pairs ``(robot, offset)`` for every robot that has a phase."""
        return list(_pair_phases(self.robots, self.phases))


@dataclass
class ValidationReport:
    valid: bool
    first_violation: int = None
    peak: int = 0
    problems: list = field(default_factory=list)

    def __bool__(self):
        return self.valid

    def as_dict(self):
        return {
            "valid": self.valid,
            "first_violation": self.first_violation,
            "peak": self.peak,
            "problems": list(self.problems),
        }


def _check_offset(robot, offset):
    if not 0 <= offset < robot.cycle_time:
        raise DomainError(
            f"offset {offset} out of range [0, {robot.cycle_time}) for robot {robot.id!r}"
        )


def charging_indicator(robot, offset, t):
    """True when ``robot`` started at ``offset`` occupies a station in slot ``t``."""
    _check_offset(robot, offset)
    if t < 0:
        raise DomainError(f"slot index must be >= 0, got {t}")
    return (offset + t) % robot.cycle_time < robot.charge_slots


def flying_indicator(robot, offset, t):
    _check_offset(robot, offset)
    if t < 0:
        raise DomainError(f"slot index must be >= 0, got {t}")
    return (offset + t) % robot.cycle_time >= robot.charge_slots


def one_hot(offset, length):
    """Return the state vector with a single 1 at ``offset``."""
    if not 0 <= offset < length:
        raise DomainError(f"offset {offset} out of range [0, {length})")
    state = np.zeros(length, dtype=np.int64)
    state[offset] = 1
    return state


def offset_of(state):
    """Inverse of :func:`one_hot`."""
    state = np.asarray(state)
    if state.ndim != 1 or not np.isin(state, (0, 1)).all() or state.sum() != 1:
        raise DomainError("state vector must be one-hot")
    return int(np.flatnonzero(state)[0])


def transition_matrix(cycle_time):
    """Cyclic down-shift permutation matrix: position ``s`` moves to ``s + 1``."""
    return np.roll(np.eye(cycle_time, dtype=np.int64), 1, axis=0)


def charging_vector(robot):
    """Indicator row with ones on the first ``charge_slots`` positions."""
    return np.concatenate([np.ones(robot.charge_slots, dtype=np.int64),
                           np.zeros(robot.fly_slots, dtype=np.int64)])


def flying_vector(robot):
    return 1 - charging_vector(robot)


def advance_state(state):
    """Advance a one-hot state vector by one slot."""
    offset_of(state)
    return np.roll(np.asarray(state), 1)


def _pair_phases(robots, phases):
    by_id = {}
    for robot in robots:
        by_id[robot.id] = robot
    for phase in phases:
        try:
            robot = by_id[phase.robot_id]
        except KeyError:
            raise DomainError(f"phase references unknown robot {phase.robot_id!r}") from None
        yield robot, phase.offset


def charging_mask(robot, offset, horizon):
    """Boolean array over ``[0, horizon)`` marking the slots spent charging."""
    t = np.arange(horizon)
    return (offset + t) % robot.cycle_time < robot.charge_slots


def occupancy_profile(robots, phases, horizon):
    """Count the robots charging in each slot of ``[0, horizon)``."""
    if horizon < 1:
        raise DomainError(f"horizon must be >= 1, got {horizon}")
    counts = np.zeros(horizon, dtype=np.int64)
    for robot, offset in _pair_phases(robots, phases):
        _check_offset(robot, offset)
        counts += charging_mask(robot, offset, horizon)
    return OccupancyProfile(counts)


def validate_schedule(schedule):
    """Check a schedule slot by slot.

    Violations are reported, never raised.  A schedule is valid when its
    horizon is a common multiple of every deployed cycle time, every offset
    is in range and no slot needs more than ``schedule.stations`` stations.
    """
    problems = []
    try:
        pairs = schedule.deployed()
    except DomainError as exc:
        return ValidationReport(False, problems=[str(exc)])

    if schedule.horizon < 1:
        return ValidationReport(False, problems=[f"horizon must be >= 1, got {schedule.horizon}"])
    for robot, offset in pairs:
        if schedule.horizon % robot.cycle_time:
            problems.append(
                f"horizon {schedule.horizon} is not a multiple of cycle time "
                f"{robot.cycle_time} of robot {robot.id!r}"
            )
        if not 0 <= offset < robot.cycle_time:
            problems.append(f"offset {offset} out of range for robot {robot.id!r}")
    if problems:
        return ValidationReport(False, problems=problems)

    counts = occupancy_profile(schedule.robots, schedule.phases, schedule.horizon).counts
    peak = int(counts.max())
    over = np.flatnonzero(counts > schedule.stations)
    if len(over):
        first = int(over[0])
        problems.append(
            f"slot {first} needs {int(counts[first])} stations, only {schedule.stations} available"
        )
        return ValidationReport(False, first_violation=first, peak=peak, problems=problems)
    return ValidationReport(True, peak=peak)


def total_flying(robots, selection, horizon):
    """Total flying slots of the selected robots over ``[0, horizon)``.

    Offsets do not matter: every deployed robot flies exactly
    ``fly_slots`` slots per cycle.
    """
    total = 0
    for robot, chosen in zip(robots, selection):
        if not chosen:
            continue
        if horizon % robot.cycle_time:
            raise DomainError(
                f"horizon {horizon} is not a multiple of cycle time {robot.cycle_time} "
                f"of robot {robot.id!r}"
            )
        total += robot.fly_slots * (horizon // robot.cycle_time)
    return total


def density_bound(robots):
    """``ceil(sum c_i / T_i)``, the trivial lower bound on station count."""
    return math.ceil(sum((r.density for r in robots), Fraction(0)))
