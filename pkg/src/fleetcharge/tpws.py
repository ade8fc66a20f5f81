"""
Power-of-two window-scheduling baseline.

Charging times are rounded up and cycle times rounded down to powers of
two, then jobs are packed first-fit onto machines (stations) at offsets
aligned to their length.  Used only to compare station counts with the
exact solver.
"""

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class RoundedJob:
    robot_id: object
    length: int
    window: int
    full_machine: bool = False


@dataclass(frozen=True)
class MachineAssignment:
    machine_index: int
    robot_id: object
    offset: int


def ceil_pow2(x):
    return 1 << (x - 1).bit_length()


def floor_pow2(x):
    return 1 << (x.bit_length() - 1)


def round_job(robot):
    length = ceil_pow2(robot.charge_slots)
    window = floor_pow2(robot.cycle_time)
    full = length >= window
    return RoundedJob(robot.id, min(length, window), window, full)


def round_instance(robots):
    return [round_job(r) for r in robots]


def conflict(a, offset_a, b, offset_b):
    """Do two aligned periodic jobs ever occupy the same slot?

    With power-of-two windows the job with the smaller window ``w``
    repeats every ``w`` slots, so comparing both jobs modulo ``w`` is
    exact, and alignment keeps the intervals from wrapping.
    """
    for job, off in ((a, offset_a), (b, offset_b)):
        if off % job.length or not 0 <= off < job.window:
            raise DomainError(
                f"offset {off} of job {job.robot_id!r} is not an aligned slot in "
                f"[0, {job.window}) for length {job.length}"
            )
    w = min(a.window, b.window)
    start_a = offset_a % w
    start_b = offset_b % w
    return start_a < start_b + b.length and start_b < start_a + a.length


def schedule_tpws(jobs):
    """First-fit packing; returns ``(machine_count, assignments)``.

    Jobs go by increasing window, then decreasing length.  Assignments are
    listed in placement order.
    """
    order = sorted(range(len(jobs)), key=lambda k: (jobs[k].window, -jobs[k].length, k))
    machines = []
    assignments = []
    for k in order:
        job = jobs[k]
        placed = False
        for index, placed_jobs in enumerate(machines):
            for offset in range(0, job.window, job.length):
                if not any(conflict(job, offset, other, o) for other, o in placed_jobs):
                    placed_jobs.append((job, offset))
                    assignments.append(MachineAssignment(index, job.robot_id, offset))
                    placed = True
                    break
            if placed:
                break
        if not placed:
            machines.append([(job, 0)])
            assignments.append(MachineAssignment(len(machines) - 1, job.robot_id, 0))
    return len(machines), assignments


def tpws_stations(robots):
    """Station count of the baseline for ``robots``."""
    return schedule_tpws(round_instance(robots))[0]
