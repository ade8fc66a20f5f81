"""
Command-line front end.

Exit codes: 0 success, 1 schedule failed validation, 2 unreadable or
malformed input, 3 solver ran out of its node budget.
"""

import argparse
import sys

from . import __version__
from .bench import CSV_HEADER, MODES, format_row, run_instance
from .core import Schedule, validate_schedule
from .errors import DomainError, ResourceLimitError
from .gantt import render_ascii, render_svg
from .horizon import apply_plan, reduce_horizon, scheduling_horizon
from .io import SchemaError, dumps, load_fleet, load_schedule, schedule_to_dict
from .optimizer import DEFAULT_NODE_BUDGET, export_model, solve_max_flytime, solve_min_stations
from .replan import replan_delayed

EXIT_INVALID = 1
EXIT_SCHEMA = 2
EXIT_LIMIT = 3


def _emit(text, out=None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _prepare(args):
    robots, slot_minutes, digest = load_fleet(args.fleet)
    scheduled = robots
    if getattr(args, "reduce_horizon", False) and robots:
        scheduled = apply_plan(robots, reduce_horizon(robots))
    horizon = scheduling_horizon([r.cycle_time for r in scheduled]) if scheduled else 1
    return robots, scheduled, horizon, slot_minutes, digest


def _provenance(command, digest):
    return {"command": command, "fleet_hash": digest, "solver_version": __version__}


def cmd_min_stations(args):
    robots, scheduled, horizon, slot_minutes, digest = _prepare(args)
    sol = solve_min_stations(scheduled, horizon, node_budget=args.node_budget)
    report = validate_schedule(Schedule(scheduled, list(sol.phases), sol.m_min, horizon))
    doc = schedule_to_dict(
        scheduled, sol.phases, sol.m_min, horizon,
        original={r.id: r for r in robots}, valid=report.valid, slot_minutes=slot_minutes,
        provenance=_provenance("min-stations", digest),
    )
    _emit(dumps(doc), args.out)
    return 0


def cmd_max_flytime(args):
    robots, scheduled, horizon, slot_minutes, digest = _prepare(args)
    sol = solve_max_flytime(scheduled, args.stations, horizon, node_budget=args.node_budget)
    report = validate_schedule(Schedule(scheduled, list(sol.phases), args.stations, horizon))
    doc = schedule_to_dict(
        scheduled, sol.phases, args.stations, horizon,
        original={r.id: r for r in robots}, valid=report.valid, slot_minutes=slot_minutes,
        provenance=_provenance("max-flytime", digest),
        objective=sol.objective, selected=sol.selected_ids,
    )
    _emit(dumps(doc), args.out)
    return 0


def cmd_reduce_horizon(args):
    robots, _, _, _, _ = _prepare(args)
    if not robots:
        _emit(dumps({"horizon": 1, "unreduced_horizon": 1, "robots": []}), args.out)
        return 0
    plan = reduce_horizon(robots)
    doc = {
        "horizon": plan.horizon,
        "unreduced_horizon": scheduling_horizon([r.cycle_time for r in robots]),
        "robots": [
            {"id": r.id, "cycle": r.cycle_time, "chosen": v, "new_fly_slots": f, "safety_slots": s}
            for r, v, f, s in zip(robots, plan.chosen, plan.new_fly_slots, plan.safety_slots)
        ],
    }
    _emit(dumps(doc), args.out)
    return 0


def _lookup(schedule, robot_arg):
    for r in schedule.robots:
        if str(r.id) == robot_arg:
            return r.id
    raise SchemaError(f"robot {robot_arg!r} is not in the schedule")


def cmd_replan(args):
    schedule, _ = load_schedule(args.schedule)
    robot_id = _lookup(schedule, args.robot)
    result = replan_delayed(schedule.robots, schedule.phases, schedule.stations, robot_id,
                            args.arrival, horizon=schedule.horizon)
    _emit(dumps(result.as_dict()))
    return 0


def cmd_validate(args):
    schedule, _ = load_schedule(args.schedule)
    report = validate_schedule(schedule)
    _emit(dumps(report.as_dict()))
    return 0 if report.valid else EXIT_INVALID


def cmd_gantt(args):
    schedule, _ = load_schedule(args.schedule)
    render = render_svg if args.format == "svg" else render_ascii
    _emit(render(schedule), args.out)
    return 0


def cmd_bench(args):
    lines = [] if args.no_header else [CSV_HEADER]
    for seed in range(args.seed, args.seed + args.instances):
        lines.append(format_row(run_instance(args.mode, args.robots, seed, args.node_budget)))
    _emit("\n".join(lines) + "\n")
    return 0


def cmd_export_model(args):
    robots, scheduled, horizon, _, _ = _prepare(args)
    if args.stations is None:
        text = export_model(scheduled, horizon)
    else:
        text = export_model(scheduled, horizon, mode="max-flytime", stations=args.stations)
    _emit(text, args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="fleetcharge", description=__doc__.strip().splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def fleet_command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("fleet", help="fleet JSON file, or - for stdin")
        p.add_argument("--out", help="write the result here instead of stdout")
        p.set_defaults(func=func)
        return p

    def budget(p):
        p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET,
                       help="maximum number of offset trials (default %(default)s)")

    p = fleet_command("min-stations", cmd_min_stations, "fewest stations serving the whole fleet")
    p.add_argument("--reduce-horizon", action="store_true",
                   help="shorten flying times within each robot's epsilon first")
    budget(p)

    p = fleet_command("max-flytime", cmd_max_flytime, "most flying time with a fixed station count")
    p.add_argument("--stations", type=int, required=True)
    p.add_argument("--reduce-horizon", action="store_true")
    budget(p)

    fleet_command("reduce-horizon", cmd_reduce_horizon, "print the reduced-horizon plan")

    p = fleet_command("export-model", cmd_export_model, "write the 0-1 program in LP format")
    p.add_argument("--stations", type=int,
                   help="export the max-flytime model for this many stations")
    p.add_argument("--reduce-horizon", action="store_true")

    p = sub.add_parser("replan", help="new phase for a robot that arrived late")
    p.add_argument("schedule")
    p.add_argument("--robot", required=True)
    p.add_argument("--arrival", type=int, required=True, help="absolute arrival slot")
    p.set_defaults(func=cmd_replan)

    p = sub.add_parser("validate", help="check a schedule slot by slot")
    p.add_argument("schedule")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gantt", help="draw one horizon of a schedule")
    p.add_argument("schedule")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gantt)

    p = sub.add_parser("bench", help="exact solver vs power-of-two baseline")
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("--robots", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=1, help="consecutive seeds to run")
    p.add_argument("--no-header", action="store_true")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "robots", 1) < 1:
        parser.error("--robots must be >= 1")
    try:
        return args.func(args)
    except (SchemaError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except ResourceLimitError as exc:
        print(f"error: {exc} (optimum within [{exc.lower}, {exc.upper}])", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
