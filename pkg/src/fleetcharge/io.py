"""JSON fleet and schedule files."""

import hashlib
import json
import sys
from fractions import Fraction

from .core import PhaseAssignment, RobotSpec, Schedule
from .errors import DomainError


class SchemaError(ValueError):
    """Input file is not valid JSON or does not match the expected layout."""


def read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _parse(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None


def _positive_int(entry, key, where):
    value = entry.get(key)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise SchemaError(f"{where}: {key!r} must be an integer >= 1, got {value!r}")
    return value


def fleet_from_dict(doc):
    """Validate a fleet document; returns ``(robots, slot_minutes)``."""
    if not isinstance(doc, dict):
        raise SchemaError("fleet file must hold a JSON object")
    slot_minutes = doc.get("slot_minutes", 1)
    if isinstance(slot_minutes, bool) or not isinstance(slot_minutes, (int, float)) or slot_minutes <= 0:
        raise SchemaError(f"slot_minutes must be a positive number, got {slot_minutes!r}")
    entries = doc.get("robots")
    if not isinstance(entries, list):
        raise SchemaError("fleet file needs a 'robots' list")
    robots, seen = [], set()
    for k, entry in enumerate(entries):
        where = f"robots[{k}]"
        if not isinstance(entry, dict):
            raise SchemaError(f"{where} must be an object")
        rid = entry.get("id")
        if not isinstance(rid, (str, int)) or isinstance(rid, bool):
            raise SchemaError(f"{where}: 'id' must be a string or integer")
        if rid in seen:
            raise SchemaError(f"duplicate robot id {rid!r}")
        seen.add(rid)
        eps = entry.get("epsilon", 0)
        if isinstance(eps, bool) or not isinstance(eps, (int, float)) or not 0 <= eps < 1:
            raise SchemaError(f"{where}: 'epsilon' must lie in [0, 1), got {eps!r}")
        robots.append(RobotSpec(rid, _positive_int(entry, "charge_slots", where),
                                _positive_int(entry, "fly_slots", where), eps))
    return robots, slot_minutes


def load_fleet(path):
    text = read_text(path)
    robots, slot_minutes = fleet_from_dict(_parse(text))
    return robots, slot_minutes, hashlib.sha256(text.encode("utf-8")).hexdigest()


def fleet_to_dict(robots, slot_minutes=1):
    return {
        "slot_minutes": slot_minutes,
        "robots": [
            {"id": r.id, "charge_slots": r.charge_slots, "fly_slots": r.fly_slots,
             "epsilon": float(r.epsilon)}
            for r in robots
        ],
    }


def schedule_to_dict(robots, phases, stations, horizon, *, original=None, provenance=None,
                     valid=None, slot_minutes=1, **extra):
    """Schedule document for deployed robots.

    ``robots`` are the specs actually scheduled (possibly with shortened
    flying time); ``original`` maps ids to the unmodified specs so the
    safety margin can be recorded.
    """
    original = original or {}
    by_id = {r.id: r for r in robots}
    assignments = []
    for p in phases:
        r = by_id[p.robot_id]
        base = original.get(r.id, r)
        assignments.append({
            "id": r.id,
            "offset": p.offset,
            "cycle": r.cycle_time,
            "charge_slots": r.charge_slots,
            "fly_slots_effective": r.fly_slots,
            "safety_slots": base.fly_slots - r.fly_slots,
        })
    doc = {"horizon": horizon, "stations": stations, "slot_minutes": slot_minutes,
           "assignments": assignments}
    doc.update(extra)
    if valid is not None:
        doc["valid"] = valid
    doc["provenance"] = provenance or {}
    return doc


def schedule_from_dict(doc):
    if not isinstance(doc, dict):
        raise SchemaError("schedule file must hold a JSON object")
    for key in ("horizon", "stations"):
        value = doc.get(key)
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise SchemaError(f"{key!r} must be a nonnegative integer, got {value!r}")
    entries = doc.get("assignments")
    if not isinstance(entries, list):
        raise SchemaError("schedule file needs an 'assignments' list")
    robots, phases = [], []
    for k, entry in enumerate(entries):
        where = f"assignments[{k}]"
        if not isinstance(entry, dict):
            raise SchemaError(f"{where} must be an object")
        offset = entry.get("offset")
        if isinstance(offset, bool) or not isinstance(offset, int):
            raise SchemaError(f"{where}: 'offset' must be an integer")
        try:
            robot = RobotSpec(entry.get("id"), _positive_int(entry, "charge_slots", where),
                              _positive_int(entry, "fly_slots_effective", where))
        except DomainError as exc:
            raise SchemaError(str(exc)) from None
        robots.append(robot)
        phases.append(PhaseAssignment(robot.id, offset))
    return Schedule(robots, phases, doc["stations"], doc["horizon"])


def load_schedule(path):
    doc = _parse(read_text(path))
    return schedule_from_dict(doc), doc


def dumps(doc):
    def default(obj):
        if isinstance(obj, Fraction):
            return float(obj)
        raise TypeError(f"not JSON serialisable: {obj!r}")

    return json.dumps(doc, indent=2, default=default) + "\n"
