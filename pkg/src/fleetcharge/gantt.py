"""Text and SVG charts of one horizon of a schedule."""

from xml.sax.saxutils import escape

from .core import charging_mask, occupancy_profile

CHARGE_COLOR = "#2ca02c"
FLY_COLOR = "#d62728"


def _digit(count):
    return str(count) if count < 10 else "*"


def render_ascii(schedule):
    """One row per robot (``C`` charging, ``F`` flying) and an occupancy footer.

    Counts of ten or more are shown as ``*``.
    """
    lines = [f"# horizon={schedule.horizon} stations={schedule.stations}"]
    pairs = schedule.deployed()
    if not pairs:
        return "\n".join(lines) + "\n"
    labels = [str(r.id) for r, _ in pairs] + ["occ"]
    width = max(len(s) for s in labels)
    for (robot, offset), label in zip(pairs, labels):
        row = "".join("C" if c else "F" for c in charging_mask(robot, offset, schedule.horizon))
        lines.append(f"{label:<{width}} {row}")
    counts = occupancy_profile(schedule.robots, schedule.phases, schedule.horizon).tolist()
    lines.append(f"{'occ':<{width}} " + "".join(_digit(c) for c in counts))
    return "\n".join(lines) + "\n"


def render_svg(schedule, cell=12, label_width=80):
    pairs = schedule.deployed()
    width = label_width + cell * schedule.horizon
    height = cell * max(len(pairs), 1)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for row, (robot, offset) in enumerate(pairs):
        y = row * cell
        out.append(f'<text x="2" y="{y + cell - 2}" font-size="{cell - 2}">{escape(str(robot.id))}</text>')
        for t, charging in enumerate(charging_mask(robot, offset, schedule.horizon)):
            fill = CHARGE_COLOR if charging else FLY_COLOR
            out.append(
                f'<rect x="{label_width + t * cell}" y="{y}" width="{cell}" height="{cell}" fill="{fill}"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
