"""Run reports: one JSON shape for every CLI command, plus a text rendering."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .circles import CircleVerdict, RadiusResult, TheoremReport
from .contractions import ContractionVerdict


def jsonable(value):
    """Convert to JSON-safe values; infinities become the strings "inf"/"-inf"."""
    if isinstance(value, bool) or value is None or isinstance(value, (str, int)):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else float(value)
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return float(value)


def circle_json(v: CircleVerdict) -> dict:
    out = {
        "center": v.circle.center,
        "radius": jsonable(v.circle.radius),
        "fixed": v.fixed,
        "vacuous": v.vacuous,
        "members": list(v.circle.members),
    }
    if v.circle.disc:
        out["disc"] = True
    not_fixed = [x for x, ok in v.witnesses if not ok]
    if not_fixed:
        out["not_fixed"] = not_fixed
    return out


def verdict_json(v: ContractionVerdict) -> dict:
    return {
        "class": v.cls,
        "F": v.F,
        "x0": v.x0,
        "phi": v.phi,
        "tau": jsonable(v.tau),
        "holds": v.holds,
        "tau_max": jsonable(v.tau_max),
        "attained_at": v.attained_at,
        "vacuous": v.vacuous,
        "violations": [
            {"point": w.point, "H": jsonable(w.h), "bound": jsonable(w.bound), "reason": w.reason}
            for w in v.violations
        ],
    }


def radius_json(r: RadiusResult) -> dict:
    return {"r": jsonable(r.r), "attaining_points": list(r.attaining_points), "vacuous": r.vacuous}


def theorem_json(t: TheoremReport) -> dict:
    return {
        "status": t.status,
        "hypothesis": verdict_json(t.hypothesis),
        "radius": radius_json(t.radius),
        "center_fixed": t.center_fixed,
        "conclusions_hold": t.conclusions_hold,
        "certified": [
            {"center": c.center, "radius": jsonable(c.radius), "disc": c.disc,
             "members": list(c.members)}
            for c in t.certified
        ],
        "notes": list(t.notes),
    }


@dataclass
class RunReport:
    instance: str
    command: str
    verdict: bool
    tau_max: float | None = None
    r: object = None
    circles: list = field(default_factory=list)
    hypothesis_checks: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return 0 if self.verdict else 1

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "command": self.command,
            "verdict": self.verdict,
            "tau_max": jsonable(self.tau_max),
            "r": jsonable(self.r),
            "circles": [circle_json(c) if isinstance(c, CircleVerdict) else c
                        for c in self.circles],
            "hypothesis_checks": jsonable(self.hypothesis_checks),
            "details": jsonable(self.details),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        head = f"{self.command} on {self.instance}: {'POSITIVE' if self.verdict else 'NEGATIVE'}"
        out = [head]
        if self.tau_max is not None:
            out.append(f"  tau_max = {_fmt(self.tau_max)}")
        if self.r is not None:
            out.append(f"  r = {_fmt(self.r)}")
        for name, ok in self.hypothesis_checks.items():
            out.append(f"  hypothesis {name}: {'pass' if ok else 'fail'}")
        out.extend("  " + line for line in self.lines)
        for c in self.circles:
            c = circle_json(c) if isinstance(c, CircleVerdict) else c
            shape = "D" if c.get("disc") else "C"
            state = "vacuous" if c["vacuous"] else ("fixed" if c["fixed"] else "NOT fixed")
            members = ", ".join(c["members"][:12]) + (" ..." if len(c["members"]) > 12 else "")
            out.append(f"  {shape}({c['center']}, {_fmt(c['radius'])}) {state}: {{{members}}}")
        return "\n".join(out) + "\n"


def _fmt(value) -> str:
    value = jsonable(value)
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)
