"""Command-line interface.

Exit codes: 0 verdict positive, 1 verdict negative, 2 usage or schema
error, 3 metric-axiom failure.
"""

from __future__ import annotations

import argparse
import math
import sys

from .campaign import CampaignConfig, run_campaign
from .circles import compute_r, enumerate_fixed_circles, verify_fixed_circle, verify_fixed_disc, verify_theorem
from .contractions import CLASSES, check, ciric_M, max_tau, search_witness
from .errors import FixCircleError, MetricAxiomError
from .instances import Instance, builtin_instance, resolve_instance
from .quadrature import IntegralPhi
from .report import RunReport, radius_json, theorem_json, verdict_json
from .wardowski import BUILTIN_NAMES, BUILTINS, F_by_name

EXIT_USAGE = 2
EXIT_METRIC = 3


def _phi_for(cls: str, phi: IntegralPhi | None) -> IntegralPhi | None:
    if cls.startswith("integral"):
        return phi or IntegralPhi()
    return None


def cmd_check(inst: Instance, cls: str, F_name: str, tau: float | None, x0: str,
              phi: IntegralPhi | None = None) -> RunReport:
    F = F_by_name(F_name)
    phi = _phi_for(cls, phi)
    if tau is None:
        v = max_tau(inst.T, F, x0, cls, phi)
    else:
        v = check(inst.T, F, tau, x0, cls, phi)
    lines = [f"class {cls}, F={F.name}, x0={x0}"
             + (f", tau={tau!r}" if tau is not None else "")
             + (f", phi={phi.name}" if phi else "")]
    if v.vacuous:
        lines.append("vacuous: no point is displaced")
    for w in v.violations[:10]:
        lines.append(f"violation at {w.point}: {w.reason}")
    return RunReport(inst.name, "check", v.holds, tau_max=v.tau_max,
                     hypothesis_checks={"contraction": v.holds},
                     details=verdict_json(v), lines=lines)


def cmd_search(inst: Instance, F_names=None, x0_candidates=None,
               classes=("fc", "ciric-fc"), phi: IntegralPhi | None = None) -> RunReport:
    Fs = [F_by_name(n) for n in F_names] if F_names else list(BUILTINS)
    found = search_witness(inst.T, Fs, x0_candidates, classes, phi)
    rows = [{"class": w.cls, "F": w.F, "x0": w.x0, "tau_max": w.tau_max} for w in found]
    lines = [f"{w.cls:18s} F={w.F:8s} x0={w.x0:8s} tau_max={w.tau_max:.12g}" for w in found[:20]]
    if len(found) > 20:
        lines.append(f"... {len(found) - 20} more")
    best = found[0].tau_max if found else None
    return RunReport(inst.name, "search", bool(found), tau_max=best,
                     details={"witnesses": rows}, lines=lines)


def cmd_radius(inst: Instance) -> RunReport:
    res = compute_r(inst.T)
    lines = (["vacuous: T has no displaced points"] if res.vacuous
             else ["attained at " + ", ".join(res.attaining_points)])
    return RunReport(inst.name, "radius", True, r=res.r, details=radius_json(res), lines=lines)


def cmd_circles(inst: Instance, radii=None) -> RunReport:
    found = enumerate_fixed_circles(inst.T, radii)
    return RunReport(inst.name, "circles", bool(found), circles=found,
                     details={"count": len(found)}, lines=[f"{len(found)} nonempty fixed circles"])


def cmd_theorem(inst: Instance, cls: str, F_name: str, tau: float, x0: str,
                phi: IntegralPhi | None = None) -> RunReport:
    F = F_by_name(F_name)
    t = verify_theorem(inst.T, F, tau, x0, cls, _phi_for(cls, phi))
    lines = [f"status: {t.status}"] + [f"note: {n}" for n in t.notes]
    lines.append(f"x0 in T(x0): {t.center_fixed}")
    ok = t.hypotheses_hold and t.conclusions_hold
    return RunReport(inst.name, "theorem", ok, tau_max=t.hypothesis.tau_max, r=t.radius.r,
                     circles=t.circles(), hypothesis_checks=t.hypothesis_checks,
                     details=theorem_json(t), lines=lines)


def cmd_campaign(seed: int, count: int, sizes=(3, 10)) -> RunReport:
    summary = run_campaign(CampaignConfig(seed=seed, count=count,
                                          min_size=sizes[0], max_size=sizes[1]))
    lines = [f"{name}: {c['checked']} checked, {c['failures']} failed"
             for name, c in summary["invariants"].items()]
    lines += [f"observed {k}: {v}" for k, v in summary["observations"].items()]
    for s in summary["failure_samples"]:
        lines.append(f"FAIL {s['invariant']} at {s['where']}: {s['detail']}")
    return RunReport(f"campaign(seed={seed})", "campaign", summary["passed"],
                     details=summary, lines=lines)


def _reproduce(inst: Instance, checks: list[tuple[str, bool]], circles, details) -> RunReport:
    lines = [f"[{'ok' if ok else 'MISMATCH'}] {name}" for name, ok in checks]
    details = dict(details, reproduction=dict(checks))
    return RunReport(inst.name, "example", all(ok for _, ok in checks), circles=circles,
                     details=details, lines=lines)


def cmd_example(number: int) -> RunReport:
    """Re-run a worked example and compare against the published verdicts."""
    F = F_by_name("ln")
    tau = math.log(4 / 3)
    if number == 1:
        inst = builtin_instance("example1")
        fc = max_tau(inst.T, F, "-1", "fc")
        ci = max_tau(inst.T, F, "-1", "ciric-fc")
        circle = verify_fixed_circle(inst.T, "-1", 1)
        disc = verify_fixed_disc(inst.T, "-1", 1)
        listed = any(c.circle.center == "-1" and c.circle.radius == 1
                     for c in enumerate_fixed_circles(inst.T))
        checks = [
            ("fc fails at x0=-1 with tau_max = 0", not fc.holds and fc.tau_max == 0),
            ("ciric-fc fails at x0=-1 with tau_max = 0", not ci.holds and ci.tau_max == 0),
            ("C(-1,1) = {-2, 0}", set(circle.circle.members) == {"-2", "0"}),
            ("C(-1,1) fixed", circle.fixed),
            ("D(-1,1) fixed", disc.fixed),
            ("C(-1,1) listed by circle enumeration", listed),
        ]
        return _reproduce(inst, checks, [circle, disc],
                          {"fc": verdict_json(fc), "ciric-fc": verdict_json(ci)})
    if number == 2:
        inst = builtin_instance("example2")
        res = compute_r(inst.T)
        v = check(inst.T, F, tau, "0", "fc")
        t = verify_theorem(inst.T, F, tau, "0", "fc")
        checks = [
            ("r = 3", res.r == 3),
            ("fc holds with tau = ln(4/3), x0 = 0", v.holds),
            ("tau_max = ln(4/3)", abs(v.tau_max - tau) <= 1e-12),
            ("theorem certifies C(0,3)", t.hypotheses_hold and t.circle.fixed
             and not t.circle.vacuous),
            ("D(0,3) fixed", t.disc.fixed),
        ]
        return _reproduce(inst, checks, [t.circle, t.disc], theorem_json(t))
    if number == 3:
        inst = builtin_instance("example3")
        v = check(inst.T, F, tau, "0", "ciric-fc")
        m = ciric_M(inst.T, "4", "0")
        t = verify_theorem(inst.T, F, tau, "0", "ciric-fc")
        checks = [
            ("ciric-fc holds with tau = ln(4/3), x0 = 0", v.holds),
            ("M(4, 0) = 4.5", abs(m - 4.5) <= 1e-12),
            ("side hypothesis D(Tx,0) = r on C(0,3)", t.hypotheses_hold),
            ("C(0,3) fixed", t.circle.fixed and not t.circle.vacuous),
            ("D(0,3) fixed", t.disc.fixed),
        ]
        return _reproduce(inst, checks, [t.circle, t.disc], theorem_json(t))
    raise FixCircleError(f"no worked example {number}")


# --- argument parsing ----------------------------------------------------------

def _sizes(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(v) for v in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError("sizes must look like 3..10") from None
    if not 1 <= lo <= hi:
        raise argparse.ArgumentTypeError("need 1 <= lo <= hi")
    return lo, hi


def _csv(text: str) -> list[str]:
    return [t for t in text.split(",") if t]


def _radii(text: str) -> list[float]:
    try:
        return [float(t) for t in _csv(text)]
    except ValueError:
        raise argparse.ArgumentTypeError("radii must be comma-separated numbers") from None


def _phi(text: str) -> IntegralPhi:
    try:
        return IntegralPhi.parse(text)
    except FixCircleError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    contraction = argparse.ArgumentParser(add_help=False)
    contraction.add_argument("--class", dest="cls", choices=CLASSES, default="fc")
    contraction.add_argument("--f", dest="F", choices=BUILTIN_NAMES, default="ln")
    contraction.add_argument("--x0", required=True)
    contraction.add_argument("--phi", type=_phi, default=None,
                             help="'one' or 'linear:<slope>' (integral classes)")

    parser = argparse.ArgumentParser(
        prog="fixcircle",
        description="Fixed circles of multivalued contractions on finite metric spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common, contraction],
                       help="decide one contraction class (tau_max when --tau is omitted)")
    p.add_argument("instance")
    p.add_argument("--tau", type=float)

    p = sub.add_parser("theorem", parents=[common, contraction],
                       help="evaluate a fixed-circle theorem")
    p.add_argument("instance")
    p.add_argument("--tau", type=float, required=True)

    p = sub.add_parser("search", parents=[common], help="search (class, F, x0) witnesses")
    p.add_argument("instance")
    p.add_argument("--f", dest="F", type=_csv, default=None,
                   help="comma-separated F names (default: all built-ins)")
    p.add_argument("--x0", type=_csv, default=None, help="comma-separated candidate centers")
    p.add_argument("--class", dest="cls", type=_csv, default=["fc", "ciric-fc"])
    p.add_argument("--phi", type=_phi, default=None)

    p = sub.add_parser("radius", parents=[common], help="critical radius r")
    p.add_argument("instance")

    p = sub.add_parser("circles", parents=[common], help="enumerate nonempty fixed circles")
    p.add_argument("instance")
    p.add_argument("--radii", type=_radii, default=None,
                   help="comma-separated radii (required for complex instances)")

    p = sub.add_parser("campaign", parents=[common], help="randomized invariant campaign")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--sizes", type=_sizes, default=(3, 10))

    p = sub.add_parser("example", parents=[common], help="reproduce a worked example")
    p.add_argument("number", type=int, choices=(1, 2, 3))
    return parser


def run(args: argparse.Namespace) -> RunReport:
    if args.command == "campaign":
        if args.count < 1:
            raise FixCircleError("--count must be at least 1")
        return cmd_campaign(args.seed, args.count, args.sizes)
    if args.command == "example":
        return cmd_example(args.number)
    inst = resolve_instance(args.instance)
    if args.command == "check":
        return cmd_check(inst, args.cls, args.F, args.tau, args.x0, args.phi)
    if args.command == "theorem":
        return cmd_theorem(inst, args.cls, args.F, args.tau, args.x0, args.phi)
    if args.command == "search":
        for c in args.cls:
            if c not in CLASSES:
                raise FixCircleError(f"unknown class {c!r}")
        return cmd_search(inst, args.F, args.x0, tuple(args.cls), args.phi)
    if args.command == "radius":
        return cmd_radius(inst)
    if args.command == "circles":
        return cmd_circles(inst, args.radii)
    raise FixCircleError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run(args)
    except MetricAxiomError as exc:
        print(f"fixcircle: metric axiom failure: {exc}", file=sys.stderr)
        return EXIT_METRIC
    except FixCircleError as exc:
        print(f"fixcircle: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = report.to_json() if args.format == "json" else report.to_text()
    sys.stdout.write(out)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
