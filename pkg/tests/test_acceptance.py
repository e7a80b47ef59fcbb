"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import json
import math
import time

import pytest

from fixcircle.campaign import CampaignConfig, run_campaign
from fixcircle.cli import main
from fixcircle.contractions import ciric_M, max_tau
from fixcircle.quadrature import ONE, IntegralPhi, integral_Phi
from fixcircle.wardowski import BUILTINS, FFunction, validate_F

LN_4_3 = math.log(4 / 3)


def cli_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


@pytest.fixture(scope="module")
def campaign():
    start = time.perf_counter()
    summary = run_campaign(CampaignConfig(seed=1, count=500, min_size=3, max_size=10))
    return summary, time.perf_counter() - start


def test_ac1_example2(capsys, record):
    start = time.perf_counter()
    code_r, radius = cli_json(capsys, "radius", "example2")
    code_c, chk = cli_json(capsys, "check", "example2", "--class", "fc", "--f", "ln",
                           "--tau", "0.2876820724", "--x0", "0")
    code_t, thm = cli_json(capsys, "theorem", "example2", "--class", "fc", "--f", "ln",
                           "--tau", "0.2876820724", "--x0", "0")
    elapsed = time.perf_counter() - start
    certified = {(c["center"], c["radius"], c["disc"]) for c in thm["details"]["certified"]}
    ok = (
        code_r == 0 and radius["r"] == 3
        and code_c == 0 and chk["verdict"] is True
        and abs(chk["tau_max"] - LN_4_3) <= 1e-12
        and code_t == 0 and thm["verdict"] is True
        and {("0", 3, False), ("0", 3, True)} <= certified
        and elapsed < 1.0
    )
    assert record("AC1 example 2 reproduction", ok, f"tau_max={chk['tau_max']!r}, {elapsed:.3f}s")


def test_ac2_example1(capsys, record):
    start = time.perf_counter()
    results = []
    for cls in ("fc", "ciric-fc"):
        for tau in ("0.1", "1e-9", "2"):
            code, rep = cli_json(capsys, "check", "example1", "--class", cls, "--f", "ln",
                                 "--tau", tau, "--x0", "-1")
            results.append(code == 1 and rep["verdict"] is False and abs(rep["tau_max"]) <= 1e-12)
    code_c, circ = cli_json(capsys, "circles", "example1")
    elapsed = time.perf_counter() - start
    listed = any(c["center"] == "-1" and sorted(c["members"]) == ["-2", "0"] and c["fixed"]
                 for c in circ["circles"])
    ok = all(results) and code_c == 0 and listed and elapsed < 1.0
    assert record("AC2 example 1 reproduction", ok, f"{elapsed:.3f}s")


def test_ac3_example3(capsys, ex2, record):
    code, rep = cli_json(capsys, "check", "example2", "--class", "ciric-fc", "--f", "ln",
                         "--tau", repr(LN_4_3), "--x0", "0")
    m = ciric_M(ex2.T, "4", "0")
    ok = code == 0 and rep["verdict"] is True and abs(m - 4.5) <= 1e-12
    assert record("AC3 example 3 reproduction", ok, f"M(4,0)={m!r}")


REQUIRED = (
    "lemma-point-to-set",
    "hausdorff-symmetry",
    "hausdorff-identity",
    "hausdorff-triangle",
    "fixed-circle-conclusions",
    "center-membership",
    "plain-implies-ciric",
    "phi-one-reduction",
)


def test_ac4_campaign(campaign, record):
    summary, elapsed = campaign
    inv = summary["invariants"]
    covered = all(inv.get(name, {}).get("checked", 0) > 0 for name in REQUIRED)
    clean = all(inv[name]["failures"] == 0 for name in REQUIRED if name in inv)
    ok = summary["passed"] and covered and clean and elapsed < 30.0
    assert record("AC4 theorem property campaign", ok,
                  f"{summary['violations']} violations, {elapsed:.1f}s"), summary["failure_samples"]


def test_ac5_oracles(campaign, record):
    summary, _ = campaign
    inv = summary["invariants"]
    ok = all(inv.get(name, {}).get("checked", 0) > 0 and inv[name]["failures"] == 0
             for name in ("r-oracle", "oracle-agreement"))
    assert record("AC5 oracle equivalence", ok,
                  f"r checked {inv['r-oracle']['checked']}, circles checked {inv['oracle-agreement']['checked']}")


def test_ac6_quadrature(ex1, ex2, record):
    closed = {"one": lambda s: s, "linear:2": lambda s: s * s}
    errs = []
    for name, exact in closed.items():
        phi = IntegralPhi.parse(name)
        for s in (0.1, 1, 3, 10, 100):
            errs.append(abs(integral_Phi(phi, s, method="simpson") - exact(s)))
    same = True
    for inst, x0 in ((ex1, "-1"), (ex2, "0")):
        for plain in ("fc", "ciric-fc"):
            a = max_tau(inst.T, BUILTINS[0], x0, plain)
            b = max_tau(inst.T, BUILTINS[0], x0, "integral-" + plain, ONE)
            same = same and a.tau_max == b.tau_max and a.holds == b.holds
    ok = max(errs) <= 1e-8 and same
    assert record("AC6 quadrature", ok, f"max error {max(errs):.2e}")


def test_ac7_F_family(record):
    reports = [validate_F(F) for F in BUILTINS]
    decreasing = validate_F(FFunction.sampled([(0.5, 3.0), (1.0, 2.0), (2.0, 1.0)]))
    ok = all(r.passed for r in reports) and not decreasing.passed and not decreasing.f1
    assert record("AC7 F-family validation", ok,
                  ", ".join(f"{r.F}:{'ok' if r.passed else 'fail'}" for r in reports))
