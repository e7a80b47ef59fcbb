"""Seeded randomized campaign over finite metric spaces and multivalued maps.

Each instance is a random integer-weighted complete graph closed under
shortest paths (so it is a metric with exact integer distances), paired
with a random multivalued map. Every cross-module invariant is evaluated
on it; the campaign fails iff any invariant fails.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import shortest_path

from .circles import compute_r, enumerate_fixed_circles, verify_theorem
from .contractions import (
    MultivaluedMap,
    check,
    displacement,
    max_tau,
    zero_displacement_iff_member,
)
from .metric import MatrixSpace, PointSet, hausdorff, point_set_distance, validate_metric
from .quadrature import ONE, IntegralPhi
from .wardowski import BUILTINS, FFunction, eval_F

LINEAR2 = IntegralPhi("linear", slope=2.0)
MAP_MODES = ("uniform", "anchored", "sticky", "single")
MAX_FAILURE_SAMPLES = 20


@dataclass(frozen=True)
class CampaignConfig:
    seed: int = 1
    count: int = 500
    min_size: int = 3
    max_size: int = 10
    max_image: int = 3
    max_weight: int = 9
    subset_trials: int = 6


def random_space(rng: np.random.Generator, n: int, max_weight: int = 9) -> MatrixSpace:
    """Random symmetric integer weights repaired into a metric by path closure."""
    w = rng.integers(1, max_weight + 1, size=(n, n))
    upper = np.triu(w, 1)
    closed = shortest_path(upper + upper.T, method="FW", directed=False)
    rows = [[int(v) for v in row] for row in closed]
    return MatrixSpace([f"p{i}" for i in range(n)], rows)


def _subset(rng, labels, max_size):
    k = int(rng.integers(1, min(max_size, len(labels)) + 1))
    idx = sorted(rng.choice(len(labels), size=k, replace=False))
    return [labels[i] for i in idx]


def random_map(rng: np.random.Generator, space: MatrixSpace, mode: str,
               max_image: int = 3) -> MultivaluedMap:
    """Random map of one of four shapes.

    ``uniform``  -- every image a uniform nonempty subset of size <= max_image.
    ``anchored`` -- points near a random anchor are fixed; the others map
                    into points strictly closer to themselves than to the
                    anchor, which biases toward genuine contractions.
    ``sticky``   -- every image contains its own point plus random extras.
    ``single``   -- singleton images, half of them fixed points.
    """
    labels = list(space.points)
    d = space.distance
    images = {}
    if mode == "uniform":
        for x in labels:
            images[x] = _subset(rng, labels, max_image)
    elif mode == "anchored":
        anchor = labels[int(rng.integers(len(labels)))]
        radii = sorted({d(x, anchor) for x in labels})
        cutoff = radii[int(rng.integers(len(radii)))]
        for x in labels:
            if d(x, anchor) <= cutoff:
                images[x] = [x]
            else:
                near = [y for y in labels if d(y, x) < d(x, anchor)]
                images[x] = _subset(rng, near, max_image)
    elif mode == "sticky":
        for x in labels:
            images[x] = [x] + _subset(rng, labels, max_image - 1 or 1)
    elif mode == "single":
        for x in labels:
            stay = rng.random() < 0.5
            images[x] = [x] if stay else [labels[int(rng.integers(len(labels)))]]
    else:
        raise ValueError(f"unknown map mode {mode!r}")
    return MultivaluedMap(space, images)


# --- independent oracles -----------------------------------------------------

def naive_r(T: MultivaluedMap):
    """Critical radius by a literal double loop over the definition."""
    d = T.space.distance
    best = math.inf
    for x in T.space.points:
        image = list(T(x))
        forward = 0
        for a in image:
            nearest = math.inf
            for b in (x,):
                nearest = min(nearest, d(a, b))
            forward = max(forward, nearest)
        backward = 0
        for b in (x,):
            nearest = math.inf
            for a in image:
                nearest = min(nearest, d(b, a))
            backward = max(backward, nearest)
        h = max(forward, backward)
        if h > 0 and h < best:
            best = h
    return best


def single_valued_tau_max(T: MultivaluedMap, F: FFunction, x0: str) -> float:
    """min over x with d(x, Tx) > 0 of F(d(x0, x)) - F(d(x, Tx)) for singleton images."""
    d = T.space.distance
    best = math.inf
    for x in T.space.points:
        (y,) = T(x).members
        if d(x, y) > 0:
            if d(x0, x) == 0:
                return -math.inf
            best = min(best, eval_F(F, d(x0, x)) - eval_F(F, d(x, y)))
    return best


# --- campaign ----------------------------------------------------------------

class _Tally:
    def __init__(self):
        self.checked = Counter()
        self.failed = Counter()
        self.samples = []
        self.coverage = Counter()
        self.observed = Counter()

    def expect(self, name: str, ok: bool, where: str, detail: str = "") -> None:
        self.checked[name] += 1
        if not ok:
            self.failed[name] += 1
            if len(self.samples) < MAX_FAILURE_SAMPLES:
                self.samples.append({"invariant": name, "where": where, "detail": detail})


def _taus(tau_max: float) -> list[float]:
    if tau_max == math.inf:
        return [1.0, 1e6]
    if tau_max > 0:
        return [tau_max, math.nextafter(tau_max, math.inf), tau_max / 2]
    return [0.5]


def _same_verdict(a, b) -> bool:
    return (a.holds, a.tau_max, a.violations, a.slacks) == (b.holds, b.tau_max, b.violations, b.slacks)


def check_instance(T: MultivaluedMap, rng: np.random.Generator, tally: _Tally,
                   where: str, subset_trials: int = 6) -> None:
    space = T.space
    labels = list(space.points)

    tally.expect("metric-closure", validate_metric(space).passed, where)

    for _ in range(subset_trials):
        A, B, C = (PointSet(_subset(rng, labels, len(labels))) for _ in range(3))
        hab, hba = hausdorff(space, A, B), hausdorff(space, B, A)
        tally.expect("hausdorff-symmetry", hab == hba, where, f"{A} {B}")
        tally.expect("hausdorff-identity", (hab == 0) == (A == B), where, f"{A} {B}")
        tally.expect("hausdorff-triangle",
                     hausdorff(space, A, C) <= hab + hausdorff(space, B, C), where)
        for a in A:
            tally.expect("lemma-point-to-set", point_set_distance(space, a, B) <= hab,
                         where, f"a={a} {A} {B}")

    for x in labels:
        zero, member = zero_displacement_iff_member(T, x)
        tally.expect("zero-displacement-implies-member", member or not zero, where, x)
        if member and not zero:
            tally.observed["member-with-positive-displacement"] += 1

    radius = compute_r(T)
    tally.expect("r-oracle", radius.r == naive_r(T), where, f"{radius.r} vs {naive_r(T)}")

    fixed_set = {(v.circle.center, v.circle.radius) for v in enumerate_fixed_circles(T)}

    def oracle_agrees(report) -> bool:
        return all((c.center, c.radius) in fixed_set
                   for c in report.certified if not c.disc and c.members)

    if T.single_valued:
        d = space.distance
        tally.expect("single-valued-displacement",
                     all(displacement(T, x) == d(x, T(x).members[0]) for x in labels), where)

    for F in BUILTINS:
        for x0 in labels:
            at = f"{where} F={F.name} x0={x0}"
            v = {
                ("fc", None): max_tau(T, F, x0, "fc"),
                ("ciric-fc", None): max_tau(T, F, x0, "ciric-fc"),
                ("integral-fc", "one"): max_tau(T, F, x0, "integral-fc", ONE),
                ("integral-ciric-fc", "one"): max_tau(T, F, x0, "integral-ciric-fc", ONE),
                ("integral-fc", "linear:2"): max_tau(T, F, x0, "integral-fc", LINEAR2),
                ("integral-ciric-fc", "linear:2"): max_tau(T, F, x0, "integral-ciric-fc", LINEAR2),
            }
            phis = {None: None, "one": ONE, "linear:2": LINEAR2}

            tally.expect("phi-one-reduction",
                         _same_verdict(v["fc", None], v["integral-fc", "one"]), at)
            tally.expect("phi-one-reduction",
                         _same_verdict(v["ciric-fc", None], v["integral-ciric-fc", "one"]), at)

            if T.single_valued:
                oracle = single_valued_tau_max(T, F, x0)
                tally.expect("single-valued-embedding", v["fc", None].tau_max == oracle,
                             at, f"{v['fc', None].tau_max} vs {oracle}")

            for (cls, pname), verdict in v.items():
                phi = phis[pname]
                for tau in _taus(verdict.tau_max):
                    got = check(T, F, tau, x0, cls, phi).holds
                    tally.expect("check-consistency", got == (tau <= verdict.tau_max),
                                 at, f"{cls}/{pname} tau={tau!r} tau_max={verdict.tau_max!r}")
                if verdict.holds:
                    tally.expect("center-membership", x0 in T(x0), at, f"{cls}/{pname}")

            for plain, ciric, pname in (("fc", "ciric-fc", None),
                                        ("integral-fc", "integral-ciric-fc", "one"),
                                        ("integral-fc", "integral-ciric-fc", "linear:2")):
                base = v[plain, pname]
                if base.holds:
                    tau = min(base.tau_max, 1.0)
                    tally.expect("plain-implies-ciric",
                                 check(T, F, tau, x0, ciric, phis[pname]).holds,
                                 at, f"{plain}/{pname} tau={tau!r}")

            for (cls, pname), verdict in v.items():
                if not verdict.holds:
                    continue
                tau = min(verdict.tau_max, 1.0)
                report = verify_theorem(T, F, tau, x0, cls, phis[pname])
                tally.coverage[f"hypothesis-holds:{cls}/{pname or 'none'}"] += 1
                if not verdict.vacuous:
                    tally.coverage[f"non-vacuous:{cls}/{pname or 'none'}"] += 1
                if cls.endswith("ciric-fc"):
                    if report.hypotheses_hold:
                        tally.coverage[f"side-hypothesis-holds:{cls}/{pname or 'none'}"] += 1
                        tally.expect("ciric-circle-fixed",
                                     report.circle.fixed and report.center_fixed, at, cls)
                        if not report.disc.fixed:
                            tally.observed["ciric-disc-not-fixed"] += 1
                else:
                    tally.expect("fixed-circle-conclusions", report.conclusions_hold,
                                 at, f"{cls}/{pname}")
                tally.expect("oracle-agreement", oracle_agrees(report), at, f"{cls}/{pname}")


def run_campaign(config: CampaignConfig) -> dict:
    """Run the campaign and return a deterministic, JSON-ready summary."""
    if config.count < 1:
        raise ValueError("count must be at least 1")
    if not 1 <= config.min_size <= config.max_size:
        raise ValueError("need 1 <= min_size <= max_size")
    root = np.random.SeedSequence(config.seed)
    tally = _Tally()
    modes = Counter()
    for i, child in enumerate(root.spawn(config.count)):
        rng = np.random.default_rng(child)
        n = int(rng.integers(config.min_size, config.max_size + 1))
        space = random_space(rng, n, config.max_weight)
        mode = MAP_MODES[int(rng.integers(len(MAP_MODES)))]
        modes[mode] += 1
        T = random_map(rng, space, mode, config.max_image)
        check_instance(T, rng, tally, f"instance {i} ({mode}, n={n})", config.subset_trials)
    failures = sum(tally.failed.values())
    return {
        "seed": config.seed,
        "count": config.count,
        "sizes": [config.min_size, config.max_size],
        "map_modes": dict(sorted(modes.items())),
        "invariants": {
            name: {"checked": tally.checked[name], "failures": tally.failed[name]}
            for name in sorted(tally.checked)
        },
        "coverage": dict(sorted(tally.coverage.items())),
        "observations": dict(sorted(tally.observed.items())),
        "failure_samples": tally.samples,
        "violations": failures,
        "passed": failures == 0,
    }
