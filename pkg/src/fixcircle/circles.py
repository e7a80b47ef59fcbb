"""Critical radius, fixed-circle verification and theorem-level verifiers.

The verifiers never assume a hypothesis: they evaluate it, then evaluate
every conclusion regardless, so a report can show both "theorem-certified"
circles and circles that merely happen to be fixed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .contractions import (
    ContractionVerdict,
    MultivaluedMap,
    check,
    displacement,
)
from .errors import ParameterError
from .metric import (
    Circle,
    ComplexSpace,
    circle_of,
    disc_circle,
    point_set_distance,
    realized_radii,
)
from .quadrature import IntegralPhi
from .wardowski import FFunction

INF = math.inf


@dataclass(frozen=True)
class RadiusResult:
    r: object
    attaining_points: tuple[str, ...]
    vacuous: bool


def compute_r(T: MultivaluedMap) -> RadiusResult:
    """Smallest positive displacement, with every point attaining it."""
    shown = [(x, displacement(T, x)) for x in T.space.points]
    positive = [h for _, h in shown if h > 0]
    if not positive:
        return RadiusResult(INF, (), True)
    r = min(positive)
    return RadiusResult(r, tuple(x for x, h in shown if h == r), False)


@dataclass(frozen=True)
class CircleVerdict:
    circle: Circle
    fixed: bool
    vacuous: bool
    witnesses: tuple[tuple[str, bool], ...]
    hypothesis_checks: dict = field(default_factory=dict)


def _verdict_for(T: MultivaluedMap, circle: Circle) -> CircleVerdict:
    witnesses = tuple((x, x in T(x)) for x in circle.members)
    return CircleVerdict(
        circle=circle,
        fixed=all(ok for _, ok in witnesses),
        vacuous=not witnesses,
        witnesses=witnesses,
    )


def verify_fixed_circle(T: MultivaluedMap, x0: str, rho) -> CircleVerdict:
    """Check x in Tx for every sampled point on the circle C(x0, rho)."""
    return _verdict_for(T, circle_of(T.space, x0, rho))


def verify_fixed_disc(T: MultivaluedMap, x0: str, rho) -> CircleVerdict:
    return _verdict_for(T, disc_circle(T.space, x0, rho))


@dataclass(frozen=True)
class TheoremReport:
    """Hypotheses and conclusions of one fixed-circle theorem instance.

    ``certified`` lists the circles whose fixedness follows from the
    hypotheses when those hold; ``circle``, ``inner`` and ``disc`` are the
    evaluated conclusions whether or not they are certified.
    """

    cls: str
    F: str
    tau: float
    x0: str
    hypothesis: ContractionVerdict
    radius: RadiusResult
    circle: CircleVerdict
    inner: tuple[CircleVerdict, ...]
    disc: CircleVerdict
    center_fixed: bool
    hypothesis_checks: dict
    status: str
    certified: tuple[Circle, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def hypotheses_hold(self) -> bool:
        return all(self.hypothesis_checks.values())

    @property
    def conclusions_hold(self) -> bool:
        claims = [self.circle.fixed, self.center_fixed]
        if not self.cls.endswith("ciric-fc"):
            claims += [self.disc.fixed] + [c.fixed for c in self.inner]
        return all(claims)

    def circles(self) -> list[CircleVerdict]:
        return [self.circle, *self.inner, self.disc]


def verify_theorem(
    T: MultivaluedMap,
    F: FFunction,
    tau: float,
    x0: str,
    cls: str = "fc",
    phi: IntegralPhi | None = None,
) -> TheoremReport:
    """Evaluate the fixed-circle theorem for one contraction class.

    For the plain and integral classes the hypothesis is the contraction
    inequality; the conclusions are: C(x0, r) fixed, every realized circle
    C(x0, rho) with rho < r fixed, the disc D(x0, r) fixed and x0 in Tx0.

    The Ciric classes add the side hypothesis D(Tx, x0) = r for every x on
    C(x0, r). Only C(x0, r) and x0 in Tx0 are certified for them; the disc
    is evaluated and reported but not certified.
    """
    space = T.space
    verdict = check(T, F, tau, x0, cls, phi)
    radius = compute_r(T)
    r = radius.r
    ciric = cls.endswith("ciric-fc")
    notes = []

    if radius.vacuous:
        notes.append("degenerate: T has no displaced points")
        circle = CircleVerdict(Circle(x0, INF, ()), True, True, ())
        inner_radii = realized_radii(space, x0)
        disc = _verdict_for(T, Circle(x0, INF, space.points, disc=True))
    else:
        circle = verify_fixed_circle(T, x0, r)
        inner_radii = [rho for rho in realized_radii(space, x0)
                       if rho < r and not space.same_distance(rho, r)]
        disc = verify_fixed_disc(T, x0, r)
    inner = tuple(verify_fixed_circle(T, x0, rho) for rho in inner_radii)
    if circle.vacuous:
        notes.append("vacuous: C(x0, r) has no sampled members")
    if isinstance(space, ComplexSpace):
        notes.append("coordinate geometry: only sampled points were verified")

    checks = {"contraction": verdict.holds}
    if ciric:
        side = all(
            space.same_distance(point_set_distance(space, x0, T(x)), r)
            for x in circle.circle.members
        )
        checks["D(Tx,x0)=r"] = side
        if not circle.circle.members:
            notes.append("side hypothesis D(Tx,x0)=r holds vacuously")
    hypotheses = all(checks.values())

    certified: list[Circle] = []
    if hypotheses:
        certified.append(circle.circle)
        if not ciric:
            certified.extend(c.circle for c in inner)
            certified.append(disc.circle)
    else:
        notes.append("unconditioned: hypotheses fail, conclusions are empirical only")

    return TheoremReport(
        cls=cls,
        F=F.name,
        tau=tau,
        x0=x0,
        hypothesis=verdict,
        radius=radius,
        circle=circle,
        inner=inner,
        disc=disc,
        center_fixed=x0 in T(x0),
        hypothesis_checks=checks,
        status="theorem-certified" if hypotheses else "unconditioned",
        certified=tuple(certified),
        notes=tuple(notes),
    )


def verify_theorem_fc(T, F, tau, x0):
    return verify_theorem(T, F, tau, x0, "fc")


def verify_theorem_ciric(T, F, tau, x0):
    return verify_theorem(T, F, tau, x0, "ciric-fc")


def verify_theorem_integral_fc(T, F, tau, x0, phi):
    return verify_theorem(T, F, tau, x0, "integral-fc", phi)


def verify_theorem_integral_ciric(T, F, tau, x0, phi):
    return verify_theorem(T, F, tau, x0, "integral-ciric-fc", phi)


def enumerate_fixed_circles(
    T: MultivaluedMap, radii: Sequence | None = None
) -> list[CircleVerdict]:
    """All nonempty fixed circles, by center (space order) then radius.

    Matrix spaces use the realized distances from each center; coordinate
    spaces need an explicit ``radii`` list.
    """
    space = T.space
    if radii is None and isinstance(space, ComplexSpace):
        raise ParameterError("coordinate geometry needs an explicit radius list")
    out = []
    for x0 in space.points:
        candidates = realized_radii(space, x0) if radii is None else sorted(radii)
        for rho in candidates:
            v = verify_fixed_circle(T, x0, rho)
            if v.fixed and not v.vacuous:
                out.append(v)
    return out
