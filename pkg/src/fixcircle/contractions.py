"""Decision procedures for the four multivalued contraction classes.

Every class has the shape

    H(Tx, {x}) > 0  =>  tau + F(g(H(Tx, {x}))) <= F(g(bound(x, x0)))

with ``bound`` either d(x, x0) or the Ciric maximand M(x, x0), and ``g``
either the identity or Phi(s) = integral of phi over [0, s]. The existential
"there is a tau > 0" is decided by computing the largest admissible margin

    tau_max = min over displaced x of F(g(bound)) - F(g(H)),

so a map is a contraction for (F, x0) exactly when tau_max > 0. A displaced
point whose bound is 0 cannot satisfy the inequality because F lives on
(0, inf); it is recorded as an ``F-domain`` violation and forces
tau_max = -inf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, SchemaError
from .metric import MetricSpace, PointSet, hausdorff, point_set, point_set_distance
from .quadrature import IntegralPhi, integral_Phi
from .wardowski import FFunction, eval_F

CLASSES = ("fc", "integral-fc", "ciric-fc", "integral-ciric-fc")

INF = math.inf


class MultivaluedMap:
    """Total assignment point -> nonempty image set over one space."""

    __slots__ = ("space", "images", "_displacement")

    def __init__(self, space: MetricSpace, images: Mapping[str, Iterable[str]]):
        missing = [p for p in space.points if p not in images]
        if missing:
            raise SchemaError(f"map is not total: no image for {missing[0]!r}")
        extra = [p for p in images if p not in space]
        if extra:
            raise SchemaError(f"map assigns an image to unknown point {extra[0]!r}")
        table = {}
        for p in space.points:
            labels = list(images[p])
            if not labels:
                raise SchemaError(f"image of {p!r} is empty")
            for q in labels:
                if not space.has(q):
                    raise SchemaError(f"image of {p!r} names unknown point {q!r}")
            table[p] = point_set(space, labels)
        self.space = space
        self.images = table
        # Memo of H(Tx, {x}); values never change once computed.
        self._displacement = {}

    @classmethod
    def identity(cls, space: MetricSpace) -> "MultivaluedMap":
        return cls(space, {p: [p] for p in space.points})

    def __call__(self, x: str) -> PointSet:
        return self.images[x]

    @property
    def single_valued(self) -> bool:
        return all(len(s) == 1 for s in self.images.values())


def singleton(x: str) -> PointSet:
    """A_x = {x}."""
    return PointSet((x,))


def displacement(T: MultivaluedMap, x: str):
    """H(Tx, {x}), computed from both directed branches of the definition."""
    try:
        return T._displacement[x]
    except KeyError:
        pass
    T.space._require(x)
    value = hausdorff(T.space, T(x), singleton(x))
    T._displacement[x] = value
    return value


def zero_displacement_iff_member(T: MultivaluedMap, x: str) -> tuple[bool, bool]:
    """Return ``(H(Tx, {x}) == 0, x in Tx)``.

    Only the first implies the second in general: for Tx = {x, y} with
    y != x the point is a member while the displacement is d(x, y) > 0.
    """
    return displacement(T, x) == 0, x in T(x)


def ciric_M(T: MultivaluedMap, x: str, y: str):
    """max{d(x,y), D(x,Tx), D(y,Ty), (D(x,Ty) + D(y,Tx)) / 2}."""
    s = T.space
    s._require(x)
    s._require(y)
    cross = (point_set_distance(s, x, T(y)) + point_set_distance(s, y, T(x))) / 2
    return max(
        s.distance(x, y),
        point_set_distance(s, x, T(x)),
        point_set_distance(s, y, T(y)),
        cross,
    )


@dataclass(frozen=True)
class Violation:
    point: str
    h: object
    bound: object
    reason: str  # "F-domain", "no-margin" or "inequality"


@dataclass(frozen=True)
class ContractionVerdict:
    """Outcome of a contraction check for one (class, F, x0[, tau])."""

    cls: str
    F: str
    x0: str
    holds: bool
    tau_max: float
    violations: tuple[Violation, ...] = ()
    vacuous: bool = False
    attained_at: str | None = None
    tau: float | None = None
    phi: str | None = None
    slacks: tuple[tuple[str, float], ...] = ()


def _check_class(cls: str, phi: IntegralPhi | None) -> IntegralPhi | None:
    if cls not in CLASSES:
        raise SchemaError(f"unknown contraction class {cls!r}; expected one of {CLASSES}")
    if cls.startswith("integral"):
        return phi if phi is not None else IntegralPhi()
    return None


def _slacks(T: MultivaluedMap, F: FFunction, x0: str, cls: str, phi: IntegralPhi | None):
    """Yield (x, H, bound, slack) for every displaced x, in space order.

    ``slack`` is None when the transformed bound is 0 (outside F's domain).
    """
    space = T.space
    space._require(x0)
    ciric = cls.endswith("ciric-fc")
    for x in space.points:
        h = displacement(T, x)
        if not h > 0:
            continue
        bound = ciric_M(T, x, x0) if ciric else space.distance(x, x0)
        gh, gb = h, bound
        if phi is not None:
            gh, gb = integral_Phi(phi, h), integral_Phi(phi, bound)
        if not gb > 0 or not gh > 0:
            yield x, h, bound, None
        else:
            yield x, h, bound, eval_F(F, gb) - eval_F(F, gh)


def _verdict(cls, F, x0, phi, rows, tau=None, eps=0.0) -> ContractionVerdict:
    tau_max, attained = INF, None
    violations, slacks = [], []
    for x, h, bound, slack in rows:
        if slack is None:
            violations.append(Violation(x, h, bound, "F-domain"))
            if tau_max != -INF:
                tau_max, attained = -INF, x
            continue
        slacks.append((x, slack))
        if tau is None:
            if slack <= 0:
                violations.append(Violation(x, h, bound, "no-margin"))
        elif tau > slack + eps:
            violations.append(Violation(x, h, bound, "inequality"))
        if slack < tau_max:
            tau_max, attained = slack, x
    return ContractionVerdict(
        cls=cls,
        F=F.name,
        x0=x0,
        holds=(tau_max > 0) if tau is None else not violations,
        tau_max=tau_max,
        violations=tuple(violations),
        vacuous=not rows,
        attained_at=attained,
        tau=tau,
        phi=phi.name if phi is not None else None,
        slacks=tuple(slacks),
    )


def max_tau(
    T: MultivaluedMap,
    F: FFunction,
    x0: str,
    cls: str = "fc",
    phi: IntegralPhi | None = None,
) -> ContractionVerdict:
    """Largest admissible margin tau for (class, F, x0).

    The attaining point is the first displaced point, in space order, whose
    slack equals the minimum. ``holds`` iff tau_max > 0.
    """
    phi = _check_class(cls, phi)
    return _verdict(cls, F, x0, phi, list(_slacks(T, F, x0, cls, phi)))


def check(
    T: MultivaluedMap,
    F: FFunction,
    tau: float,
    x0: str,
    cls: str = "fc",
    phi: IntegralPhi | None = None,
) -> ContractionVerdict:
    """Decide the contraction inequality for a given tau > 0.

    A point violates it when tau exceeds its slack (plus ``eps_cmp`` in
    coordinate geometry), hence ``holds`` iff tau <= tau_max (+ eps_cmp).
    """
    if not tau > 0:
        raise DomainError(f"tau must be positive, got {tau!r}")
    phi = _check_class(cls, phi)
    rows = list(_slacks(T, F, x0, cls, phi))
    return _verdict(cls, F, x0, phi, rows, tau=tau, eps=T.space.eps_cmp)


def max_tau_fc(T, F, x0):
    return max_tau(T, F, x0, "fc")


def check_fc(T, F, tau, x0):
    return check(T, F, tau, x0, "fc")


def max_tau_ciric(T, F, x0):
    return max_tau(T, F, x0, "ciric-fc")


def check_ciric_fc(T, F, tau, x0):
    return check(T, F, tau, x0, "ciric-fc")


def check_integral_fc(T, F, tau, x0, phi):
    return check(T, F, tau, x0, "integral-fc", phi)


def check_integral_ciric(T, F, tau, x0, phi):
    return check(T, F, tau, x0, "integral-ciric-fc", phi)


@dataclass(frozen=True)
class Witness:
    cls: str
    F: str
    x0: str
    tau_max: float


def search_witness(
    T: MultivaluedMap,
    F_list: Sequence[FFunction],
    x0_candidates: Sequence[str] | None = None,
    classes: Sequence[str] = ("fc", "ciric-fc"),
    phi: IntegralPhi | None = None,
) -> list[Witness]:
    """Every (class, F, x0) with tau_max > 0, largest margin first.

    Ties keep the enumeration order: class, then F, then candidate.
    """
    if x0_candidates is None:
        x0_candidates = T.space.points
    found = []
    for cls in classes:
        for F in F_list:
            for x0 in x0_candidates:
                v = max_tau(T, F, x0, cls, phi)
                if v.tau_max > 0:
                    found.append(Witness(cls, F.name, x0, v.tau_max))
    found.sort(key=lambda w: -w.tau_max)
    return found
