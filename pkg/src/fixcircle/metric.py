"""Finite metric spaces, point-to-set distance, Hausdorff metric, circles and discs.

Two geometries are supported:

* ``MatrixSpace`` -- an explicit symmetric distance matrix. Entries may be
  ints, floats or ``fractions.Fraction``; comparisons are exact.
* ``ComplexSpace`` -- points carry complex coordinates and the distance is the
  modulus of the difference. Equality of distances is decided within
  ``EPS_EQ``.

A ``ComplexSpace`` may also carry *ambient* points: coordinates that can
appear inside image sets without being part of the sampled space itself.
Circles, discs and radii only ever range over the sampled points.

On finite sets every inf/sup is a min/max, and every nonempty subset is
closed, bounded and compact, so one ``PointSet`` type stands in for both
CB(X) and K(X).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, SchemaError

EPS_EQ = 1e-9
EPS_CMP = 1e-12


class MetricSpace:
    """Common interface of the two geometries."""

    points: tuple[str, ...]
    exact: bool = True

    def distance(self, a: str, b: str):
        raise NotImplementedError

    def has(self, label: str) -> bool:
        """True if ``label`` may appear in a point set (sampled or ambient)."""
        raise NotImplementedError

    def index(self, label: str) -> int:
        return self._index[label]

    @property
    def eps_eq(self) -> float:
        return 0.0 if self.exact else EPS_EQ

    @property
    def eps_cmp(self) -> float:
        return 0.0 if self.exact else EPS_CMP

    def same_distance(self, u, v) -> bool:
        if self.exact:
            return u == v
        return abs(u - v) <= EPS_EQ

    def __contains__(self, label) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return len(self.points)

    def _require(self, label: str) -> None:
        if label not in self._index:
            raise DomainError(f"unknown point {label!r}")


def _check_labels(labels: Sequence[str]) -> tuple[str, ...]:
    labels = tuple(labels)
    if not labels:
        raise SchemaError("a metric space needs at least one point")
    for label in labels:
        if not isinstance(label, str) or not label:
            raise SchemaError(f"point labels must be nonempty strings, got {label!r}")
    if len(set(labels)) != len(labels):
        raise SchemaError("point labels must be unique")
    return labels


def _check_entry(value, where: str):
    if isinstance(value, bool) or not isinstance(value, Real):
        raise SchemaError(f"distance {where} is not a real number: {value!r}")
    if value != value or value in (float("inf"), float("-inf")):
        raise SchemaError(f"distance {where} is not finite: {value!r}")
    return value


@dataclass(frozen=True, eq=False)
class MatrixSpace(MetricSpace):
    """Finite space with an explicit distance matrix, compared exactly."""

    labels: Sequence[str]
    rows: Sequence[Sequence[Real]]
    points: tuple[str, ...] = field(init=False)
    exact = True

    def __post_init__(self):
        labels = _check_labels(self.labels)
        n = len(labels)
        rows = [tuple(row) for row in self.rows]
        if len(rows) != n or any(len(row) != n for row in rows):
            raise SchemaError(f"distance matrix must be {n}x{n}")
        for i, j in itertools.product(range(n), repeat=2):
            _check_entry(rows[i][j], f"({labels[i]}, {labels[j]})")
        for i, j in itertools.combinations(range(n), 2):
            if rows[i][j] != rows[j][i]:
                raise SchemaError(
                    f"asymmetric distance between {labels[i]!r} and {labels[j]!r}"
                )
        object.__setattr__(self, "points", labels)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(labels)})

    @classmethod
    def from_flat(cls, labels: Sequence[str], flat: Sequence[Real]) -> "MatrixSpace":
        """Build from a row-major list of ``len(labels)**2`` entries."""
        n = len(labels)
        flat = list(flat)
        if len(flat) != n * n:
            raise SchemaError(f"expected {n * n} distances, got {len(flat)}")
        return cls(labels, [flat[i * n:(i + 1) * n] for i in range(n)])

    @classmethod
    def from_function(cls, labels: Sequence[str], dist) -> "MatrixSpace":
        return cls(labels, [[dist(a, b) for b in labels] for a in labels])

    def distance(self, a: str, b: str):
        return self.rows[self._index[a]][self._index[b]]

    def has(self, label: str) -> bool:
        return label in self._index


@dataclass(frozen=True, eq=False)
class ComplexSpace(MetricSpace):
    """Finite sample of the complex plane with d(x, y) = |x - y|."""

    coords: Mapping[str, complex]
    ambient: Mapping[str, complex] = field(default_factory=dict)
    points: tuple[str, ...] = field(init=False)
    exact = False

    def __post_init__(self):
        labels = _check_labels(list(self.coords))
        for label in self.ambient:
            if not isinstance(label, str) or not label:
                raise SchemaError(f"point labels must be nonempty strings, got {label!r}")
            if label in self.coords:
                raise SchemaError(f"label {label!r} is both sampled and ambient")
        table = {}
        for label, z in itertools.chain(self.coords.items(), self.ambient.items()):
            z = complex(z)
            if z != z or abs(z) == float("inf"):
                raise SchemaError(f"coordinate of {label!r} is not finite")
            table[label] = z
        seen = {}
        for label, z in table.items():
            if z in seen:
                raise SchemaError(f"points {seen[z]!r} and {label!r} share coordinate {z}")
            seen[z] = label
        object.__setattr__(self, "points", labels)
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(labels)})

    def coordinate(self, label: str) -> complex:
        return self._table[label]

    def distance(self, a: str, b: str) -> float:
        return abs(self._table[a] - self._table[b])

    def has(self, label: str) -> bool:
        return label in self._table


class PointSet:
    """Nonempty finite set of labels drawn from one space.

    Iteration follows first-occurrence order; equality ignores order.
    """

    __slots__ = ("members", "_frozen")

    def __init__(self, members: Iterable[str]):
        members = tuple(dict.fromkeys(members))
        if not members:
            raise DomainError("point sets must be nonempty")
        self.members = members
        self._frozen = frozenset(members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, label) -> bool:
        return label in self._frozen

    def __eq__(self, other) -> bool:
        if isinstance(other, PointSet):
            return self._frozen == other._frozen
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._frozen)

    def __repr__(self) -> str:
        return "PointSet({" + ", ".join(self.members) + "})"


def point_set(space: MetricSpace, labels: Iterable[str]) -> PointSet:
    """Build a ``PointSet`` after checking every label belongs to ``space``."""
    s = PointSet(labels)
    for label in s:
        if not space.has(label):
            raise DomainError(f"point {label!r} is not in the space")
    return s


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    violations: tuple[tuple[str, tuple[str, ...]], ...] = ()


def validate_metric(space: MetricSpace, limit: int | None = None) -> AxiomReport:
    """Check the metric axioms on every pair and triple of sampled points.

    Matrix entries are lifted to ``Fraction`` so the triangle inequality is
    decided without rounding. A violated triangle is reported as
    ``("triangle", (x, y, z))`` meaning d(x, y) > d(x, z) + d(z, y).
    Complex spaces are metric by construction.
    """
    if not isinstance(space, MatrixSpace):
        return AxiomReport(True)
    labels = space.points
    n = len(labels)
    d = [[Fraction(v) for v in row] for row in space.rows]
    bad: list[tuple[str, tuple[str, ...]]] = []

    def full() -> bool:
        return limit is not None and len(bad) >= limit

    for i in range(n):
        if d[i][i] != 0:
            bad.append(("identity", (labels[i], labels[i])))
    for i, j in itertools.combinations(range(n), 2):
        if d[i][j] < 0:
            bad.append(("nonnegativity", (labels[i], labels[j])))
        elif d[i][j] == 0:
            bad.append(("identity", (labels[i], labels[j])))
    for i, j in itertools.combinations(range(n), 2):
        if full():
            break
        for k in range(n):
            if k != i and k != j and d[i][j] > d[i][k] + d[k][j]:
                bad.append(("triangle", (labels[i], labels[j], labels[k])))
    if limit is not None:
        bad = bad[:limit]
    return AxiomReport(not bad, tuple(bad))


def point_set_distance(space: MetricSpace, x: str, B: PointSet):
    """D(x, B): smallest distance from ``x`` to a member of ``B``."""
    if B is None or len(B) == 0:
        raise DomainError("distance to an empty set is undefined")
    return min(space.distance(x, y) for y in B)


def hausdorff(space: MetricSpace, A: PointSet, B: PointSet):
    """Hausdorff distance: max of the two directed max-min distances."""
    if not A or not B:
        raise DomainError("Hausdorff distance needs nonempty sets")
    forward = max(point_set_distance(space, a, B) for a in A)
    backward = max(point_set_distance(space, b, A) for b in B)
    return max(forward, backward)


@dataclass(frozen=True)
class Circle:
    """Points of the sampled space at distance ``radius`` from ``center``.

    ``members`` may be empty. With ``disc=True`` the record describes the
    closed disc instead (distance at most ``radius``).
    """

    center: str
    radius: object
    members: tuple[str, ...]
    disc: bool = False

    @property
    def empty(self) -> bool:
        return not self.members


def _check_radius(r) -> None:
    if r != r or r < 0:
        raise DomainError(f"radius must be nonnegative, got {r!r}")


def circle_of(space: MetricSpace, x0: str, r) -> Circle:
    space._require(x0)
    _check_radius(r)
    members = tuple(x for x in space.points if space.same_distance(space.distance(x, x0), r))
    return Circle(x0, r, members)


def disc_of(space: MetricSpace, x0: str, r) -> PointSet:
    """Closed disc around ``x0``; never empty because it holds the center."""
    space._require(x0)
    _check_radius(r)
    eps = space.eps_eq
    return PointSet(x for x in space.points if space.distance(x, x0) <= r + eps)


def disc_circle(space: MetricSpace, x0: str, r) -> Circle:
    """The disc as a ``Circle`` record, for uniform reporting."""
    return Circle(x0, r, disc_of(space, x0, r).members, disc=True)


def realized_radii(space: MetricSpace, x0: str) -> tuple:
    """Distinct distances from ``x0`` to the sampled points, ascending.

    In coordinate geometry distances within ``EPS_EQ`` of each other are
    merged and the smallest representative is kept.
    """
    space._require(x0)
    values = sorted(space.distance(x, x0) for x in space.points)
    radii: list = []
    for v in values:
        if not radii or not space.same_distance(v, radii[-1]):
            radii.append(v)
    return tuple(radii)
