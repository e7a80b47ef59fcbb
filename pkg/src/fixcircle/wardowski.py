"""Wardowski's family of functions F: (0, inf) -> R.

Four closed-form members are built in and addressed by name:

    "ln"       ln(a)
    "ln+id"    ln(a) + a
    "-1/sqrt"  -1/sqrt(a)
    "ln-quad"  ln(a**2 + a)

User functions are given as sampled grids and linearly interpolated; they
are never extrapolated. The three axioms are limit statements, so
``validate_F`` can only report that a function is numerically consistent
with them on a finite probe.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DomainError, RangeError, SchemaError

BUILTIN_NAMES = ("ln", "ln+id", "-1/sqrt", "ln-quad")

_CLOSED_FORMS = {
    "ln": math.log,
    "ln+id": lambda a: math.log(a) + a,
    "-1/sqrt": lambda a: -1.0 / math.sqrt(a),
    "ln-quad": lambda a: math.log(a * a + a),
}


@dataclass(frozen=True)
class FFunction:
    """A member (or candidate member) of the family.

    ``kind`` is one of the built-in names or ``"sampled"``. Sampled functions
    carry strictly increasing abscissae ``alphas`` (all positive) and the
    matching ``values``.
    """

    kind: str
    alphas: tuple[float, ...] = ()
    values: tuple[float, ...] = ()
    label: str = ""

    def __post_init__(self):
        if self.kind == "sampled":
            if len(self.alphas) < 2 or len(self.alphas) != len(self.values):
                raise SchemaError("a sampled F needs at least two (alpha, value) pairs")
            if any(a <= 0 for a in self.alphas):
                raise DomainError("sampled F abscissae must be positive")
            if any(b <= a for a, b in zip(self.alphas, self.alphas[1:])):
                raise SchemaError("sampled F abscissae must be strictly increasing")
        elif self.kind not in _CLOSED_FORMS:
            raise SchemaError(f"unknown F {self.kind!r}; expected one of {BUILTIN_NAMES}")

    @classmethod
    def sampled(cls, pairs: Sequence[tuple[float, float]], label: str = "sampled") -> "FFunction":
        alphas, values = zip(*pairs) if pairs else ((), ())
        return cls("sampled", tuple(alphas), tuple(values), label)

    @property
    def name(self) -> str:
        return self.label or self.kind

    @property
    def builtin(self) -> bool:
        return self.kind != "sampled"

    def __call__(self, alpha) -> float:
        return eval_F(self, alpha)


def F_by_name(name: str) -> FFunction:
    """Look up a built-in member by its CLI/file name."""
    if name not in _CLOSED_FORMS:
        raise SchemaError(f"unknown F {name!r}; expected one of {BUILTIN_NAMES}")
    return FFunction(name)


LN = FFunction("ln")
LN_PLUS_ID = FFunction("ln+id")
NEG_INV_SQRT = FFunction("-1/sqrt")
LN_QUADRATIC = FFunction("ln-quad")
BUILTINS = (LN, LN_PLUS_ID, NEG_INV_SQRT, LN_QUADRATIC)


def eval_F(F: FFunction, alpha) -> float:
    if not alpha > 0:
        raise DomainError(f"F is defined on (0, inf) only, got {alpha!r}")
    if F.kind != "sampled":
        return _CLOSED_FORMS[F.kind](alpha)
    xs = F.alphas
    if alpha < xs[0] or alpha > xs[-1]:
        raise RangeError(
            f"{alpha!r} lies outside the sampled hull [{xs[0]!r}, {xs[-1]!r}] of {F.name}"
        )
    i = bisect.bisect_left(xs, alpha)
    if xs[i] == alpha:
        return float(F.values[i])
    x0, x1 = xs[i - 1], xs[i]
    y0, y1 = F.values[i - 1], F.values[i]
    t = (alpha - x0) / (x1 - x0)
    return float(y0 + t * (y1 - y0))


@dataclass(frozen=True)
class ProbeConfig:
    """Finite probe used to decide the axioms numerically.

    ``k=None`` searches ``k_candidates`` for a witness exponent; a fixed
    ``k`` tests only that exponent. ``floor`` bounds how far the probe grid
    is extended toward zero (by factors of ten) for the limit checks.
    """

    lo: float = 1e-8
    hi: float = 1e3
    n: int = 200
    k: float | None = None
    k_candidates: tuple[float, ...] = (0.25, 0.5, 0.75, 0.9)
    divergence: float = -1e3
    f3_tol: float = 1e-3
    floor: float = 1e-300
    tail: int = 5

    def grid(self) -> np.ndarray:
        if self.lo <= 0 or self.hi <= 0:
            raise DomainError("probe grid points must be positive")
        return np.logspace(math.log10(self.lo), math.log10(self.hi), self.n)

    def exponents(self) -> tuple[float, ...]:
        ks = self.k_candidates if self.k is None else (self.k,)
        for k in ks:
            if not 0 < k < 1:
                raise DomainError(f"k must lie in (0, 1), got {k!r}")
        return ks


@dataclass(frozen=True)
class FAxiomReport:
    F: str
    f1: bool
    f2: bool
    f3: bool
    f2_basis: str
    f3_k: float | None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.f1 and self.f2 and self.f3


def _toward_zero(start: float, floor: float) -> list[float]:
    out = [start]
    while out[-1] / 10.0 >= floor:
        out.append(out[-1] / 10.0)
    return out


def _vanishes(values: Sequence[float], tol: float, tail: int) -> bool:
    """Last value under ``tol`` and the final ``tail`` magnitudes nonincreasing."""
    if not values or not abs(values[-1]) < tol:
        return False
    last = [abs(v) for v in values[-tail:]]
    return all(b <= a for a, b in zip(last, last[1:]))


def validate_F(F: FFunction, probe: ProbeConfig = ProbeConfig()) -> FAxiomReport:
    """Probe (F1)-(F3) on a finite grid and report "numerically consistent".

    Built-ins are probed on the log grid from ``probe.lo`` to ``probe.hi``,
    extended toward zero for the limit axioms; (F2) is analytic for them.
    Sampled functions are probed on their own abscissae only.
    """
    ks = probe.exponents()
    if F.builtin:
        grid = [float(a) for a in probe.grid()]
        tail_grid = _toward_zero(grid[0], probe.floor)[::-1]
    else:
        grid = list(F.alphas)
        tail_grid = grid
    vals = [eval_F(F, a) for a in grid]
    increasing = [b > a for a, b in zip(vals, vals[1:])]
    f1 = all(increasing)
    details: dict = {"grid_points": len(grid)}
    if not f1:
        details["f1_first_failure"] = grid[increasing.index(False)]

    # Walk outward-in: index 0 is the smallest alpha.
    near_zero = sorted(tail_grid)
    f_near = [eval_F(F, a) for a in near_zero]
    if F.builtin:
        f2, f2_basis = True, "analytic"
        details["f2_min_value"] = min(f_near)
    else:
        f2_basis = "sampled"
        f2 = min(vals) <= probe.divergence
        details["f2_min_value"] = min(vals)

    f3, f3_k = False, None
    for k in ks:
        seq = [(a ** k) * fa for a, fa in zip(near_zero, f_near)][::-1]
        if F.builtin:
            ok = _vanishes(seq, probe.f3_tol, probe.tail)
        else:
            ok = abs(seq[-1]) < probe.f3_tol
        if ok:
            f3, f3_k = True, k
            break
    return FAxiomReport(F.name, f1, f2, f3, f2_basis, f3_k, details)
