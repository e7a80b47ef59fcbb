"""Integral weights phi and their primitives Phi(s) = integral of phi over [0, s]."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DomainError, RangeError, SchemaError

QUAD_TOL = 1e-9


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = QUAD_TOL,
    max_depth: int = 50,
) -> float:
    """Integrate ``f`` over [a, b] by adaptive Simpson with Richardson correction.

    Each interval is accepted when the two-half estimate differs from the
    whole-interval estimate by less than 15 * tol; the tolerance is halved
    on every split.
    """
    if a == b:
        return 0.0
    if a > b:
        return -adaptive_simpson(f, b, a, tol, max_depth)

    def simpson(fa, fm, fb, h):
        return h / 6.0 * (fa + 4.0 * fm + fb)

    def refine(lo, hi, flo, fmid, fhi, whole, eps, depth):
        mid = 0.5 * (lo + hi)
        lm, rm = 0.5 * (lo + mid), 0.5 * (mid + hi)
        flm, frm = f(lm), f(rm)
        left = simpson(flo, flm, fmid, mid - lo)
        right = simpson(fmid, frm, fhi, hi - mid)
        delta = left + right - whole
        if depth >= max_depth or abs(delta) <= 15.0 * eps:
            return left + right + delta / 15.0
        return (refine(lo, mid, flo, flm, fmid, left, eps / 2.0, depth + 1)
                + refine(mid, hi, fmid, frm, fhi, right, eps / 2.0, depth + 1))

    fa, fb = f(a), f(b)
    fm = f(0.5 * (a + b))
    return refine(a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol, 0)


@dataclass(frozen=True)
class IntegralPhi:
    """Nonnegative weight phi on [0, inf).

    ``kind`` is ``"one"`` (phi = 1), ``"linear"`` (phi(t) = slope * t) or
    ``"sampled"`` (piecewise linear through ``knots``/``values``, starting
    at t = 0 and never extrapolated).
    """

    kind: str = "one"
    slope: float = 1.0
    knots: tuple[float, ...] = ()
    values: tuple[float, ...] = ()
    quad_tol: float = QUAD_TOL

    def __post_init__(self):
        if self.quad_tol <= 0:
            raise DomainError("quad_tol must be positive")
        if self.kind == "one":
            return
        if self.kind == "linear":
            if not self.slope > 0:
                raise DomainError("a linear phi needs a positive slope")
            return
        if self.kind != "sampled":
            raise SchemaError(f"unknown phi kind {self.kind!r}")
        if len(self.knots) < 2 or len(self.knots) != len(self.values):
            raise SchemaError("a sampled phi needs at least two (t, phi) pairs")
        if self.knots[0] != 0:
            raise SchemaError("a sampled phi must start at t = 0")
        if any(b <= a for a, b in zip(self.knots, self.knots[1:])):
            raise SchemaError("sampled phi knots must be strictly increasing")
        for t, v in zip(self.knots, self.values):
            if v < 0:
                raise DomainError(f"phi is negative at t={t!r}")
        if self.values[0] <= 0 and self.values[1] <= 0:
            raise DomainError("phi vanishes on the first segment, so its integral near 0 is 0")

    @classmethod
    def parse(cls, text: str) -> "IntegralPhi":
        """Parse the CLI form: ``one`` or ``linear:<slope>``."""
        if text == "one":
            return cls()
        if text.startswith("linear:"):
            try:
                slope = float(text.split(":", 1)[1])
            except ValueError:
                raise SchemaError(f"bad phi {text!r}") from None
            return cls("linear", slope=slope)
        raise SchemaError(f"unknown phi {text!r}; use 'one' or 'linear:<slope>'")

    @classmethod
    def sampled(cls, pairs: Sequence[tuple[float, float]], quad_tol: float = QUAD_TOL):
        knots, values = zip(*pairs)
        return cls("sampled", knots=tuple(knots), values=tuple(values), quad_tol=quad_tol)

    @property
    def name(self) -> str:
        if self.kind == "linear":
            return f"linear:{self.slope:g}"
        return self.kind

    def __call__(self, t: float) -> float:
        if t < 0:
            raise DomainError(f"phi is defined on [0, inf), got {t!r}")
        if self.kind == "one":
            return 1.0
        if self.kind == "linear":
            return self.slope * t
        ts = self.knots
        if t > ts[-1]:
            raise RangeError(f"{t!r} lies beyond the last phi knot {ts[-1]!r}")
        i = bisect.bisect_left(ts, t)
        if ts[i] == t:
            return float(self.values[i])
        w = (t - ts[i - 1]) / (ts[i] - ts[i - 1])
        return float(self.values[i - 1] + w * (self.values[i] - self.values[i - 1]))


ONE = IntegralPhi()


def integral_Phi(phi: IntegralPhi, s, method: str = "auto") -> float:
    """Phi(s) = integral of phi over [0, s].

    ``method="auto"`` uses the closed forms for ``one`` (returns ``s``
    unchanged, so the reduction to the plain contraction is exact) and
    ``linear``; ``method="simpson"`` forces quadrature for every kind.
    """
    if not s >= 0:
        raise DomainError(f"Phi needs s >= 0, got {s!r}")
    if method not in ("auto", "simpson"):
        raise SchemaError(f"unknown quadrature method {method!r}")
    if method == "auto":
        if phi.kind == "one":
            return s
        if phi.kind == "linear":
            return phi.slope * s * s / 2.0
    if s == 0:
        return 0.0
    if phi.kind == "sampled":
        if s > phi.knots[-1]:
            raise RangeError(f"{s!r} lies beyond the last phi knot {phi.knots[-1]!r}")
        # Integrate knot to knot so Simpson never straddles a kink.
        cuts = [t for t in phi.knots if t < s] + [s]
        return sum(
            adaptive_simpson(phi, a, b, phi.quad_tol / len(cuts))
            for a, b in zip(cuts, cuts[1:])
        )
    return adaptive_simpson(phi, 0.0, float(s), phi.quad_tol)
