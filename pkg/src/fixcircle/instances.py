"""Instance files and the built-in worked examples.

Instance document (JSON)::

    {
      "kind": "matrix" | "complex",
      "points": [labels...]                    # matrix kind
              | {label: [re, im], ...},        # complex kind
      "distances": [row-major numbers],        # matrix kind only
      "ambient": {label: [re, im], ...},       # complex kind, optional
      "map": {label: [image labels...], ...},
      "meta": {...}                            # optional
    }

Matrix distances may be JSON numbers or exact rationals written as
strings such as ``"1/3"``. Ambient points may appear in images but are not
part of the sampled space.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .contractions import MultivaluedMap
from .errors import MetricAxiomError, SchemaError
from .metric import ComplexSpace, MatrixSpace, MetricSpace, validate_metric

BUILTIN = ("example1", "example2", "example3")


@dataclass(frozen=True)
class Instance:
    name: str
    space: MetricSpace
    T: MultivaluedMap
    meta: dict = field(default_factory=dict)


def _number(value, where):
    if isinstance(value, bool):
        raise SchemaError(f"{where}: expected a number, got {value!r}")
    if isinstance(value, (int, float)):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            pass
    raise SchemaError(f"{where}: expected a number or rational string, got {value!r}")


def _coords(obj, where) -> dict:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where} must be an object of label -> [re, im]")
    out = {}
    for label, pair in obj.items():
        if not (isinstance(pair, list) and len(pair) == 2):
            raise SchemaError(f"{where}[{label!r}] must be a [re, im] pair")
        re_, im_ = (float(_number(v, f"{where}[{label!r}]")) for v in pair)
        out[label] = complex(re_, im_)
    return out


def load_instance(doc: dict, name: str = "instance") -> Instance:
    """Build and validate an instance from a decoded JSON document.

    Raises ``SchemaError`` for malformed documents and ``MetricAxiomError``
    when a matrix violates the metric axioms.
    """
    if not isinstance(doc, dict):
        raise SchemaError("instance must be a JSON object")
    kind = doc.get("kind")
    if "points" not in doc or "map" not in doc:
        raise SchemaError("instance needs 'points' and 'map'")
    if kind == "matrix":
        labels = doc["points"]
        if not isinstance(labels, list):
            raise SchemaError("matrix 'points' must be an array of labels")
        flat = doc.get("distances")
        if not isinstance(flat, list):
            raise SchemaError("matrix instances need a 'distances' array")
        flat = [_number(v, f"distances[{i}]") for i, v in enumerate(flat)]
        space = MatrixSpace.from_flat(labels, flat)
    elif kind == "complex":
        if "distances" in doc:
            raise SchemaError("'distances' is only allowed for matrix instances")
        space = ComplexSpace(_coords(doc["points"], "points"),
                             _coords(doc.get("ambient", {}), "ambient"))
    else:
        raise SchemaError(f"unknown instance kind {kind!r}; expected 'matrix' or 'complex'")

    report = validate_metric(space, limit=10)
    if not report.passed:
        kind_, triple = report.violations[0]
        raise MetricAxiomError(f"metric axiom '{kind_}' fails at {triple}", report.violations)

    images = doc["map"]
    if not isinstance(images, dict) or not all(isinstance(v, list) for v in images.values()):
        raise SchemaError("'map' must be an object of label -> [labels]")
    meta = doc.get("meta") or {}
    if not isinstance(meta, dict):
        raise SchemaError("'meta' must be an object")
    T = MultivaluedMap(space, images)
    return Instance(meta.get("name", name), space, T, dict(meta))


def parse_instance(path) -> Instance:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from None
    return load_instance(doc, name=path.stem)


def _json_number(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v


def dump_instance(inst: Instance) -> dict:
    """Inverse of ``load_instance``."""
    space = inst.space
    doc: dict = {}
    if isinstance(space, MatrixSpace):
        doc["kind"] = "matrix"
        doc["points"] = list(space.points)
        doc["distances"] = [_json_number(v) for row in space.rows for v in row]
    else:
        doc["kind"] = "complex"
        doc["points"] = {p: [space.coordinate(p).real, space.coordinate(p).imag]
                         for p in space.points}
        if space.ambient:
            doc["ambient"] = {p: [complex(z).real, complex(z).imag]
                              for p, z in space.ambient.items()}
    doc["map"] = {p: list(inst.T(p)) for p in space.points}
    if inst.meta:
        doc["meta"] = dict(inst.meta)
    return doc


# --- built-in examples -------------------------------------------------------

def _decimal_label(q: Fraction) -> str:
    text = f"{float(q):.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("0", "-0") else text


def example1(N: int = 20, step: Fraction = Fraction(1, 10)) -> Instance:
    """[-2, 0] on a grid of ``step`` plus the chain x_n = 1 + 1/n, n <= N.

    T fixes every grid point; T(x_n) = {-1, x_1, ..., x_(n-1)}. Distances
    are exact rationals.
    """
    if N < 1:
        raise SchemaError("example1 needs N >= 1")
    count = int(2 / step)
    grid = [Fraction(-k) * step for k in range(count, -1, -1)]
    values = {_decimal_label(q): q for q in grid}
    for label in ("-2", "-1", "0"):
        if label not in values:
            raise SchemaError("grid step must hit -2, -1 and 0 exactly")
    chain = {f"x{n}": 1 + Fraction(1, n) for n in range(1, N + 1)}
    values.update(chain)
    labels = list(values)
    space = MatrixSpace.from_function(labels, lambda a, b: abs(values[a] - values[b]))
    images = {p: [p] for p in values if p not in chain}
    for n in range(1, N + 1):
        images[f"x{n}"] = ["-1"] + [f"x{m}" for m in range(1, n)]
    meta = {"name": "example1", "N": N,
            "notes": "T fixes C(-1,1) and D(-1,1) but is no F_C-contraction for x0=-1"}
    return Instance("example1", space, MultivaluedMap(space, images), meta)


def _complex_label(z: complex) -> str:
    a, b = int(z.real), int(z.imag)
    if b == 0:
        return str(a)
    im = {1: "i", -1: "-i"}.get(b, f"{b}i")
    if a == 0:
        return im
    return f"{a}{im}" if im.startswith("-") else f"{a}+{im}"


def example2(chain_max: int = 12) -> Instance:
    """Finite sample of the complex plane for T(x) = {x} if |x| < 4 else {x+1, x+2, x+3}.

    Sample: 16 points 3*exp(i*k*pi/8) on |x| = 3, the integer grid inside
    |x| < 4 (minus the four lattice points with |x| = 3), and the real
    chain 4..chain_max. Images past the chain are ambient points.
    """
    coords: dict[str, complex] = {}
    for a in range(-3, 4):
        for b in range(-3, 4):
            if a * a + b * b < 16 and a * a + b * b != 9:
                coords[_complex_label(complex(a, b))] = complex(a, b)
    exact_axes = {0: 3 + 0j, 4: 3j, 8: -3 + 0j, 12: -3j}
    for k in range(16):
        coords[f"c{k}"] = exact_axes.get(k, cmath.rect(3.0, k * math.pi / 8))
    for n in range(4, chain_max + 1):
        coords[str(n)] = complex(n)
    ambient = {str(n): complex(n) for n in range(chain_max + 1, chain_max + 4)}
    images = {}
    for label, z in coords.items():
        if abs(z) < 4:
            images[label] = [label]
        else:
            images[label] = [str(int(z.real) + j) for j in (1, 2, 3)]
    space = ComplexSpace(coords, ambient)
    meta = {"name": "example2", "notes": "F=ln, tau=ln(4/3), x0=0; r=3"}
    return Instance("example2", space, MultivaluedMap(space, images), meta)


def example3() -> Instance:
    inst = example2()
    meta = dict(inst.meta, name="example3", default_class="ciric-fc")
    return Instance("example3", inst.space, inst.T, meta)


def builtin_instance(name: str) -> Instance:
    if name == "example1":
        return example1()
    if name == "example2":
        return example2()
    if name == "example3":
        return example3()
    raise SchemaError(f"unknown built-in instance {name!r}")


def resolve_instance(ref: str) -> Instance:
    """A built-in name or a path to an instance file."""
    if ref in BUILTIN:
        return builtin_instance(ref)
    return parse_instance(ref)
