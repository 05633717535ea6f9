"""Degree-based symmetric edge-weight functions.

A weight function f(x, y) maps a pair of positive integer vertex degrees to a
positive real. The built-in named functions are

    abc           sqrt((x + y - 2) / (x * y))
    randic        1 / sqrt(x * y)
    sombor        sqrt(x^2 + y^2)
    zagreb1       x + y
    zagreb2       x * y
    recip_randic  sqrt(x * y)

Weights may also be a positive constant or an explicit table on unordered
degree pairs. The string grammar accepted by :func:`parse_weight` is

    abc | randic | sombor | zagreb1 | zagreb2 | recip-randic
    | const:<float>
    | table:<x>,<y>=<v>(;<x>,<y>=<v>)*
"""

import math
from dataclasses import dataclass

from .errors import BadParams, MissingTableEntry, NonPositiveValue

NAMED_WEIGHTS = ("abc", "randic", "sombor", "zagreb1", "zagreb2", "recip_randic")

PROPERTIES = ("symmetric", "increasing_in_x", "convex_in_x", "Pstar", "Pstarstar")

DEFAULT_MAX_DEGREE = 16

# Slack for floating-point comparisons in grid property checks. Exact-zero
# second differences (e.g. linear functions) must count as convex.
_GRID_EPS = 1e-12

_FORMULAS = {
    "abc": lambda x, y: math.sqrt((x + y - 2) / (x * y)),
    "randic": lambda x, y: 1.0 / math.sqrt(x * y),
    "sombor": lambda x, y: math.sqrt(x * x + y * y),
    "zagreb1": lambda x, y: float(x + y),
    "zagreb2": lambda x, y: float(x * y),
    "recip_randic": lambda x, y: math.sqrt(x * y),
}


@dataclass(frozen=True)
class WeightSpec:
    """A named, constant, or table-defined symmetric weight function.

    Use the classmethods :meth:`named`, :meth:`constant`, :meth:`from_table`
    or :func:`parse_weight` instead of the raw constructor. Instances are
    immutable and hashable.
    """

    kind: str
    name: str | None = None
    c: float | None = None
    table: tuple = None

    def __post_init__(self):
        if self.kind == "named":
            if self.name not in NAMED_WEIGHTS:
                raise BadParams(f"unknown named weight {self.name!r}")
        elif self.kind == "constant":
            if self.c is None or not (self.c > 0):
                raise BadParams("constant weight must be > 0")
        elif self.kind == "table":
            if not self.table:
                raise BadParams("table weight needs at least one entry")
            lookup = {}
            for (x, y), v in self.table:
                if x < 1 or y < 1:
                    raise BadParams(f"table degrees must be >= 1, got ({x}, {y})")
                if not (v > 0):
                    raise NonPositiveValue(
                        f"table value for ({x}, {y}) must be > 0, got {v}"
                    )
                lookup[(x, y)] = float(v)
            object.__setattr__(self, "_lookup", lookup)
        else:
            raise BadParams(f"unknown weight kind {self.kind!r}")

    @classmethod
    def named(cls, name):
        return cls(kind="named", name=name.replace("-", "_"))

    @classmethod
    def constant(cls, c):
        return cls(kind="constant", c=float(c))

    @classmethod
    def from_table(cls, entries):
        """Build a table spec from a mapping {(x, y): value} on unordered pairs."""
        items = {}
        for (x, y), v in dict(entries).items():
            key = (min(x, y), max(x, y))
            if key in items and items[key] != float(v):
                raise BadParams(f"conflicting table values for pair {key}")
            items[key] = float(v)
        return cls(kind="table", table=tuple(sorted(items.items())))

    def __str__(self):
        if self.kind == "named":
            return self.name.replace("_", "-")
        if self.kind == "constant":
            return f"const:{self.c:g}"
        body = ";".join(f"{x},{y}={v:g}" for (x, y), v in self.table)
        return f"table:{body}"

    def __call__(self, x, y):
        return eval_weight(self, x, y)


def parse_weight(text):
    """Parse a weight-spec string (see module docstring for the grammar)."""
    text = text.strip()
    plain = text.replace("-", "_")
    if plain in NAMED_WEIGHTS:
        return WeightSpec.named(plain)
    if text.startswith("const:"):
        try:
            c = float(text[len("const:"):])
        except ValueError:
            raise BadParams(f"bad constant weight spec {text!r}") from None
        return WeightSpec.constant(c)
    if text.startswith("table:"):
        entries = {}
        for chunk in text[len("table:"):].split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                pair, val = chunk.split("=")
                xs, ys = pair.split(",")
                x, y = int(xs), int(ys)
                v = float(val)
            except ValueError:
                raise BadParams(f"bad table entry {chunk!r}") from None
            key = (min(x, y), max(x, y))
            if key in entries and entries[key] != v:
                raise BadParams(f"conflicting table values for pair {key}")
            entries[key] = v
        return WeightSpec.from_table(entries)
    raise BadParams(f"unrecognized weight spec {text!r}")


def eval_weight(f, x, y):
    """Evaluate f at a pair of positive integer degrees.

    Symmetric by construction: eval_weight(f, x, y) == eval_weight(f, y, x).
    """
    if x < 1 or y < 1:
        raise BadParams(f"degrees must be >= 1, got ({x}, {y})")
    if f.kind == "named":
        return _FORMULAS[f.name](x, y) if x <= y else _FORMULAS[f.name](y, x)
    if f.kind == "constant":
        return f.c
    key = (x, y) if x <= y else (y, x)
    try:
        return f._lookup[key]
    except KeyError:
        raise MissingTableEntry(x, y) from None


def supports_degrees(f, degree_pairs):
    """True when f is evaluable on every (x, y) pair in the iterable."""
    if f.kind != "table":
        return True
    return all((min(x, y), max(x, y)) in f._lookup for x, y in degree_pairs)


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of a grid property check.

    ``grid`` records the inclusive degree range [1, D] that was examined, so
    a ``holds=True`` claim is scoped to that range. When ``holds`` is False,
    ``witness`` is a tuple of degree arguments reproducing the violation.
    """

    property: str
    holds: bool
    grid: tuple
    witness: tuple | None = None
    strict: bool = False


def _check_increasing(f, max_degree, strict):
    for y in range(1, max_degree + 1):
        for x in range(1, max_degree):
            lo, hi = eval_weight(f, x, y), eval_weight(f, x + 1, y)
            bad = (hi <= lo) if strict else (hi < lo - _GRID_EPS)
            if bad:
                return (x, y)
    return None


def _check_convex(f, max_degree):
    for y in range(1, max_degree + 1):
        for x in range(1, max_degree - 1):
            second = (
                eval_weight(f, x + 2, y)
                - 2.0 * eval_weight(f, x + 1, y)
                + eval_weight(f, x, y)
            )
            if second < -_GRID_EPS:
                return (x, y)
    return None


def _same_sum_pairs(max_degree):
    """Yield ((x1, y1), (x2, y2)) with equal sums and |x1-y1| > |x2-y2|."""
    by_sum = {}
    for x in range(1, max_degree + 1):
        for y in range(1, x + 1):
            by_sum.setdefault(x + y, []).append((x, y))
    for pairs in by_sum.values():
        for x1, y1 in pairs:
            for x2, y2 in pairs:
                if abs(x1 - y1) > abs(x2 - y2):
                    yield (x1, y1), (x2, y2)


def check_property(f, property, max_degree=DEFAULT_MAX_DEGREE, strict=False):
    """Check a structural property of f on the integer grid [1, D]^2.

    ``increasing_in_x`` and ``convex_in_x`` are finite-difference checks.
    ``Pstar`` requires increasing (non-strict unless ``strict``), convex, and
    f to favor imbalanced degree pairs among equal-sum pairs; ``Pstarstar``
    requires increasing, convex, and strictly favoring balanced pairs.
    Degrees in simple graphs are positive integers, so a grid check at the
    default D = 16 covers every pair these weights ever see in practice.
    """
    if property not in PROPERTIES:
        raise BadParams(f"unknown property {property!r}")
    if max_degree < 3:
        raise BadParams("property grid needs max_degree >= 3")
    grid = (1, max_degree)

    if property == "symmetric":
        for x in range(1, max_degree + 1):
            for y in range(1, max_degree + 1):
                if eval_weight(f, x, y) != eval_weight(f, y, x):
                    return PropertyReport(property, False, grid, (x, y), strict)
        return PropertyReport(property, True, grid, None, strict)

    if property == "increasing_in_x":
        w = _check_increasing(f, max_degree, strict)
        return PropertyReport(property, w is None, grid, w, strict)

    if property == "convex_in_x":
        w = _check_convex(f, max_degree)
        return PropertyReport(property, w is None, grid, w, strict)

    # Pstar / Pstarstar: increasing + convex + the same-sum comparison.
    w = _check_increasing(f, max_degree, strict)
    if w is not None:
        return PropertyReport(property, False, grid, w, strict)
    w = _check_convex(f, max_degree)
    if w is not None:
        return PropertyReport(property, False, grid, w, strict)
    for (x1, y1), (x2, y2) in _same_sum_pairs(max_degree):
        a, b = eval_weight(f, x1, y1), eval_weight(f, x2, y2)
        if property == "Pstar":
            if a < b - _GRID_EPS:
                return PropertyReport(property, False, grid, (x1, y1, x2, y2), strict)
        else:
            if a >= b:
                return PropertyReport(property, False, grid, (x1, y1, x2, y2), strict)
    return PropertyReport(property, True, grid, None, strict)
