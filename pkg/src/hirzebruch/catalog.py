"""Catalog of characteristic series and their projective-space values.

Families: euler (1 + a*t), todd (t/(1-exp(-t))), ty and txy (the one- and
two-parameter Todd deformations), dab (t*(a*coth(a*t)+b)), gab
(t*(a*cot(a*t)+b), handled through dab with a -> i*a), and file (arbitrary
coefficients loaded from a JSON series file).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, NamedTuple, Optional, Tuple

from .gaussian import GR_I, GR_ONE, GR_ZERO, GaussianRational, format_gaussian, parse_gaussian
from .series import InsufficientOrderError, PowerSeries, series_from_json

DEFAULT_ORDER = 16

# family name -> required parameter names
FAMILIES: Mapping[str, Tuple[str, ...]] = {
    "euler": ("a",),
    "todd": (),
    "ty": ("y",),
    "txy": ("x", "y"),
    "dab": ("a", "b"),
    "gab": ("a", "b"),
    "file": (),
}


@dataclass(frozen=True)
class SeriesSpec:
    """A named characteristic-series family with concrete Q(i) parameters."""

    family: str
    params: Mapping[str, GaussianRational] = field(default_factory=dict)
    path: Optional[str] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown series family {self.family!r}")
        required = FAMILIES[self.family]
        missing = [p for p in required if p not in self.params]
        if missing:
            raise ValueError(f"family {self.family!r} is missing parameters {missing}")
        extra = [p for p in self.params if p not in required]
        if extra:
            raise ValueError(f"family {self.family!r} does not take parameters {extra}")
        if self.family == "file" and not self.path:
            raise ValueError("family 'file' needs a path")

    def __str__(self) -> str:
        return format_spec(self)


def parse_spec(text: str) -> SeriesSpec:
    """Parse the CLI mini-grammar, e.g. "todd", "dab:a=1,b=1/2", "file:H.json"."""
    family, _, rest = text.partition(":")
    family = family.strip()
    if family == "file":
        if not rest:
            raise ValueError("file spec needs a path, e.g. file:series.json")
        return SeriesSpec("file", {}, rest)
    params = {}
    if rest:
        for item in rest.split(","):
            name, eq, value = item.partition("=")
            if not eq:
                raise ValueError(f"malformed parameter {item!r} in series spec {text!r}")
            params[name.strip()] = parse_gaussian(value)
    return SeriesSpec(family, params)


def format_spec(spec: SeriesSpec) -> str:
    if spec.family == "file":
        return f"file:{spec.path}"
    if not spec.params:
        return spec.family
    items = ",".join(f"{k}={format_gaussian(v)}" for k, v in sorted(spec.params.items()))
    return f"{spec.family}:{items}"


@dataclass(frozen=True)
class CharacteristicSeries:
    """A power series H with H(0) = 1, the generator of a Hirzebruch genus."""

    series: PowerSeries
    spec: Optional[SeriesSpec] = None

    def __post_init__(self):
        if self.series.coeffs[0] != GR_ONE:
            raise ValueError("a characteristic series must have constant term 1")
        if self.series.order < 2:
            raise ValueError("a characteristic series must be known at least to order 2")

    @property
    def order(self) -> int:
        return self.series.order

    def r(self, k: int) -> GaussianRational:
        return self.series.coefficient(k)


def _hxy(x: GaussianRational, y: GaussianRational, order: int) -> PowerSeries:
    """t*(x*e^{st} + y)/(e^{st} - 1) with s = x + y, as 1/phi + x*t.

    phi = (e^{st} - 1)/(st) has constant term 1, so the x + y = 0 case is
    automatically the removable one: phi = 1 and the result is 1 + x*t.
    """
    s = x + y
    fact = Fraction(1)
    coeffs = []
    power = GR_ONE
    for k in range(order + 1):
        fact *= k + 1
        coeffs.append(power / fact)
        power = power * s
    phi = PowerSeries(coeffs)
    return phi.inverse() + PowerSeries.monomial(1, order, x)


def construct(spec: SeriesSpec, order: int = DEFAULT_ORDER) -> CharacteristicSeries:
    """Expand the named characteristic series exactly up to `order`."""
    if order < 2:
        raise ValueError("construction order must be at least 2")
    p = spec.params
    if spec.family == "euler":
        series = PowerSeries.monomial(1, order, p["a"]) + 1
    elif spec.family == "todd":
        series = _hxy(GR_ONE, GR_ZERO, order)
    elif spec.family == "ty":
        series = _hxy(GR_ONE, p["y"], order)
    elif spec.family == "txy":
        series = _hxy(p["x"], p["y"], order)
    elif spec.family == "dab":
        series = _hxy(p["a"] + p["b"], p["a"] - p["b"], order)
    elif spec.family == "gab":
        a = GR_I * p["a"]
        series = _hxy(a + p["b"], a - p["b"], order)
    elif spec.family == "file":
        with open(spec.path) as fh:
            data = json.load(fh)
        laurent = series_from_json(data)
        series = laurent.power_part()
    else:  # pragma: no cover - guarded by SeriesSpec
        raise ValueError(f"unknown family {spec.family!r}")
    return CharacteristicSeries(series, spec)


def h_n(H: CharacteristicSeries, n: int) -> GaussianRational:
    """The genus of complex projective n-space: the t^n coefficient of H^(n+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if H.order < n:
        raise InsufficientOrderError(f"need order >= {n}, have {H.order}")
    base = H.series.truncate(n)
    result = PowerSeries.constant(1, n)
    e = n + 1
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result.coefficient(n)


def novikov_g(H: CharacteristicSeries, order: int) -> PowerSeries:
    """The logarithm sum: coefficient of t^(n+1) is h_n/(n+1)."""
    if H.order < order:
        raise InsufficientOrderError(f"need order >= {order}, have {H.order}")
    coeffs = [GR_ZERO]
    for n in range(order):
        coeffs.append(h_n(H, n) / (n + 1))
    return PowerSeries(coeffs)


class NovikovCheck(NamedTuple):
    ok: bool
    witness_degree: Optional[int]


def verify_novikov(H: CharacteristicSeries, order: int) -> NovikovCheck:
    """Check that the reversion of t/H(t) equals the logarithm sum."""
    if H.order < order:
        raise InsufficientOrderError(f"need order >= {order}, have {H.order}")
    inv = H.series.truncate(order).inverse()
    t_over_h = PowerSeries((GR_ZERO,) + inv.coeffs[:order])
    lhs = t_over_h.reversion()
    rhs = novikov_g(H, order)
    for k in range(order + 1):
        if lhs.coefficient(k) != rhs.coefficient(k):
            return NovikovCheck(False, k)
    return NovikovCheck(True, None)


def _alternating_sum(x: GaussianRational, y: GaussianRational, n: int) -> GaussianRational:
    """(x^(n+1) - (-y)^(n+1))/(x + y) as the always-defined polynomial sum."""
    total = GR_ZERO
    for k in range(n + 1):
        total = total + x ** k * (-y) ** (n - k)
    return total


def closed_form_cpn(spec: SeriesSpec, n: int) -> GaussianRational:
    """Closed-form projective-space value of the named genus."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = spec.params
    if spec.family == "euler":
        return (n + 1) * p["a"] ** n
    if spec.family == "todd":
        return GR_ONE
    if spec.family == "ty":
        return _alternating_sum(GR_ONE, p["y"], n)
    if spec.family == "txy":
        return _alternating_sum(p["x"], p["y"], n)
    if spec.family == "dab":
        return _alternating_sum(p["a"] + p["b"], p["a"] - p["b"], n)
    if spec.family == "gab":
        a = GR_I * p["a"]
        return _alternating_sum(a + p["b"], a - p["b"], n)
    raise ValueError(f"no closed form for family {spec.family!r}")
