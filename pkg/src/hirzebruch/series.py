"""Truncated power series and Laurent series over Q(i).

Every series carries the exact coefficient range it is known on.
Arithmetic propagates the jointly-known range pessimistically and never
fabricates tail coefficients; coefficients below the valuation of a
Laurent series are exactly zero by definition.

Values are immutable and all operations are pure functions.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from .gaussian import (
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    Scalar,
    as_gaussian,
    format_gaussian,
)

Coeff = Scalar


class InsufficientOrderError(ValueError):
    """The series does not carry enough known coefficients."""


class ZeroSeriesDivisionError(ZeroDivisionError):
    """Division by a series with no nonzero known coefficient."""


def _coerce_coeffs(coeffs: Iterable[Coeff]) -> Tuple[GaussianRational, ...]:
    return tuple(as_gaussian(c) for c in coeffs)


class PowerSeries:
    """A power series known exactly on degrees 0..order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff]):
        cs = _coerce_coeffs(coeffs)
        if not cs:
            raise ValueError("a power series needs at least the constant term")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, value: Coeff, order: int = 0) -> "PowerSeries":
        c = as_gaussian(value)
        return cls([c] + [GR_ZERO] * order)

    @classmethod
    def monomial(cls, degree: int, order: int, value: Coeff = 1) -> "PowerSeries":
        if not 0 <= degree <= order:
            raise ValueError("monomial degree must lie in [0, order]")
        coeffs = [GR_ZERO] * (order + 1)
        coeffs[degree] = as_gaussian(value)
        return cls(coeffs)

    def coefficient(self, k: int) -> GaussianRational:
        if k < 0:
            return GR_ZERO
        if k > self.order:
            raise InsufficientOrderError(f"coefficient {k} beyond known order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise InsufficientOrderError(f"cannot extend order {self.order} to {order}")
        if order < 0:
            raise ValueError("power series order must be nonnegative")
        return PowerSeries(self.coeffs[: order + 1])

    def padded(self, order: int) -> "PowerSeries":
        """Declare the tail zero up to `order`; only for exact polynomials."""
        if order <= self.order:
            return self.truncate(order)
        return PowerSeries(self.coeffs + (GR_ZERO,) * (order - self.order))

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: Union["PowerSeries", Coeff]) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            return PowerSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])
        c = as_gaussian(other)
        return PowerSeries((self.coeffs[0] + c,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self.coeffs])

    def __sub__(self, other: Union["PowerSeries", Coeff]) -> "PowerSeries":
        return self + (-other if isinstance(other, PowerSeries) else -as_gaussian(other))

    def __rsub__(self, other: Coeff) -> "PowerSeries":
        return (-self) + as_gaussian(other)

    def __mul__(self, other: Union["PowerSeries", Coeff]) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            a, b = self.coeffs, other.coeffs
            out: List[GaussianRational] = []
            for k in range(n + 1):
                acc = GR_ZERO
                for i in range(k + 1):
                    ai = a[i]
                    bj = b[k - i]
                    if ai and bj:
                        acc = acc + ai * bj
                out.append(acc)
            return PowerSeries(out)
        c = as_gaussian(other)
        return PowerSeries([c * x for x in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other: Union["PowerSeries", Coeff]) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return self * other.inverse()
        c = as_gaussian(other)
        return PowerSeries([x / c for x in self.coeffs])

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        a = self.coeffs
        if not a[0]:
            raise ZeroSeriesDivisionError("inverse of a series with zero constant term")
        inv0 = GR_ONE / a[0]
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = GR_ZERO
            for j in range(1, k + 1):
                if a[j]:
                    acc = acc + a[j] * out[k - j]
            out.append(-inv0 * acc)
        return PowerSeries(out)

    # -- composition family --------------------------------------------------

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """self(inner(t)); inner must have zero constant term."""
        if inner.coeffs[0]:
            raise ValueError("compose requires the inner series to vanish at 0")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        result = PowerSeries.constant(0, n)
        for c in reversed(self.coeffs[: n + 1]):
            result = result * inner + c
        return result

    def reversion(self) -> "PowerSeries":
        """Compositional inverse g with self(g(t)) = t up to the known order."""
        f = self.coeffs
        if f[0]:
            raise ValueError("reversion requires zero constant term")
        if len(f) < 2 or not f[1]:
            raise ValueError("reversion requires an invertible linear coefficient")
        n = self.order
        # powers[j] = self**j truncated to order n
        powers: List[PowerSeries] = [PowerSeries.constant(1, n), self]
        for j in range(2, n + 1):
            powers.append(powers[-1] * self)
        g = [GR_ZERO, GR_ONE / f[1]]
        for k in range(2, n + 1):
            acc = GR_ZERO
            for j in range(1, k):
                acc = acc + g[j] * powers[j].coeffs[k]
            g.append(-acc / powers[k].coeffs[k])
        return PowerSeries(g)

    def derivative(self) -> "PowerSeries":
        if self.order == 0:
            raise InsufficientOrderError("derivative of an order-0 series has no known coefficients")
        return PowerSeries([(k + 1) * self.coeffs[k + 1] for k in range(self.order)])

    def scale_argument(self, w: Coeff) -> "PowerSeries":
        w = as_gaussian(w)
        power = GR_ONE
        out = []
        for c in self.coeffs:
            out.append(c * power)
            power = power * w
        return PowerSeries(out)

    def as_laurent(self) -> "LaurentSeries":
        return LaurentSeries(0, self.coeffs)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        """Coefficientwise equality on the intersection of known ranges."""
        if isinstance(other, LaurentSeries):
            return self.as_laurent() == other
        if not isinstance(other, PowerSeries):
            return self.as_laurent().__eq__(other)
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"PowerSeries({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return _format_terms(0, self.coeffs)


class LaurentSeries:
    """A Laurent series known exactly on degrees valuation..order.

    Normalized so the leading known coefficient is nonzero; a series that
    is zero on its whole known range collapses to a single zero
    coefficient at its order, preserving the knowledge horizon.
    """

    __slots__ = ("valuation", "coeffs")

    def __init__(self, valuation: int, coeffs: Iterable[Coeff]):
        cs = list(_coerce_coeffs(coeffs))
        if not cs:
            raise ValueError("a Laurent series needs at least one known coefficient")
        while len(cs) > 1 and not cs[0]:
            cs.pop(0)
            valuation += 1
        self.valuation = valuation
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return self.valuation + len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and not self.coeffs[0]

    def coefficient(self, k: int) -> GaussianRational:
        if k < self.valuation:
            return GR_ZERO
        if k > self.order:
            raise InsufficientOrderError(f"coefficient {k} beyond known order {self.order}")
        return self.coeffs[k - self.valuation]

    def truncate(self, order: int) -> "LaurentSeries":
        if order > self.order:
            raise InsufficientOrderError(f"cannot extend order {self.order} to {order}")
        if order < self.valuation:
            return LaurentSeries(order, [GR_ZERO])
        return LaurentSeries(self.valuation, self.coeffs[: order - self.valuation + 1])

    def power_part(self) -> PowerSeries:
        """View as a power series; fails on a nonzero principal part."""
        if self.valuation < 0 and not self.is_zero:
            raise ValueError("Laurent series has a nonzero principal part")
        if self.order < 0:
            raise InsufficientOrderError("no nonnegative degrees are known")
        pad = (GR_ZERO,) * max(self.valuation, 0)
        start = max(-self.valuation, 0)
        return PowerSeries(pad + self.coeffs[start:])

    # -- ring structure ----------------------------------------------------

    def _aligned(self, other: "LaurentSeries"):
        val = min(self.valuation, other.valuation)
        order = min(self.order, other.order)
        return val, order

    def __add__(self, other: Union["LaurentSeries", Coeff]) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return self + LaurentSeries(0, [as_gaussian(other)]).padded_constant(self.order)
        val, order = self._aligned(other)
        if order < val:
            # one summand is known-zero below the other's valuation only
            return LaurentSeries(order, [GR_ZERO])
        out = [self.coefficient_or_zero(k) + other.coefficient_or_zero(k) for k in range(val, order + 1)]
        return LaurentSeries(val, out)

    __radd__ = __add__

    def padded_constant(self, order: int) -> "LaurentSeries":
        """Extend an exact constant/polynomial with known zeros up to `order`."""
        if order <= self.order:
            return self
        return LaurentSeries(self.valuation, self.coeffs + (GR_ZERO,) * (order - self.order))

    def coefficient_or_zero(self, k: int) -> GaussianRational:
        if k < self.valuation or k > self.order:
            return GR_ZERO
        return self.coeffs[k - self.valuation]

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.valuation, [-c for c in self.coeffs])

    def __sub__(self, other: Union["LaurentSeries", Coeff]) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            return self + (-other)
        return self + (-as_gaussian(other))

    def __rsub__(self, other: Coeff) -> "LaurentSeries":
        return (-self) + as_gaussian(other)

    def __mul__(self, other: Union["LaurentSeries", Coeff]) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            c = as_gaussian(other)
            return LaurentSeries(self.valuation, [c * x for x in self.coeffs])
        val = self.valuation + other.valuation
        order = min(self.order + other.valuation, other.order + self.valuation)
        a, b = self.coeffs, other.coeffs
        out: List[GaussianRational] = []
        for k in range(order - val + 1):
            acc = GR_ZERO
            lo = max(0, k - len(b) + 1)
            hi = min(k, len(a) - 1)
            for i in range(lo, hi + 1):
                ai = a[i]
                bj = b[k - i]
                if ai and bj:
                    acc = acc + ai * bj
            out.append(acc)
        return LaurentSeries(val, out)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["LaurentSeries", Coeff]) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            c = as_gaussian(other)
            return LaurentSeries(self.valuation, [x / c for x in self.coeffs])
        if other.is_zero:
            raise ZeroSeriesDivisionError("division by a series with no nonzero known coefficient")
        unit = PowerSeries(other.coeffs).inverse()
        return self * LaurentSeries(-other.valuation, unit.coeffs)

    def derivative(self) -> "LaurentSeries":
        out = [as_gaussian(k) * self.coeffs[k - self.valuation]
               for k in range(self.valuation, self.order + 1)]
        return LaurentSeries(self.valuation - 1, out)

    def scale_argument(self, w: Coeff) -> "LaurentSeries":
        w = as_gaussian(w)
        if not w:
            if self.valuation < 0 and not self.is_zero:
                raise ValueError("cannot substitute t -> 0 into a series with a pole")
            out = [self.coefficient_or_zero(k) if k == 0 else GR_ZERO
                   for k in range(min(self.valuation, 0), self.order + 1)]
            return LaurentSeries(min(self.valuation, 0), out)
        power = w ** self.valuation
        out = []
        for c in self.coeffs:
            out.append(c * power)
            power = power * w
        return LaurentSeries(self.valuation, out)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        """Coefficientwise equality on the intersection of known ranges."""
        if isinstance(other, PowerSeries):
            other = other.as_laurent()
        if not isinstance(other, LaurentSeries):
            try:
                co = as_gaussian(other)
            except TypeError:
                return NotImplemented
            other = LaurentSeries(0, [co]).padded_constant(max(self.order, 0))
        order = min(self.order, other.order)
        lo = min(self.valuation, other.valuation)
        return all(self.coefficient_or_zero(k) == other.coefficient_or_zero(k)
                   for k in range(lo, order + 1))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"LaurentSeries({self.valuation}, {list(self.coeffs)!r})"

    def __str__(self) -> str:
        return _format_terms(self.valuation, self.coeffs)


# -- transcendental constructors ------------------------------------------


def exp_series(f: PowerSeries) -> PowerSeries:
    """exp of a series with zero constant term."""
    if f.coeffs[0]:
        raise ValueError("exp_series requires zero constant term")
    n = f.order
    out = [GR_ONE]
    for k in range(1, n + 1):
        acc = GR_ZERO
        for j in range(1, k + 1):
            if f.coeffs[j]:
                acc = acc + as_gaussian(j) * f.coeffs[j] * out[k - j]
        out.append(acc / k)
    return PowerSeries(out)


def log_series(g: PowerSeries) -> PowerSeries:
    """log of a series with constant term 1."""
    if g.coeffs[0] != GR_ONE:
        raise ValueError("log_series requires constant term 1")
    n = g.order
    out = [GR_ZERO]
    for k in range(1, n + 1):
        acc = as_gaussian(k) * g.coeffs[k]
        for j in range(1, k):
            if g.coeffs[k - j]:
                acc = acc - as_gaussian(j) * out[j] * g.coeffs[k - j]
        out.append(acc / k)
    return PowerSeries(out)


# -- text rendering ----------------------------------------------------------


def _format_terms(valuation: int, coeffs: Sequence[GaussianRational]) -> str:
    parts = []
    for k, c in enumerate(coeffs, start=valuation):
        if not c:
            continue
        cs = format_gaussian(c)
        if ("+" in cs[1:]) or ("-" in cs[1:]):
            cs = f"({cs})"
        if k == 0:
            parts.append(cs)
        else:
            var = "t" if k == 1 else f"t^{k}"
            parts.append(var if cs == "1" else f"-{var}" if cs == "-1" else f"{cs}*{var}")
    if not parts:
        return "0"
    text = parts[0]
    for p in parts[1:]:
        text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return text


# -- JSON coefficient files ---------------------------------------------------


def series_to_json(f: Union[PowerSeries, LaurentSeries]) -> dict:
    if isinstance(f, PowerSeries):
        f = f.as_laurent()
    return {
        "valuation": f.valuation,
        "order": f.order,
        "coeffs": [{"re": str(c.re), "im": str(c.im)} for c in f.coeffs],
    }


def series_from_json(data: dict) -> LaurentSeries:
    try:
        valuation = int(data["valuation"])
        order = int(data["order"])
        raw = data["coeffs"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed series file: {exc}") from exc
    if len(raw) != order - valuation + 1:
        raise ValueError("series file: coefficient count does not match valuation/order")
    coeffs = []
    for entry in raw:
        try:
            coeffs.append(GaussianRational(Fraction(entry["re"]), Fraction(entry["im"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed series coefficient {entry!r}") from exc
    return LaurentSeries(valuation, coeffs)
