"""Equivariant genera of circle actions by fixed-point localization.

The localization sum runs over isolated fixed points; each point
contributes sign * prod_j F_H(w_j t) with F_H = H(t)/t, taken over all
weights of the point's tangent representation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from .catalog import CharacteristicSeries
from .gaussian import GR_ZERO, GaussianRational, as_gaussian
from .series import InsufficientOrderError, LaurentSeries


@dataclass(frozen=True)
class FixedPoint:
    """An isolated fixed point: tangent weights plus a Buchstaber-Ray sign."""

    weights: Tuple[int, ...]
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights:
            raise ValueError("a fixed point needs at least one weight")
        if any(w == 0 for w in self.weights):
            raise ValueError("fixed-point weights must be nonzero")
        if self.sign not in (1, -1):
            raise ValueError("fixed-point sign must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class FixedPointSet:
    """A nonempty list of fixed points with a uniform number of weights."""

    points: Tuple[FixedPoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if not self.points:
            raise ValueError("a fixed-point set must be nonempty")
        n = self.points[0].n
        if any(p.n != n for p in self.points):
            raise ValueError("all fixed points must have the same number of weights")

    @property
    def n(self) -> int:
        return self.points[0].n


def cpn_fixed_points(w: Sequence[int]) -> FixedPointSet:
    """Fixed points of the linear circle action on CP^n with weights w.

    Point i has tangent weights {w_k - w_i : k != i} and sign +1.
    """
    w = [int(x) for x in w]
    if len(w) < 2:
        raise ValueError("need at least two weights")
    if len(set(w)) != len(w):
        raise ValueError(f"weights must be pairwise distinct, got {w}; "
                         "repeated weights give non-isolated fixed sets")
    points = []
    for i, wi in enumerate(w):
        points.append(FixedPoint(tuple(wk - wi for k, wk in enumerate(w) if k != i), 1))
    return FixedPointSet(tuple(points))


def sign_counts(p: FixedPoint) -> Tuple[int, int]:
    """Counts of strictly positive and strictly negative weights."""
    plus = sum(1 for w in p.weights if w > 0)
    return plus, len(p.weights) - plus


def ahbr_value(x: GaussianRational, y: GaussianRational,
               fps: FixedPointSet) -> GaussianRational:
    """The signed fixed-point sum: sum_i sign_i * x^(s_i+) * (-y)^(s_i-)."""
    x = as_gaussian(x)
    y = as_gaussian(y)
    total = GR_ZERO
    for p in fps.points:
        plus, minus = sign_counts(p)
        total = total + p.sign * x ** plus * (-y) ** minus
    return total


def equivariant_genus(H: CharacteristicSeries, fps: FixedPointSet,
                      order: int) -> LaurentSeries:
    """The localization sum as an exact Laurent series, known up to `order`.

    Each factor F_H(w*t) shifts the valuation by -1, so H must be known
    to order `order + n` where n is the number of weights per point.
    """
    n = fps.n
    need = order + n
    if H.order < need:
        raise InsufficientOrderError(
            f"equivariant genus at order {order} with {n} weights needs "
            f"H to order {need}, have {H.order}")
    coeffs = H.series.coeffs[: need + 1]
    if all(c.is_real for c in coeffs):
        return _localize_rational([c.re for c in coeffs], fps, order)
    return _localize_generic(coeffs, fps, order)


def _localize_generic(coeffs, fps: FixedPointSet, order: int) -> LaurentSeries:
    f = LaurentSeries(-1, coeffs)
    total = LaurentSeries(order, [GR_ZERO])
    for p in fps.points:
        prod = None
        for w in p.weights:
            factor = f.scale_argument(w)
            prod = factor if prod is None else prod * factor
        total = total + p.sign * prod
    return total.truncate(order)


@lru_cache(maxsize=64)
def _integerize(fracs: Tuple[Fraction, ...]) -> Tuple[int, Tuple[int, ...]]:
    den = math.lcm(*(f.denominator for f in fracs))
    return den, tuple(int(f * den) for f in fracs)


@lru_cache(maxsize=4096)
def _point_product(nums: Tuple[int, ...], weights: Tuple[int, ...],
                   size: int) -> Tuple[int, ...]:
    """Truncated product of the integer factor sequences nums[k]*w^k.

    Symmetric in the weights; callers pass them sorted so repeated
    tangent patterns across weight tuples hit the cache.
    """
    conv = None
    for w in weights:
        power = 1
        seq = []
        for k in range(size):
            seq.append(nums[k] * power)
            power *= w
        conv = seq if conv is None else _convolve_truncated(conv, seq, size)
    return tuple(conv)


def _localize_rational(fracs: List[Fraction], fps: FixedPointSet,
                       order: int) -> LaurentSeries:
    """Integer fast path for real-coefficient series; exact."""
    n = fps.n
    den, nums = _integerize(tuple(fracs))
    size = len(nums)  # degrees -n .. order, shifted by n
    base = den ** n
    wprods = []
    for p in fps.points:
        wprod = 1
        for w in p.weights:
            wprod *= w
        wprods.append(wprod)
    shared = math.lcm(*(abs(w) for w in wprods))
    totals = [0] * size
    for p, wprod in zip(fps.points, wprods):
        # w * F_H(w t) has integer numerators nums[k] * w^k at degree k - 1
        conv = _point_product(nums, tuple(sorted(p.weights)), size)
        scale = p.sign * (shared // wprod)
        for k in range(size):
            if conv[k]:
                totals[k] += conv[k] * scale
    den_total = base * shared
    return LaurentSeries(-n, [GaussianRational(Fraction(q, den_total)) for q in totals])


def _convolve_truncated(a: List[int], b: List[int], size: int) -> List[int]:
    out = [0] * size
    for i, ai in enumerate(a):
        if not ai:
            continue
        top = size - i
        for j in range(top):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


# -- JSON files ----------------------------------------------------------------


def fixed_points_to_json(fps: FixedPointSet) -> dict:
    return {"points": [{"weights": list(p.weights), "sign": p.sign} for p in fps.points]}


def fixed_points_from_json(data: dict) -> FixedPointSet:
    try:
        points = tuple(FixedPoint(tuple(e["weights"]), int(e.get("sign", 1)))
                       for e in data["points"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed fixed-point file: {exc}") from exc
    return FixedPointSet(points)
