"""Algebraic rigidity: sampling checks, the order-2 functional equation,
ODE reconstruction from (r1, h2), and the generalized-Todd classification.

A characteristic series is classified GT exactly when it coincides, to its
full known order, with the unique Laurent solution f = 1/t + r1 + ... of
f' = -f^2 + h1*f + h2 - h1^2 determined by its own r1 and h2.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .catalog import CharacteristicSeries, SeriesSpec, format_spec, h_n
from .gaussian import GR_ZERO, GaussianRational, as_gaussian, format_gaussian
from .localization import cpn_fixed_points, equivariant_genus
from .series import InsufficientOrderError, LaurentSeries, PowerSeries

WeightTuple = Tuple[int, ...]


class NotEvenSeriesError(ValueError):
    """Raised by the oriented classifier on a series with odd terms."""

    def __init__(self, degree: int, coefficient: GaussianRational):
        self.degree = degree
        self.coefficient = coefficient
        super().__init__(
            f"series is not even: degree {degree} coefficient is "
            f"{format_gaussian(coefficient)}")


def ar1_residual(H: CharacteristicSeries, order: int) -> PowerSeries:
    """f(t) + f(-t) - h1 with f = H(t)/t; zero iff H - r1*t is even."""
    if H.order < order:
        raise InsufficientOrderError(f"need order >= {order}, have {H.order}")
    f = LaurentSeries(-1, H.series.coeffs)
    residual = f + f.scale_argument(-1) - 2 * H.r(1)
    return residual.truncate(min(order, H.order - 1)).power_part()


def lemma41_residual(H: CharacteristicSeries, order: int) -> LaurentSeries:
    """F(-t)^2 + h1*F(t) + F'(t) - h2 with F = H(t)/t.

    Identically zero on the known range exactly when the order-2 rigidity
    functional equation holds; its value at distinct weights also covers
    the degenerate CP^2 action with a repeated weight.
    """
    if H.order < order + 2:
        raise InsufficientOrderError(f"need order >= {order + 2}, have {H.order}")
    f = LaurentSeries(-1, H.series.coeffs)
    fm = f.scale_argument(-1)
    h1 = 2 * H.r(1)
    h2 = h_n(H, 2)
    residual = fm * fm + h1 * f + f.derivative() - h2
    return residual.truncate(order)


def reconstruct(r1: GaussianRational, h2: GaussianRational, order: int) -> PowerSeries:
    """The unique characteristic series with the given r1 and h2 that
    satisfies the rigidity ODE, expanded to `order`.

    Writing f = 1/t + g with g = r1 + r2*t + ..., matching t^k coefficients
    of f' = -f^2 + h1*f + h2 - h1^2 gives
    (k+3)*g[k+1] = -sum_i g[i]*g[k-i] + h1*g[k] + (h2 - h1^2)*[k == 0].
    """
    if order < 2:
        raise ValueError("reconstruction order must be at least 2")
    r1 = as_gaussian(r1)
    h2 = as_gaussian(h2)
    h1 = 2 * r1
    g: List[GaussianRational] = [r1]
    for k in range(order - 1):
        acc = GR_ZERO
        for i in range(k + 1):
            if g[i] and g[k - i]:
                acc = acc + g[i] * g[k - i]
        rhs = h1 * g[k] - acc
        if k == 0:
            rhs = rhs + h2 - h1 * h1
        g.append(rhs / (k + 3))
    return PowerSeries([as_gaussian(1)] + g)


@dataclass
class GTReport:
    """Verdict of the generalized-Todd classification."""

    is_gt: bool
    case: str  # "D", "E", or "NotGT"
    r1: GaussianRational
    h2: GaussianRational
    d: GaussianRational
    order: int
    sqrt_d: Optional[GaussianRational] = None
    closed_form: Optional[SeriesSpec] = None
    gab_form: Optional[SeriesSpec] = None
    witness: Optional[int] = None
    oriented: bool = False
    coth_a: Optional[GaussianRational] = None
    cot_a: Optional[GaussianRational] = None

    def to_json(self) -> dict:
        data = {
            "is_gt": self.is_gt,
            "case": self.case,
            "r1": format_gaussian(self.r1),
            "h2": format_gaussian(self.h2),
            "d": format_gaussian(self.d),
            "order": self.order,
        }
        if self.sqrt_d is not None:
            data["sqrt_d"] = format_gaussian(self.sqrt_d)
        if self.closed_form is not None:
            data["closed_form"] = format_spec(self.closed_form)
        if self.gab_form is not None:
            data["gab_form"] = format_spec(self.gab_form)
        if self.witness is not None:
            data["witness_degree"] = self.witness
        if self.oriented:
            data["oriented"] = True
            if self.coth_a is not None:
                data["coth_a"] = format_gaussian(self.coth_a)
            if self.cot_a is not None:
                data["cot_a"] = format_gaussian(self.cot_a)
        return data


def classify(H: CharacteristicSeries) -> GTReport:
    """Decide GT membership by comparing H with its ODE reconstruction.

    The verdict uses the full known order of H; d = h2 - 3*r1^2
    discriminates the exponential (E, d = 0) and coth/cot (D) cases.
    """
    if H.order < 4:
        raise InsufficientOrderError("classification needs order >= 4")
    r1 = H.r(1)
    h2 = h_n(H, 2)
    d = h2 - 3 * r1 * r1
    rebuilt = reconstruct(r1, h2, H.order)
    for k in range(H.order + 1):
        if H.series.coeffs[k] != rebuilt.coeffs[k]:
            return GTReport(False, "NotGT", r1, h2, d, H.order, witness=k)
    if not d:
        return GTReport(True, "E", r1, h2, d, H.order, sqrt_d=GR_ZERO,
                        closed_form=SeriesSpec("euler", {"a": r1}))
    sqrt_d = d.sqrt()
    closed = SeriesSpec("dab", {"a": sqrt_d, "b": r1}) if sqrt_d is not None else None
    sqrt_neg = (-d).sqrt()
    gab = SeriesSpec("gab", {"a": sqrt_neg, "b": r1}) if sqrt_neg is not None else None
    return GTReport(True, "D", r1, h2, d, H.order,
                    sqrt_d=sqrt_d, closed_form=closed, gab_form=gab)


def classify_oriented(H: CharacteristicSeries) -> GTReport:
    """Classification for oriented genera: requires an even series."""
    for k in range(1, H.order + 1, 2):
        if H.series.coeffs[k]:
            raise NotEvenSeriesError(k, H.series.coeffs[k])
    report = classify(H)
    report.oriented = True
    if report.is_gt:
        assert not report.r1
        report.coth_a = report.d.sqrt()
        report.cot_a = (-report.d).sqrt()
    return report


# -- AR^n sampling ---------------------------------------------------------

# Mixed-sign, magnitude-gapped weight tuples to defeat accidental
# cancellation on the small symmetric base set.
_EXTRA_POOL = (0, 1, 17, -9, 5, -23, 2, 11)


@dataclass
class ARReport:
    """Outcome of an algebraic-rigidity sampling run.

    Constancy is certified only up to the tested series order.
    """

    max_n: int
    order: int
    tuples_checked: List[WeightTuple]
    passed: bool
    witness: Optional[Tuple[WeightTuple, int, GaussianRational]] = None

    def to_json(self) -> dict:
        data = {
            "max_n": self.max_n,
            "order": self.order,
            "tuples_checked": len(self.tuples_checked),
            "passed": self.passed,
        }
        if self.witness is not None:
            weights, degree, coeff = self.witness
            data["witness"] = {
                "weights": list(weights),
                "degree": degree,
                "coefficient": format_gaussian(coeff),
            }
        return data


def _base_tuples(m: int) -> List[WeightTuple]:
    from itertools import combinations

    tuples: List[WeightTuple] = []
    if m <= 2:
        tuples.extend(combinations(range(-4, 5), m + 1))
    tuples.append(_EXTRA_POOL[: m + 1])
    tuples.append(tuple(-w for w in _EXTRA_POOL[1: m + 2]))
    return tuples


def _nonconstant_witness(s: LaurentSeries) -> Optional[Tuple[int, GaussianRational]]:
    if s.valuation < 0 and not s.is_zero:
        return s.valuation, s.coeffs[0]
    for k in range(1, s.order + 1):
        c = s.coefficient_or_zero(k)
        if c:
            return k, c
    return None


def ar_check(H: CharacteristicSeries, max_n: int, order: int = 12,
             trials: int = 20, seed: int = 0) -> ARReport:
    """Sample the localization sum over weight tuples and test constancy.

    For each m <= max_n the sweep takes a deterministic base set (all
    distinct tuples in [-4, 4] when m <= 2, plus fixed gapped tuples)
    and `trials` seeded-random distinct tuples in [-20, 20]; it stops at
    the first nonconstant result.
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if H.order < order + max_n:
        raise InsufficientOrderError(
            f"ar_check at order {order} with max_n {max_n} needs H to order "
            f"{order + max_n}, have {H.order}")
    rng = random.Random(seed)
    checked: List[WeightTuple] = []
    for m in range(1, max_n + 1):
        tuples = _base_tuples(m)
        universe = range(-20, 21)
        for _ in range(trials):
            tuples.append(tuple(rng.sample(universe, m + 1)))
        for weights in tuples:
            checked.append(weights)
            s = equivariant_genus(H, cpn_fixed_points(weights), order)
            bad = _nonconstant_witness(s)
            if bad is not None:
                degree, coeff = bad
                return ARReport(max_n, order, checked, False,
                                witness=(weights, degree, coeff))
    return ARReport(max_n, order, checked, True)
