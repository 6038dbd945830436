"""Multiplicative sequences in Chern classes and genus evaluation.

The degree-n piece K_n of the sequence attached to a characteristic
series H is computed through power sums: with s_m the coefficients of
log H and p_m the Newton power sums in c_1..c_m, the generating function
of the K_n is exp(sum_m s_m p_m t^m).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Sequence, Tuple

from .catalog import CharacteristicSeries
from .gaussian import GR_ONE, GR_ZERO, GaussianRational, as_gaussian
from .series import InsufficientOrderError, log_series

Partition = Tuple[int, ...]


def make_partition(parts: Sequence[int]) -> Partition:
    if any(p < 1 for p in parts):
        raise ValueError("partition parts must be positive integers")
    return tuple(sorted(parts, reverse=True))


@lru_cache(maxsize=None)
def partitions(n: int) -> Tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    if n == 0:
        return ((),)
    out: List[Partition] = []

    def rec(remaining: int, max_part: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, max_part), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return tuple(out)


class GradedPoly:
    """A homogeneous polynomial in c_1, c_2, ... indexed by partitions."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Partition, object] = ()):
        self.degree = degree
        clean: Dict[Partition, GaussianRational] = {}
        for key, value in dict(terms).items():
            if sum(key) != degree:
                raise ValueError(f"partition {key} has weight {sum(key)}, expected {degree}")
            v = as_gaussian(value)
            if v:
                clean[make_partition(key)] = v
        self.terms = clean

    def __getitem__(self, key: Sequence[int]) -> GaussianRational:
        return self.terms.get(make_partition(key), GR_ZERO)

    def __add__(self, other: "GradedPoly") -> "GradedPoly":
        if self.degree != other.degree:
            raise ValueError("cannot add graded pieces of different degrees")
        terms = dict(self.terms)
        for key, value in other.terms.items():
            terms[key] = terms.get(key, GR_ZERO) + value
        return GradedPoly(self.degree, terms)

    def __sub__(self, other: "GradedPoly") -> "GradedPoly":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, GradedPoly):
            terms: Dict[Partition, GaussianRational] = {}
            for k1, v1 in self.terms.items():
                for k2, v2 in other.terms.items():
                    key = make_partition(k1 + k2)
                    terms[key] = terms.get(key, GR_ZERO) + v1 * v2
            return GradedPoly(self.degree + other.degree, terms)
        c = as_gaussian(other)
        return GradedPoly(self.degree, {k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def evaluate(self, values: Sequence[object]) -> GaussianRational:
        """Substitute numeric Chern values; values[j-1] is the value of c_j."""
        vals = [as_gaussian(v) for v in values]
        total = GR_ZERO
        for key, coeff in self.terms.items():
            prod = coeff
            for part in key:
                if part > len(vals):
                    raise ValueError(f"no value supplied for c_{part}")
                prod = prod * vals[part - 1]
            total = total + prod
        return total

    def items_sorted(self):
        """Terms in the canonical reverse-lexicographic partition order."""
        return [(lam, self.terms[lam]) for lam in partitions(self.degree) if lam in self.terms]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"GradedPoly({self.degree}, {self.terms!r})"


def chern_class(j: int) -> GradedPoly:
    return GradedPoly(j, {(j,): GR_ONE})


@lru_cache(maxsize=None)
def power_sum(m: int) -> GradedPoly:
    """Newton power sum p_m as a polynomial in c_1..c_m."""
    if m < 1:
        raise ValueError("power sums are defined for m >= 1")
    if m == 1:
        return chern_class(1)
    # p_m = c_1 p_{m-1} - c_2 p_{m-2} + ... + (-1)^(m-1) m c_m
    acc = GradedPoly(m)
    sign = 1
    for i in range(1, m):
        acc = acc + sign * (chern_class(i) * power_sum(m - i))
        sign = -sign
    return acc + sign * m * chern_class(m)


def multiplicative_sequence(H: CharacteristicSeries, n: int) -> GradedPoly:
    """The degree-n polynomial K_n of the sequence generated by H."""
    return k_polynomials(H, n)[n]


def k_polynomials(H: CharacteristicSeries, n: int) -> List[GradedPoly]:
    """K_0..K_n for the multiplicative sequence of H."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if H.order < n:
        raise InsufficientOrderError(f"need order >= {n}, have {H.order}")
    s = log_series(H.series.truncate(n)) if n >= 1 else None
    # A_m = s_m * p_m; K solves K' = (sum m A_m t^(m-1)) K
    a = [None] + [s.coefficient(m) * power_sum(m) for m in range(1, n + 1)] if n else [None]
    ks = [GradedPoly(0, {(): GR_ONE})]
    for m in range(1, n + 1):
        acc = GradedPoly(m)
        for j in range(1, m + 1):
            acc = acc + j * (a[j] * ks[m - j])
        ks.append(Fraction(1, m) * acc)
    return ks


@dataclass(frozen=True)
class ChernData:
    """Chern numbers of a (possibly formal) stably complex manifold."""

    dimension: int
    numbers: Mapping[Partition, GaussianRational]

    def __post_init__(self):
        clean = {}
        for key, value in dict(self.numbers).items():
            if sum(key) != self.dimension:
                raise ValueError(f"Chern number index {key} has weight {sum(key)}, "
                                 f"expected {self.dimension}")
            clean[make_partition(key)] = as_gaussian(value)
        object.__setattr__(self, "numbers", clean)

    def __getitem__(self, key: Sequence[int]) -> GaussianRational:
        return self.numbers.get(make_partition(key), GR_ZERO)


def evaluate_genus(K: GradedPoly, X: ChernData) -> GaussianRational:
    """Pair the multiplicative-sequence polynomial with Chern numbers."""
    if K.degree != X.dimension:
        raise ValueError(f"degree {K.degree} polynomial does not match "
                         f"dimension {X.dimension} Chern data")
    total = GR_ZERO
    for key, coeff in K.terms.items():
        value = X.numbers.get(key)
        if value:
            total = total + coeff * value
    return total


def cpn_chern_numbers(n: int) -> ChernData:
    """Chern numbers of complex projective n-space, from (1 + x)^(n+1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    numbers = {}
    for lam in partitions(n):
        value = 1
        for part in lam:
            value *= math.comb(n + 1, part)
        numbers[lam] = GaussianRational(value)
    return ChernData(n, numbers)


# -- JSON files ------------------------------------------------------------


def chern_data_to_json(X: ChernData) -> dict:
    return {
        "dimension": X.dimension,
        "numbers": [{"partition": list(lam), "value": str(v)}
                    for lam, v in sorted(X.numbers.items(), reverse=True)],
    }


def chern_data_from_json(data: dict) -> ChernData:
    try:
        dimension = int(data["dimension"])
        entries = data["numbers"]
        numbers = {make_partition(e["partition"]): _parse_value(e["value"]) for e in entries}
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed Chern data file: {exc}") from exc
    return ChernData(dimension, numbers)


def graded_poly_to_json(K: GradedPoly) -> dict:
    return {
        "degree": K.degree,
        "terms": [{"partition": list(lam), "value": str(v)} for lam, v in K.items_sorted()],
    }


def _parse_value(text) -> GaussianRational:
    from .gaussian import parse_gaussian

    return parse_gaussian(str(text))
