import random
from fractions import Fraction

import pytest

from hirzebruch.catalog import CharacteristicSeries, SeriesSpec, construct, h_n, parse_spec
from hirzebruch.gaussian import GR_I, GaussianRational
from hirzebruch.localization import (
    FixedPoint,
    FixedPointSet,
    _localize_generic,
    ahbr_value,
    cpn_fixed_points,
    equivariant_genus,
    fixed_points_from_json,
    fixed_points_to_json,
    sign_counts,
)
from hirzebruch.series import InsufficientOrderError, LaurentSeries, PowerSeries


def rand_fraction(rng):
    return Fraction(rng.randint(-6, 6), rng.randint(1, 6))


def rand_series(rng, order):
    return CharacteristicSeries(PowerSeries([1] + [rand_fraction(rng) for _ in range(order)]))


# -- fixed-point data ---------------------------------------------------------

def test_cpn_fixed_points_cp1():
    fps = cpn_fixed_points([1, 0])
    assert fps.points == (FixedPoint((-1,), 1), FixedPoint((1,), 1))


def test_cpn_fixed_points_middle_weights():
    fps = cpn_fixed_points([0, 1, 2])
    assert set(fps.points[1].weights) == {-1, 1}


def test_cpn_fixed_points_rejects_repeats():
    with pytest.raises(ValueError):
        cpn_fixed_points([0, 0, 1])


def test_fixed_point_validation():
    with pytest.raises(ValueError):
        FixedPoint((0, 1), 1)
    with pytest.raises(ValueError):
        FixedPoint((1,), 2)
    with pytest.raises(ValueError):
        FixedPointSet((FixedPoint((1,), 1), FixedPoint((1, 2), 1)))


def test_sign_counts():
    assert sign_counts(FixedPoint((-1, 1))) == (1, 1)
    assert sign_counts(FixedPoint((1, 2))) == (2, 0)
    assert sign_counts(FixedPoint((-2, -1))) == (0, 2)


# -- signed Atiyah-Hirzebruch sum -----------------------------------------------

def test_ahbr_cp2_closed_form():
    fps = cpn_fixed_points([0, 1, 2])
    x, y = GaussianRational(2), GaussianRational(3)
    # x^2 - x*y + y^2
    assert ahbr_value(x, y, fps) == 7


def test_ahbr_zero_arguments():
    fps = cpn_fixed_points([0, 1, 2])
    assert ahbr_value(GaussianRational(0), GaussianRational(0), fps) == 0


def test_ahbr_opposite_signs_cancel():
    points = (FixedPoint((1, -2), 1), FixedPoint((1, -2), -1))
    fps = FixedPointSet(points)
    assert ahbr_value(GaussianRational(5), GaussianRational(7), fps) == 0


# -- equivariant genus ------------------------------------------------------------

def test_todd_cp1_is_constant_one():
    H = construct(parse_spec("todd"), 10)
    s = equivariant_genus(H, cpn_fixed_points([1, 0]), 8)
    assert s == 1
    assert s.valuation == 0


def test_single_point_with_negative_sign():
    a = Fraction(3, 4)
    H = construct(SeriesSpec("euler", {"a": GaussianRational(a)}), 6)
    fps = FixedPointSet((FixedPoint((1,), -1),))
    s = equivariant_genus(H, fps, 4)
    assert s == LaurentSeries(-1, [-1, -a, 0, 0, 0, 0])


def test_prop21_random_series():
    rng = random.Random(17)
    H = rand_series(rng, 12)
    s = equivariant_genus(H, cpn_fixed_points([0, 1, 3]), 8)
    assert s.valuation >= 0
    assert s.coefficient_or_zero(0) == h_n(H, 2)


def test_insufficient_order_raises():
    H = construct(parse_spec("todd"), 6)
    with pytest.raises(InsufficientOrderError):
        equivariant_genus(H, cpn_fixed_points([0, 1, 3]), 5)


def test_translation_invariance():
    rng = random.Random(19)
    H = rand_series(rng, 10)
    a = equivariant_genus(H, cpn_fixed_points([0, 2, 5]), 6)
    b = equivariant_genus(H, cpn_fixed_points([7, 9, 12]), 6)
    assert a == b


def test_scaling_covariance():
    rng = random.Random(23)
    H = rand_series(rng, 12)
    k = 3
    scaled_weights = equivariant_genus(H, cpn_fixed_points([0, k, 2 * k]), 6)
    scaled_argument = equivariant_genus(H, cpn_fixed_points([0, 1, 2]), 6).scale_argument(k)
    assert scaled_weights == scaled_argument


def test_rigid_txy_equals_signed_sum():
    x, y = GaussianRational(Fraction(1, 2)), GaussianRational(-3)
    H = construct(SeriesSpec("txy", {"x": x, "y": y}), 12)
    for weights in ([0, 1, 2], [0, 1, 3], [-2, 0, 1, 5]):
        fps = cpn_fixed_points(weights)
        s = equivariant_genus(H, fps, 12 - fps.n)
        assert s == ahbr_value(x, y, fps)


def test_fast_and_generic_paths_agree():
    rng = random.Random(29)
    H = rand_series(rng, 10)
    fps = cpn_fixed_points([-2, 1, 4])
    fast = equivariant_genus(H, fps, 6)
    generic = _localize_generic(H.series.coeffs[:10], fps, 6)
    assert fast == generic and fast.valuation == generic.valuation


def test_complex_series_uses_generic_path():
    coeffs = [GaussianRational(1), GR_I, GaussianRational(0, Fraction(1, 2))] + [GaussianRational(0)] * 6
    H = CharacteristicSeries(PowerSeries(coeffs))
    s = equivariant_genus(H, cpn_fixed_points([1, 0]), 4)
    assert s.coefficient_or_zero(0) == h_n(H, 1)
    assert s.valuation >= 0


# -- JSON -------------------------------------------------------------------------

def test_fixed_point_json_roundtrip():
    fps = FixedPointSet((FixedPoint((1, -2), 1), FixedPoint((3, 4), -1)))
    assert fixed_points_from_json(fixed_points_to_json(fps)) == fps


def test_fixed_point_json_defaults_sign():
    fps = fixed_points_from_json({"points": [{"weights": [2, -1]}]})
    assert fps.points[0].sign == 1


def test_fixed_point_json_rejects_garbage():
    with pytest.raises(ValueError):
        fixed_points_from_json({"points": [{"weights": [0]}]})
    with pytest.raises(ValueError):
        fixed_points_from_json({})
