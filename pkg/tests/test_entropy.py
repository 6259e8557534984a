import cmath
import math

import mpmath
import numpy as np
import pytest

from entropic_cover.cover import CoverPoint, PolyPath, Side, circle_loop, continue_point
from entropic_cover.entropy import (
    continue_entropy,
    entropy_cover,
    entropy_cover_many,
    entropy_principal,
    entropy_real_regulator,
    log_branches,
)
from entropic_cover.errors import DomainError, StepResolutionError
from entropic_cover.rng import Xoshiro256
from test_cover import random_loop

mpmath.mp.dps = 30


def mp_entropy(z, p=0, q=0):
    z = mpmath.mpc(z)
    lz = mpmath.log(z) + mpmath.j * mpmath.pi * p
    lw = mpmath.log(1 - z) - mpmath.j * mpmath.pi * q
    return complex(-z * lz - (1 - z) * lw)


def test_half_is_log_two():
    assert entropy_principal(0.5) == pytest.approx(math.log(2))
    assert entropy_cover(CoverPoint.at(0.5)) == pytest.approx(math.log(2))


def test_principal_against_mpmath():
    rng = Xoshiro256(1)
    for _ in range(200):
        z = complex(rng.uniform(-4, 5), rng.uniform(-3, 3))
        assert abs(entropy_principal(z) - mp_entropy(z)) < 1e-12 * (1 + abs(z))


@pytest.mark.parametrize("p, q", [(0, 0), (2, 0), (-4, 6), (8, -8)])
def test_cover_value_against_mpmath(p, q):
    z = complex(0.3, -0.7)
    assert abs(entropy_cover(CoverPoint.at(z, p, q)) - mp_entropy(z, p, q)) < 1e-12


def test_deck_shifts_are_linear():
    z = complex(-0.4, 1.3)
    base = entropy_cover(CoverPoint.at(z))
    assert entropy_cover(CoverPoint.at(z, 2, 0)) - base == pytest.approx(-2j * math.pi * z)
    assert entropy_cover(CoverPoint.at(z, 0, 2)) - base == pytest.approx(2j * math.pi * (1 - z))


@pytest.mark.parametrize("x", [-3.0, -0.5, 1.5, 4.0])
def test_value_is_continuous_across_the_gluing(x):
    above = CoverPoint.at(x, 0, 0, "above")
    below = CoverPoint.at(x, 2, 0, "below") if x < 0 else CoverPoint.at(x, 0, 2, "below")
    assert entropy_cover(above) == pytest.approx(entropy_cover(below), abs=1e-12)
    # and the limit from inside each half-plane agrees
    eps = 1e-9
    assert entropy_cover(CoverPoint.at(complex(x, eps))) == pytest.approx(entropy_cover(above), abs=1e-7)


def test_log_branches_on_slit():
    lz, lw = log_branches(CoverPoint.at(-2.0, 2, 0, "below"))
    assert lz == pytest.approx(complex(math.log(2), -math.pi + 2 * math.pi))
    assert lw == pytest.approx(math.log(3))


def test_many_matches_scalar(backend):
    rng = Xoshiro256(2)
    zs = [complex(rng.uniform(-3, 4), rng.uniform(-2, 2)) for _ in range(50)]
    ps = [rng.even(-6, 6) for _ in zs]
    qs = [rng.even(-6, 6) for _ in zs]
    got = entropy_cover_many(zs, ps, qs)
    want = [entropy_cover(CoverPoint.at(z, p, q)) for z, p, q in zip(zs, ps, qs)]
    np.testing.assert_allclose(got, want, rtol=1e-13, atol=1e-13)
    with pytest.raises(DomainError):
        entropy_cover_many([1e-12], [0], [0])


def test_real_regulator():
    assert entropy_real_regulator(0.5) == pytest.approx(math.log(2))
    assert entropy_real_regulator(-2) == pytest.approx(2 * math.log(2) - 3 * math.log(3))
    with pytest.raises(DomainError):
        entropy_real_regulator(complex(0.5, 0.1))
    with pytest.raises(DomainError):
        entropy_real_regulator(0)


@pytest.mark.parametrize("x", [-4.5, -1.0, -0.2, 0.3, 0.9, 1.7, 5.5])
def test_real_part_on_any_sheet_is_the_real_regulator(x):
    side = "above" if x < 0 or x > 1 else "none"
    for p in range(-6, 7, 2):
        for q in range(-6, 7, 2):
            val = entropy_cover(CoverPoint.at(x, p, q, side))
            assert abs(val.real - entropy_real_regulator(x)) < 1e-12


def test_clockwise_square_continuation(backend):
    path = PolyPath([0.5, complex(0.5, -0.5), complex(-0.5, -0.5), complex(-0.5, 0.5), complex(0.5, 0.5), 0.5])
    start = CoverPoint.at(0.5)
    value = continue_entropy(start, path)
    assert value == pytest.approx(complex(math.log(2), math.pi))
    assert value == pytest.approx(entropy_cover(continue_point(start, path)))


def test_continuation_matches_closed_form_on_random_loops(backend):
    rng = Xoshiro256(4)
    for _ in range(25):
        path = random_loop(rng)
        start = CoverPoint.at(path.start, rng.even(-4, 4), rng.even(-4, 4))
        got = continue_entropy(start, path)
        assert abs(got - entropy_cover(continue_point(start, path))) < 1e-9


def test_continuation_from_and_to_slits(backend):
    start = CoverPoint.at(-1.0, 0, 0, "above")
    path = PolyPath([-1.0, complex(-1, -1), complex(2, -1), 2.0])
    end = continue_point(start, path)
    assert end.side is Side.BELOW
    assert continue_entropy(start, path) == pytest.approx(entropy_cover(end), abs=1e-10)


def test_multi_turn_circles(backend):
    for center, turns in ((0, 3), (1, -3), (0.5, 2)):
        path = PolyPath(circle_loop(center, 0.5 + 0.6j if center == 0.5 else 0.5, turns))
        start = CoverPoint.at(path.start)
        assert continue_entropy(start, path) == pytest.approx(entropy_cover(continue_point(start, path)))


def test_step_resolution_error_near_puncture(backend):
    # passes within 1e-11 of 0: no reasonable sampling resolves the branch
    path = PolyPath([complex(-1, 1e-11), complex(1 - 1e-3, 1e-11)])
    with pytest.raises(StepResolutionError):
        continue_entropy(CoverPoint.at(path.start), path)


def test_continuation_argument_checks():
    path = PolyPath([0.5, 0.5 + 1j])
    with pytest.raises(DomainError):
        continue_entropy(CoverPoint.at(0.25), path)
    with pytest.raises(DomainError):
        continue_entropy(CoverPoint.at(0.5), path, steps=0)


def test_principal_matches_cmath_formula():
    z = complex(2.5, -0.75)
    assert entropy_principal(z) == pytest.approx(-z * cmath.log(z) - (1 - z) * cmath.log(1 - z))
