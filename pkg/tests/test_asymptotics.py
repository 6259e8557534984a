import math
from fractions import Fraction

import mpmath
import pytest

from entropic_cover.asymptotics import (
    associativity_check,
    binomial_asymptotic_check,
    entropy_4term_check,
    log_factorial,
    multinomial,
)
from entropic_cover.errors import DomainError

F = Fraction


def test_small_integers_are_exact():
    assert log_factorial(5) == math.log(120)
    assert log_factorial(10) == math.log(3628800)
    assert log_factorial(F(20)) == math.log(math.factorial(20))


@pytest.mark.parametrize("m", [0.5, 1.25, 3.7, 9.99, 10.0001, 21, 25.5, 137, 1000.5, 12345.678])
def test_against_lgamma_oracles(m):
    want = float(mpmath.loggamma(mpmath.mpf(m) + 1))
    assert log_factorial(m) == pytest.approx(want, rel=1e-10, abs=1e-10)
    assert log_factorial(m) == pytest.approx(math.lgamma(m + 1), rel=1e-10, abs=1e-10)


def test_large_half_integer_oracle():
    # log Gamma by recurrence down from a far-away argument
    m, far = 1000.5, 1000.5 + 5000
    down = float(mpmath.loggamma(far + 1)) - math.fsum(math.log(far - j) for j in range(5000))
    assert log_factorial(m) == pytest.approx(down, rel=1e-10)


@pytest.mark.parametrize("m", [15, 100, 1000])
def test_gamma_recurrence(m):
    assert log_factorial(m) - log_factorial(m - 1) == pytest.approx(math.log(m), rel=1e-12)


@pytest.mark.parametrize("m", [0, -1, -0.5, float("nan")])
def test_rejects_non_positive(m):
    with pytest.raises(DomainError):
        log_factorial(m)


def test_central_binomial_specialisation():
    rep = binomial_asymptotic_check(2, 1, [100])
    assert rep.approx_log[0] == pytest.approx(200 * math.log(2) - 0.5 * math.log(math.pi * 100))
    assert rep.exact_log[0] == pytest.approx(math.log(math.comb(200, 100)), rel=1e-14)


def test_scaled_errors_bounded_and_shrinking():
    rep = binomial_asymptotic_check(2, 1, [100, 1000, 10000])
    assert max(rep.scaled_errors) < 0.2
    assert rep.errors_non_increasing()
    assert len(rep.to_json()["scaled_errors"]) == 3


def test_non_integral_products():
    rep = binomial_asymptotic_check(1, F(1, 3), [3000])
    assert rep.errors[0] < 1e-3
    rep = binomial_asymptotic_check(1, F(1, 3), [100])
    mp = mpmath.loggamma(101) - mpmath.loggamma(mpmath.mpf(100) / 3 + 1) - mpmath.loggamma(mpmath.mpf(200) / 3 + 1)
    assert rep.exact_log[0] == pytest.approx(float(mp), rel=1e-12)


def test_binomial_domain():
    with pytest.raises(DomainError):
        binomial_asymptotic_check(1, 2, [100])
    with pytest.raises(DomainError):
        binomial_asymptotic_check(2, 1, [5])


def test_associativity_examples():
    assert associativity_check(1, 1, 1, 5)
    assert multinomial(5, 5, 5) == 756756
    assert multinomial(1, 1, 1) == 6
    assert associativity_check(2, 1, 1, 3)
    assert associativity_check(F(1, 2), F(3, 2), 1, 4)
    with pytest.raises(DomainError):
        associativity_check(F(1, 2), 1, 1, 3)
    with pytest.raises(DomainError):
        associativity_check(0, 1, 1, 3)


def test_entropy_4term_examples():
    assert entropy_4term_check(F(1, 4), F(1, 2)) < 1e-12
    assert entropy_4term_check(F(1, 3), F(1, 3)) == 0.0
    with pytest.raises(DomainError):
        entropy_4term_check(F(1, 2), F(1, 2))
    with pytest.raises(DomainError):
        entropy_4term_check(0, F(1, 2))


def test_entropy_4term_antisymmetry():
    for a in (F(1, 10), F(1, 4), F(2, 5), 0.37):
        assert entropy_4term_check(a, a) < 1e-15
