import cmath
import math
from fractions import Fraction

import pytest

from entropic_cover.errors import DomainError
from entropic_cover.formal import FormalSum, Generator, Group
from entropic_cover.gaussian import GaussianRational
from entropic_cover.groups import (
    CHI_BASE,
    Schema,
    bracket_element,
    c_element,
    chi_map,
    instantiate_relation,
    corner_expand,
    pi_map,
    real_regulator,
    regulator,
)
from entropic_cover.rng import Xoshiro256

F = Fraction
TWO_PI_I = 2j * math.pi


def test_instantiate_by_sequence_dict_and_keywords():
    a = instantiate_relation(Schema.EXT_4TERM, ("1/6", "1/3", 0, 0, 2, 0, 0))
    b = instantiate_relation("ext-4term", {"x0": "1/6", "x1": "1/3", "p1": 2})
    c = instantiate_relation("ext-4term", x0=F(1, 6), x1=F(1, 3), p1=2)
    assert a == b == c and a.sum == b.sum
    assert a.param_dict["p1"] == 2
    assert a.to_json()["params"]["x0"] == ["1/6", "0/1"]
    assert "ext-4term(" in str(a)


def test_instantiate_rejects_bad_parameters():
    with pytest.raises(DomainError):
        instantiate_relation("ext-4term", {"x0": "1/6"})
    with pytest.raises(DomainError):
        instantiate_relation("transfer-q", (F(1, 3), 0, 0))
    with pytest.raises(DomainError):
        instantiate_relation("beta2-4term", ("1/3", "1/3"))
    with pytest.raises(ValueError):
        instantiate_relation("no-such-schema", ())


def test_beta2_four_term_shape_and_real_regulator():
    inst = instantiate_relation("beta2-4term", ("1/3", "1/5"))
    s = inst.sum
    assert s.group is Group.BETA2
    assert s[Generator.beta2(F(3, 5))] == F(1, 3)
    assert s[Generator.beta2(F(6, 5))] == F(2, 3)
    rng = Xoshiro256(8)
    for _ in range(30):
        a, b = F(rng.randint(-40, 40), 7), F(rng.randint(-40, 40), 9)
        if len({a, b, 0, 1}) < 4:
            continue
        assert abs(real_regulator(instantiate_relation("beta2-4term", (a, b)).sum)) < 1e-12


def test_tb2_four_term_weights():
    s = instantiate_relation("tb2-4term", ("1/3", "1/5")).sum
    assert s.group is Group.TB2
    assert s[Generator.tb2(F(3, 5), weight=F(1, 3))] == 1
    assert s[Generator.tb2(F(6, 5), weight=F(2, 3))] == 1


def test_regulator_on_extended_instances():
    inst = instantiate_relation("ext-4term", ("1/7", "2/5", 2, -2, 4, 0, 6))
    assert abs(regulator(inst.sum)) < 1e-12
    with pytest.raises(DomainError):
        regulator(instantiate_relation("beta2-4term", ("1/3", "1/5")).sum)
    with pytest.raises(DomainError):
        real_regulator(inst.sum)


def test_c_element_is_independent_of_x():
    rng = Xoshiro256(12)
    for _ in range(20):
        x = GaussianRational(F(rng.randint(-30, 30), rng.randint(1, 9)), F(rng.randint(-30, 30), rng.randint(1, 9)))
        if x == 0 or x == 1:
            continue
        assert abs(regulator(c_element(x)) + TWO_PI_I) < 1e-12


@pytest.mark.parametrize("z", [F(1, 3), GaussianRational(F(-2, 5), F(7, 3)), 3])
def test_chi_map_exact(z):
    s = chi_map(z)
    assert s.exact is True
    assert abs(regulator(s) + TWO_PI_I * complex(GaussianRational.parse(z) if not isinstance(z, int) else z)) < 1e-12


def test_chi_map_approx_and_string():
    assert chi_map(0.5 + 1j).exact is False
    assert abs(regulator(chi_map(0.5 + 1j)) + TWO_PI_I * (0.5 + 1j)) < 1e-12
    assert chi_map("2/3") == chi_map(F(2, 3))
    assert chi_map(0).is_zero()
    assert CHI_BASE == F(1, 2)


def test_pi_forgets_branches():
    s = c_element(F(1, 3))
    assert pi_map(s).is_zero()
    t = FormalSum.of(Generator.ext(F(1, 3), 2, 2), 5)
    assert pi_map(t) == FormalSum.of(Generator.beta2(F(1, 3)), 5)
    with pytest.raises(DomainError):
        pi_map(pi_map(t))


def test_bracket_element_has_the_c_value():
    for x in (F(1, 3), F(-4, 3), GaussianRational(F(1, 2), F(1, 2))):
        assert abs(regulator(bracket_element(x)) + TWO_PI_I) < 1e-12


@pytest.mark.parametrize("p, q", [(0, 0), (2, 0), (0, 2), (2, 2), (4, 2), (-2, 0), (4, 4), (-6, 8)])
def test_corner_expansion(p, q):
    x = F(1, 3)
    exp = corner_expand(x, p, q)
    assert abs(regulator(exp) - regulator(FormalSum.of(Generator.ext(x, p, q)))) < 1e-11
    assert sum((c for _, c in exp.items()), GaussianRational(0)) == 1
    if (p, q) in {(0, 0), (2, 0), (0, 2), (2, 2)}:
        assert exp == FormalSum.of(Generator.ext(x, p, q))
    with pytest.raises(DomainError):
        corner_expand(x, 1, 0)


def test_regulator_accepts_empty_sum():
    assert regulator(FormalSum()) == 0
    assert cmath.isclose(regulator(FormalSum.of(Generator.ext(F(1, 2)))), math.log(2))


def test_real_regulator_symmetries():
    rng = Xoshiro256(13)
    for _ in range(30):
        a = F(rng.randint(-50, 50), rng.randint(1, 17))
        if a in (0, 1):
            continue
        r = real_regulator
        assert abs(r(FormalSum.of(Generator.beta2(a))) - r(FormalSum.of(Generator.beta2(1 - a)))) < 1e-12
        inv = r(FormalSum.of(Generator.beta2(1 / a)))
        assert abs(inv + r(FormalSum.of(Generator.beta2(a))) / float(a)) < 1e-12 * max(1.0, abs(inv))


def test_pi_after_chi_is_zero():
    for z in (F(1, 3), GaussianRational(2, -5), 7):
        assert pi_map(chi_map(z)).is_zero()
