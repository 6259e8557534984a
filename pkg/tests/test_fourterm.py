from fractions import Fraction

import pytest

from entropic_cover.cover import CoverPoint
from entropic_cover.entropy import continue_entropy, entropy_cover
from entropic_cover.errors import DomainError
from entropic_cover.fourterm import (
    FourTuple,
    LatticeParams,
    LatticeVariant,
    LoopCounts,
    extended_tuple,
    in_4T0,
    in_4Tplus,
    in_lattice,
    in_real_triangle,
    lattice_vector,
    monodromy_transport,
    random_4tplus,
    relation_sum,
    relation_terms,
    transfer_relation_sum,
    transport_paths,
)
from entropic_cover.groups import regulator
from entropic_cover.rng import Xoshiro256

F = Fraction


def test_derived_coordinates():
    t = FourTuple(F(1, 6), F(1, 3))
    assert t.x2 == F(2, 5) and t.x3 == F(1, 4)
    assert t.coefficients == (1, -1, F(5, 6), F(-2, 3))
    with pytest.raises(DomainError):
        FourTuple(F(1, 3), F(2, 3))
    with pytest.raises(DomainError):
        FourTuple(0, F(1, 2))


def test_regions():
    t = FourTuple(complex(0.2, 0.2), complex(0.3, 0.2))
    assert in_4Tplus(t) and not in_real_triangle(t)
    assert in_real_triangle(FourTuple(F(1, 6), F(1, 3)))
    assert not in_real_triangle(FourTuple(F(1, 2), F(2, 3)))
    assert in_4T0(FourTuple(F(1, 6), F(1, 3)))


def test_lattice_vector_shapes():
    lp = LatticeParams(2, -2, 4, 0, 6)
    assert lattice_vector(lp) == ((2, -2), (4, 0), (2, 8), (2, 6))
    assert lattice_vector(lp, LatticeVariant.X2_FLIPPED)[2] == (6, 8)
    assert lattice_vector(lp, LatticeVariant.BOTH_FLIPPED)[3] == (2, 6)
    assert in_lattice(lattice_vector(lp))
    assert not in_lattice(lattice_vector(lp, LatticeVariant.X2_FLIPPED))
    assert not in_lattice(((0, 0), (0, 0), (0, 0), (0, 2)))
    assert not in_lattice("junk")
    with pytest.raises(DomainError):
        LatticeParams(1, 0, 0, 0, 0)


def test_lattice_example_with_nonzero_q1():
    # (p0, q0, p1, q1, r) = (0, 2, 0, 0, 2)
    assert lattice_vector(LatticeParams(0, 2, 0, 0, 2)) == ((0, 2), (0, 0), (2, 0), (0, 2))


@pytest.mark.parametrize("x0, x1", [(F(1, 6), F(1, 3)), ("1/5", "1/4"), (complex(0.2, 0.2), complex(0.3, 0.2))])
def test_regulator_kills_extended_relations(x0, x1):
    t = FourTuple(x0, x1)
    for params in [(0, 0, 0, 0, 0), (2, -2, 4, 0, 6), (-8, 8, 6, -4, 2)]:
        total = relation_sum(extended_tuple(t, LatticeParams(*params)))
        assert abs(regulator(total)) < 1e-11


def test_flipped_variants_fail_generically():
    t = FourTuple(complex(0.2, 0.2), complex(0.3, 0.2))
    lp = LatticeParams(2, 2, 0, 2, 0)
    for variant in (LatticeVariant.X2_FLIPPED, LatticeVariant.BOTH_FLIPPED):
        assert abs(regulator(relation_terms(t, lattice_vector(lp, variant)))) > 1e-3


def test_extended_tuple_needs_liftable_base():
    with pytest.raises(DomainError):
        extended_tuple(FourTuple(F(1, 2), F(2, 3)), LatticeParams())


def test_transfer_relations_vanish():
    for kind in ("P", "Q"):
        total = transfer_relation_sum(F(1, 3), kind, 2, -4, p_prime=6, q_prime=0)
        assert len(total) == 4
        assert abs(regulator(total)) < 1e-12
    with pytest.raises(DomainError):
        transfer_relation_sum(F(1, 3), "Q", 0, 0)
    with pytest.raises(DomainError):
        transfer_relation_sum(F(1, 3), "P", 0, 0)


def test_transport_of_the_trivial_loop_is_the_zero_lift():
    t = FourTuple(F(1, 6), F(1, 3))
    et = monodromy_transport(t, LoopCounts())
    assert et.branch == ((0, 0),) * 4


def test_transport_paths_reproduce_the_closed_form(backend):
    rng = Xoshiro256(21)
    for _ in range(4):
        t = random_4tplus(rng)
        loops = LoopCounts(*(rng.even(-4, 4) for _ in range(5)))
        et = monodromy_transport(t, loops)
        paths = transport_paths(t, loops, segments=48, per_segment=4)
        for x, path, (p, q) in zip(t.coords, paths, et.branch):
            start = CoverPoint.at(complex(x))
            got = continue_entropy(start, path)
            assert abs(got - entropy_cover(CoverPoint.at(complex(x), p, q))) < 1e-8
        assert in_lattice(et.branch)


def test_random_4tplus_is_seeded():
    a, b = random_4tplus(Xoshiro256(5)), random_4tplus(Xoshiro256(5))
    assert a == b and in_4Tplus(a)
