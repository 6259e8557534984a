"""Relation schemas, the regulator, and the comparison maps between the groups.

Three groups share the ``FormalSum`` representation:

* ``BETA2`` -- a module over the field, generators ``<a>``;
* ``TB2`` -- a module over the multiplicative group; the action ``w * <a>``
  is kept as a formal weight on the generator, separate from the integer
  coefficient;
* ``EXT`` -- the extended group, generators ``<z; p, q>`` at points of the
  cover.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .entropy import entropy_cover, entropy_real_regulator
from .errors import DomainError
from .formal import FormalSum, Generator, Group, as_argument, is_exact_scalar
from .fourterm import FourTuple, LatticeParams, extended_tuple, relation_sum, transfer_relation_sum
from .gaussian import GaussianRational

__all__ = [
    "Schema",
    "RelationInstance",
    "CHI_BASE",
    "instantiate_relation",
    "regulator",
    "real_regulator",
    "pi_map",
    "chi_map",
    "c_element",
    "bracket_element",
    "corner_expand",
]

# base argument of the kernel generator used by chi_map
CHI_BASE = GaussianRational(Fraction(1, 2))


class Schema(enum.Enum):
    TB2_4TERM = "tb2-4term"
    BETA2_4TERM = "beta2-4term"
    EXT_4TERM = "ext-4term"
    TRANSFER_P = "transfer-p"
    TRANSFER_Q = "transfer-q"


_PARAM_NAMES = {
    Schema.TB2_4TERM: ("a", "b"),
    Schema.BETA2_4TERM: ("a", "b"),
    Schema.EXT_4TERM: ("x0", "x1", "p0", "q0", "p1", "q1", "r"),
    Schema.TRANSFER_P: ("x", "p", "q", "p_prime"),
    Schema.TRANSFER_Q: ("x", "p", "q", "q_prime"),
}
_BRANCH_NAMES = ("p0", "q0", "p1", "q1", "r")


@dataclass(frozen=True)
class RelationInstance:
    """A schema at specific parameters; ``sum`` vanishes in the schema's group."""

    schema: Schema
    params: tuple
    sum: FormalSum = field(compare=False, hash=False)

    @property
    def param_dict(self) -> dict:
        return dict(zip(_PARAM_NAMES[self.schema], self.params))

    def to_json(self) -> dict:
        params = {}
        for k, v in self.param_dict.items():
            params[k] = v.to_json() if isinstance(v, GaussianRational) else (
                [v.real, v.imag] if isinstance(v, complex) else v)
        return {"schema": self.schema.value, "params": params}

    def __str__(self):
        inner = ", ".join(f"{k}={v}" for k, v in self.param_dict.items())
        return f"{self.schema.value}({inner})"


def _four_term(a, b, group: Group) -> FormalSum:
    a, b = as_argument(a), as_argument(b)
    for v in (a, b):
        if v == 0 or v == 1:
            raise DomainError(f"4-term argument {v} must avoid 0 and 1")
    if a == b:
        raise DomainError("4-term relation needs a != b (otherwise b/a = 1)")
    ratio, co_ratio = b / a, (1 - b) / (1 - a)
    if group is Group.BETA2:
        gens = [Generator.beta2(a), Generator.beta2(b), Generator.beta2(ratio), Generator.beta2(co_ratio)]
        return FormalSum(zip(gens, (1, -1, a, 1 - a)))
    gens = [Generator.tb2(a), Generator.tb2(b), Generator.tb2(ratio, weight=a), Generator.tb2(co_ratio, weight=1 - a)]
    return FormalSum(zip(gens, (1, -1, 1, 1)))


def instantiate_relation(schema: Schema | str, params=None, **kwargs) -> RelationInstance:
    """Build the relation instance of ``schema`` at ``params`` (sequence, dict or keywords).

    Extended 4-term instances lift the base tuple with zero branch data over
    the upper-half-plane region or the real triangle and translate by the
    lattice vector of ``(p0, q0, p1, q1, r)``.
    """
    schema = Schema(schema)
    names = _PARAM_NAMES[schema]
    if params is None:
        params = kwargs
    if isinstance(params, dict):
        optional = _BRANCH_NAMES if schema is Schema.EXT_4TERM else ()
        missing = [n for n in names if n not in params and n not in optional]
        if missing:
            raise DomainError(f"{schema.value} needs parameters {missing}")
        values = [params.get(n, 0) for n in names]
    else:
        values = list(params)
        if len(values) != len(names):
            raise DomainError(f"{schema.value} takes {len(names)} parameters, got {len(values)}")
    if schema in (Schema.BETA2_4TERM, Schema.TB2_4TERM):
        a, b = (as_argument(v) for v in values)
        group = Group.BETA2 if schema is Schema.BETA2_4TERM else Group.TB2
        return RelationInstance(schema, (a, b), _four_term(a, b, group))
    if schema is Schema.EXT_4TERM:
        x0, x1 = as_argument(values[0]), as_argument(values[1])
        lp = LatticeParams(*values[2:])
        total = relation_sum(extended_tuple(FourTuple(x0, x1), lp))
        return RelationInstance(schema, (x0, x1, *lp), total)
    x = as_argument(values[0])
    p, q, prime = (int(v) for v in values[1:])
    if schema is Schema.TRANSFER_P:
        total = transfer_relation_sum(x, "P", p, q, p_prime=prime)
    else:
        total = transfer_relation_sum(x, "Q", p, q, q_prime=prime)
    return RelationInstance(schema, (x, p, q, prime), total)


def regulator(total: FormalSum) -> complex:
    """Linear extension of the entropy on the cover to an extended-group sum."""
    if total.group not in (Group.EXT, None):
        raise DomainError("the regulator is defined on the extended group only")
    value = 0j
    for gen, c in total.items():
        value += complex(c) * entropy_cover(gen.point)
    return value


def real_regulator(total: FormalSum) -> float:
    """``sum c * r(a)`` for a beta2 sum with real arguments and real coefficients."""
    if total.group not in (Group.BETA2, None):
        raise DomainError("the real regulator is defined on beta2 only")
    value = 0.0
    for gen, c in total.items():
        c = complex(c)
        if c.imag:
            raise DomainError("real regulator needs real coefficients")
        value += c.real * entropy_real_regulator(gen.argument)
    return value


def pi_map(total: FormalSum) -> FormalSum:
    """Forget the branch data: ``<x; p, q> -> <x>``."""
    if total.group not in (Group.EXT, None):
        raise DomainError("pi is defined on the extended group")
    return FormalSum(((Generator.beta2(g.argument), c) for g, c in total.items()), Group.BETA2)


def c_element(x=CHI_BASE) -> FormalSum:
    """``<x; 2, -2> - <x; 0, 0>``."""
    x = as_argument(x)
    return FormalSum([(Generator.ext(x, 2, -2), 1), (Generator.ext(x, 0, 0), -1)])


def chi_map(z) -> FormalSum:
    """``z * c`` with ``c`` taken at the base argument 1/2.

    Exact ``z`` (int, Fraction, GaussianRational, rational string) gives an
    exact sum; a float or complex ``z`` gives an approximate one.
    """
    c = c_element(CHI_BASE)
    if isinstance(z, str):
        z = GaussianRational.parse(z)
    if not is_exact_scalar(z):
        return c.to_approx().scale(complex(z))
    return c.scale(z)


def bracket_element(x) -> FormalSum:
    """``-(<x; 0, 2> - <x; 0, 0>) / (1 - x)``."""
    x = as_argument(x)
    w = -1 / (1 - x)
    return FormalSum([(Generator.ext(x, 0, 2), w), (Generator.ext(x, 0, 0), -w)])


def corner_expand(x, p: int, q: int) -> FormalSum:
    """Express ``<x; p, q>`` through the four corners ``(0|2, 0|2)``.

    Coefficients are ``pq/4``, ``-p(q-2)/4``, ``-q(p-2)/4`` and
    ``(pq - 2p - 2q + 4)/4`` on ``<x;2,2>``, ``<x;2,0>``, ``<x;0,2>``, ``<x;0,0>``.
    """
    x = as_argument(x)
    for name, v in (("p", p), ("q", q)):
        if v % 2:
            raise DomainError(f"{name} must be even")
    quarter = Fraction(1, 4)
    coeffs = (
        ((2, 2), p * q * quarter),
        ((2, 0), -p * (q - 2) * quarter),
        ((0, 2), -q * (p - 2) * quarter),
        ((0, 0), (p * q - 2 * p - 2 * q + 4) * quarter),
    )
    return FormalSum((Generator.ext(x, a, b), c) for (a, b), c in coeffs)
