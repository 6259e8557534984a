"""Generators and finite formal linear combinations of them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator

from .cover import CoverPoint, CutPoint, Side, on_cut
from .errors import DomainError, RegimeError
from .gaussian import GaussianRational, as_gaussian

__all__ = ["Group", "Generator", "FormalSum", "as_argument", "is_exact_scalar"]


class Group(enum.Enum):
    BETA2 = "beta2"
    TB2 = "tb2"
    EXT = "ext"


_GROUP_ORDER = {Group.BETA2: 0, Group.TB2: 1, Group.EXT: 2}


def as_argument(z):
    """Normalise an argument: exact inputs become GaussianRational, floats complex."""
    if isinstance(z, GaussianRational):
        return z
    if isinstance(z, (bool,)):
        raise DomainError(f"bad argument {z!r}")
    if isinstance(z, (int, Rational, str, list, tuple, dict)):
        return as_gaussian(z)
    return complex(z)


def is_exact_scalar(c) -> bool:
    return isinstance(c, (GaussianRational, int, Rational)) and not isinstance(c, bool)


def _arg_key(z) -> tuple:
    if isinstance(z, GaussianRational):
        return (0,) + z.sort_key()
    return (1, z.real, z.imag)


@dataclass(frozen=True)
class Generator:
    """``<a>`` in beta2, ``w * <a>`` in TB2, or ``<z; p, q>`` in the extended group.

    Extended generators on a slit are stored with the side folded into
    ``(p, q)`` (always approached from above), so equal cover points give
    equal generators. A slit argument given without a side is read as
    approached from above.
    """

    group: Group
    argument: object
    p: int | None = None
    q: int | None = None
    side: Side = Side.NONE
    weight: object = None

    @classmethod
    def beta2(cls, a) -> "Generator":
        a = as_argument(a)
        _check_punctured(a)
        return cls(Group.BETA2, a)

    @classmethod
    def tb2(cls, a, weight=1) -> "Generator":
        a = as_argument(a)
        _check_punctured(a)
        weight = as_argument(weight)
        if weight == 0:
            raise DomainError("TB2 weights must be nonzero")
        return cls(Group.TB2, a, weight=weight)

    @classmethod
    def ext(cls, z, p: int = 0, q: int = 0, side: Side | str = Side.NONE) -> "Generator":
        if isinstance(z, CoverPoint):
            pt = z
        else:
            if isinstance(z, CutPoint):
                z, side = z.z, z.side
            z = as_argument(z)
            if Side(side) is Side.NONE and on_cut(z) and not _is_puncture_value(z):
                side = Side.ABOVE
            pt = CoverPoint.at(z, p, q, side)
        arg, p, q = pt.canonical()
        return cls(Group.EXT, arg, p, q, Side.ABOVE if on_cut(arg) else Side.NONE)

    @property
    def point(self) -> CoverPoint:
        if self.group is not Group.EXT:
            raise DomainError("only extended generators are points of the cover")
        return CoverPoint.at(self.argument, self.p, self.q, self.side)

    def sort_key(self) -> tuple:
        weight = () if self.weight is None else _arg_key(self.weight)
        return (_GROUP_ORDER[self.group], _arg_key(self.argument), self.p or 0, self.q or 0, weight)

    def to_json(self) -> dict:
        out: dict = {"group": self.group.value, "argument": _arg_json(self.argument)}
        if self.group is Group.EXT:
            out.update(p=self.p, q=self.q)
            if self.side is not Side.NONE:
                out["side"] = self.side.value
        if self.weight is not None:
            out["weight"] = _arg_json(self.weight)
        return out

    def __str__(self):
        if self.group is Group.EXT:
            return f"<{self.argument};{self.p},{self.q}>"
        if self.group is Group.TB2 and self.weight != 1:
            return f"({self.weight})*<{self.argument}>"
        return f"<{self.argument}>"


def _arg_json(z):
    if isinstance(z, GaussianRational):
        return z.to_json()
    return [z.real, z.imag]


def _is_puncture_value(a) -> bool:
    return a == 0 or a == 1


def _check_punctured(a) -> None:
    if a == 0 or a == 1:
        raise DomainError(f"generator argument {a} must avoid 0 and 1")


def _promote(c):
    if isinstance(c, GaussianRational):
        return c
    if is_exact_scalar(c):
        return GaussianRational(Fraction(c))
    return complex(c)


class FormalSum:
    """Finite combination of generators of one group.

    Coefficients are all exact (``GaussianRational``) or all approximate
    (``complex``); zero coefficients are never stored. The empty sum belongs to
    either regime.
    """

    __slots__ = ("_terms", "group", "exact")

    def __init__(self, terms: Iterable | dict = (), group: Group | None = None):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[Generator, object] = {}
        exact = None
        for gen, coeff in items:
            coeff = _promote(coeff)
            is_exact = isinstance(coeff, GaussianRational)
            if exact is None:
                exact = is_exact
            elif exact != is_exact:
                raise RegimeError("exact and approximate coefficients in one formal sum")
            if group is None:
                group = gen.group
            elif gen.group is not group:
                raise DomainError(f"generator {gen} does not belong to {group.value}")
            acc[gen] = acc[gen] + coeff if gen in acc else coeff
        self._terms = {g: c for g, c in acc.items() if c != 0}
        self.group = group
        self.exact = exact if self._terms else None

    @classmethod
    def of(cls, gen: Generator, coeff=1) -> "FormalSum":
        return cls([(gen, coeff)])

    # mapping-ish access ---------------------------------------------------

    def __iter__(self) -> Iterator[Generator]:
        return iter(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, gen: Generator):
        return self._terms.get(gen, 0)

    def is_zero(self) -> bool:
        return not self._terms

    # module structure ------------------------------------------------------

    def _check_compatible(self, other: "FormalSum") -> None:
        if self.group and other.group and self.group is not other.group:
            raise DomainError("formal sums from different groups")
        if self.exact is not None and other.exact is not None and self.exact != other.exact:
            raise RegimeError("cannot combine exact and approximate formal sums")

    def __add__(self, other: "FormalSum") -> "FormalSum":
        if not isinstance(other, FormalSum):
            return NotImplemented
        self._check_compatible(other)
        return FormalSum(list(self.items()) + list(other.items()), self.group or other.group)

    def __neg__(self) -> "FormalSum":
        return FormalSum([(g, -c) for g, c in self.items()], self.group)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "FormalSum":
        c = _promote(c)
        if self.exact is not None and isinstance(c, GaussianRational) != self.exact:
            raise RegimeError("scalar regime differs from the formal sum's")
        return FormalSum([(g, c * v) for g, v in self.items()], self.group)

    def __mul__(self, c):
        if isinstance(c, FormalSum):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def to_approx(self) -> "FormalSum":
        return FormalSum([(g, complex(c)) for g, c in self.items()], self.group)

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def sorted_items(self) -> list:
        return sorted(self.items(), key=lambda kv: kv[0].sort_key())

    def __repr__(self):
        if not self._terms:
            return "FormalSum(0)"
        body = " + ".join(f"({c})*{g}" for g, c in self.sorted_items())
        return f"FormalSum({body})"

    def to_json(self) -> list:
        out = []
        for gen, c in self.sorted_items():
            coeff = c.to_json() if isinstance(c, GaussianRational) else [c.real, c.imag]
            out.append({"generator": gen.to_json(), "coefficient": coeff})
        return out
