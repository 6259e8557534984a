"""Four-term tuples, their lifts to the cover, and monodromy of the lifts.

A tuple is generated by ``(x0, x1)``; the other coordinates are
``x2 = x1 / (1 - x0)`` and ``x3 = x0 / (1 - x1)``. Lifting the tuple with all
branch data zero over the upper-half-plane region (or over the real triangle
``x0, x1 > 0, x0 + x1 < 1``) and translating by the lattice below gives every
lift in the component relevant for the extended 4-term relation.

Lattice (branch data of the four coordinates, all parameters even)::

    (p0, q0), (p1, q1), (p1 + q0, r - q0), (p0 + q1, r - q1)

Tracking ``log x_i`` and ``log(1 - x_i)`` through the identities
``x2 (1 - x0) = x1`` and ``(1 - x2)(1 - x0) = 1 - x0 - x1`` (and their
counterparts for ``x3``) forces these signs, and they are exactly the
translations under which the entropy relation keeps vanishing.
``LatticeVariant`` keeps the two sign-flipped alternatives around so the
claim can be checked rather than assumed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .cover import CoverPoint, PolyPath, _require_even, lasso
from .errors import DomainError
from .formal import FormalSum, Generator, as_argument

__all__ = [
    "FourTuple",
    "LatticeParams",
    "LatticeVariant",
    "ExtendedFourTuple",
    "LoopCounts",
    "in_4T0",
    "in_4Tplus",
    "in_real_triangle",
    "lattice_vector",
    "in_lattice",
    "extended_tuple",
    "relation_sum",
    "relation_terms",
    "TransferKind",
    "transfer_relation_sum",
    "monodromy_transport",
    "transport_paths",
    "random_4tplus",
]

Branch = tuple[tuple[int, int], tuple[int, int], tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class FourTuple:
    x0: object
    x1: object

    def __post_init__(self):
        object.__setattr__(self, "x0", as_argument(self.x0))
        object.__setattr__(self, "x1", as_argument(self.x1))
        if isinstance(self.x0, complex) != isinstance(self.x1, complex):
            object.__setattr__(self, "x0", complex(self.x0))
            object.__setattr__(self, "x1", complex(self.x1))
        for name in ("x0", "x1"):
            v = getattr(self, name)
            if v == 0 or v == 1:
                raise DomainError(f"{name} = {v} is a puncture")
        x2, x3 = self.x2, self.x3
        if x2 == 1 or x3 == 1:
            raise DomainError("x0 + x1 = 1 makes a derived coordinate hit 1")

    @property
    def x2(self):
        return self.x1 / (1 - self.x0)

    @property
    def x3(self):
        return self.x0 / (1 - self.x1)

    @property
    def coords(self) -> tuple:
        return (self.x0, self.x1, self.x2, self.x3)

    @property
    def coefficients(self) -> tuple:
        """Weights of the four generators in the relation.

        Exact for exact tuples; all ``complex`` as soon as one coordinate is.
        """
        coeffs = (1, -1, 1 - self.x0, -(1 - self.x1))
        if isinstance(self.x0, complex) or isinstance(self.x1, complex):
            return tuple(complex(c) for c in coeffs)
        return coeffs


@dataclass(frozen=True)
class LatticeParams:
    p0: int = 0
    q0: int = 0
    p1: int = 0
    q1: int = 0
    r: int = 0

    def __post_init__(self):
        for name in ("p0", "q0", "p1", "q1", "r"):
            object.__setattr__(self, name, _require_even(name, getattr(self, name)))

    def __iter__(self):
        return iter((self.p0, self.q0, self.p1, self.q1, self.r))

    def shifted(self, dp0=0, dq0=0, dp1=0, dq1=0, dr=0) -> "LatticeParams":
        return LatticeParams(self.p0 + dp0, self.q0 + dq0, self.p1 + dp1, self.q1 + dq1, self.r + dr)


class LatticeVariant(enum.Enum):
    MONODROMY = "monodromy"
    X2_FLIPPED = "x2-flipped"
    BOTH_FLIPPED = "both-flipped"


def lattice_vector(params: LatticeParams, variant: LatticeVariant = LatticeVariant.MONODROMY) -> Branch:
    p0, q0, p1, q1, r = params
    s2 = -1 if variant is not LatticeVariant.MONODROMY else 1
    s3 = -1 if variant is LatticeVariant.BOTH_FLIPPED else 1
    return ((p0, q0), (p1, q1), (p1 + s2 * q0, r - q0), (p0 + s3 * q1, r - q1))


def in_lattice(branch: Sequence, variant: LatticeVariant = LatticeVariant.MONODROMY) -> bool:
    try:
        flat = [int(v) for pair in branch for v in pair]
    except (TypeError, ValueError):
        return False
    if len(flat) != 8 or any(v % 2 for v in flat):
        return False
    p0, q0, p1, q1, _, _, _, q3 = flat
    r = q3 + q1
    expected = lattice_vector(LatticeParams(p0, q0, p1, q1, r), variant)
    return tuple(map(tuple, branch)) == expected


def in_4T0(t: FourTuple) -> bool:
    x0, x1 = t.x0, t.x1
    if x0.imag != 0 or x1.imag != 0:
        return False
    a, b = x0.real, x1.real
    return 0 < a < b < a + b < 1


def in_real_triangle(t: FourTuple) -> bool:
    """Real tuples with ``x0, x1 > 0`` and ``x0 + x1 < 1``; all four coordinates lie in (0, 1)."""
    x0, x1 = t.x0, t.x1
    if x0.imag != 0 or x1.imag != 0:
        return False
    return x0.real > 0 and x1.real > 0 and x0.real + x1.real < 1


def in_4Tplus(t: FourTuple) -> bool:
    return all(c.imag > 0 for c in t.coords)


def _liftable(t: FourTuple) -> bool:
    return in_4Tplus(t) or in_real_triangle(t)


@dataclass(frozen=True)
class ExtendedFourTuple:
    base: FourTuple
    branch: Branch

    def __post_init__(self):
        branch = tuple((int(p), int(q)) for p, q in self.branch)
        object.__setattr__(self, "branch", branch)
        if not _liftable(self.base):
            raise DomainError("base tuple is neither in the upper-half-plane region nor the real triangle")
        if not in_lattice(branch):
            raise DomainError(f"branch data {branch} is not a lattice vector")

    @property
    def points(self) -> tuple[CoverPoint, ...]:
        return tuple(CoverPoint.at(x, p, q) for x, (p, q) in zip(self.base.coords, self.branch))


def extended_tuple(t: FourTuple, params: LatticeParams) -> ExtendedFourTuple:
    """Lift ``t`` with zero branch data and translate by the lattice vector of ``params``."""
    if not _liftable(t):
        raise DomainError("extended tuples are generated only over the upper-half-plane region or the real triangle")
    return ExtendedFourTuple(t, lattice_vector(params))


def relation_terms(t: FourTuple, branch: Sequence) -> FormalSum:
    """The four-generator sum for arbitrary branch data (no lattice check)."""
    return FormalSum(
        (Generator.ext(x, p, q), c) for x, (p, q), c in zip(t.coords, branch, t.coefficients)
    )


def relation_sum(et: ExtendedFourTuple) -> FormalSum:
    """``<x0;b0> - <x1;b1> + (1-x0) <x2;b2> - (1-x1) <x3;b3>``."""
    return relation_terms(et.base, et.branch)


class TransferKind(enum.Enum):
    P = "P"
    Q = "Q"


def transfer_relation_sum(x, kind: TransferKind | str, p: int, q: int, *, p_prime: int | None = None,
                          q_prime: int | None = None, side="none") -> FormalSum:
    """Second-difference relation in ``q`` (kind Q) or ``p`` (kind P) at a fixed argument.

    Q: ``<x;p,q> - <x;p,q'> - <x;p,q-2> + <x;p,q'-2>``
    P: ``<x;p,q> - <x;p',q> - <x;p-2,q> + <x;p'-2,q>``
    """
    kind = TransferKind(kind)
    x = as_argument(x)
    g = lambda a, b: Generator.ext(x, a, b, side)  # noqa: E731
    if kind is TransferKind.Q:
        if q_prime is None:
            raise DomainError("a Q-transfer needs q_prime")
        terms = [(g(p, q), 1), (g(p, q_prime), -1), (g(p, q - 2), -1), (g(p, q_prime - 2), 1)]
    else:
        if p_prime is None:
            raise DomainError("a P-transfer needs p_prime")
        terms = [(g(p, q), 1), (g(p_prime, q), -1), (g(p - 2, q), -1), (g(p_prime - 2, q), 1)]
    return FormalSum(terms)


# -- monodromy -------------------------------------------------------------------


@dataclass(frozen=True)
class LoopCounts:
    """Branch increments produced by moving ``x0`` and then ``x1`` around loops.

    ``x0`` first circles 0 (``p0/2`` times), then 1 (``q0/2`` times), then
    ``1 - x1`` (``r/2`` times); afterwards ``x1`` circles 0 (``p1/2``) and 1
    (``q1/2``). Each count is the change it causes in the moving point's own
    branch data: a counterclockwise turn about 0 raises ``p`` by 2 and a
    clockwise turn about 1 raises ``q`` by 2. A clockwise turn of ``x0`` about
    ``1 - x1`` raises ``r`` by 2.
    """

    p0: int = 0
    q0: int = 0
    r: int = 0
    p1: int = 0
    q1: int = 0

    def __post_init__(self):
        for name in ("p0", "q0", "r", "p1", "q1"):
            object.__setattr__(self, name, _require_even(name, getattr(self, name)))

    def params(self) -> LatticeParams:
        return LatticeParams(self.p0, self.q0, self.p1, self.q1, self.r)


def monodromy_transport(t: FourTuple, loops: LoopCounts) -> ExtendedFourTuple:
    """Endpoint of the zero lift of ``t`` carried around ``loops``."""
    if not _liftable(t):
        raise DomainError("transport starts from the upper-half-plane region or the real triangle")
    p0, q0, r, p1, q1 = loops.p0, loops.q0, loops.r, loops.p1, loops.q1
    branch = ((p0, q0), (p1, q1), (p1 + q0, r - q0), (p0 + q1, r - q1))
    return ExtendedFourTuple(t, branch)


def _loop_radius(center: complex, base: complex, others: Iterable[complex]) -> float:
    dists = [abs(center - o) for o in others] + [abs(base - center)]
    return 0.25 * min(dists)


def _lasso_checked(base: complex, center: complex, others: list[complex], turns: int, segments: int) -> list[complex]:
    radius = _loop_radius(center, base, others)
    verts = lasso(base, center, radius, turns, segments)
    if turns:
        tail = np.array([base, verts[1]])
        for o in others:
            d = tail[1] - tail[0]
            s = np.clip(((o - tail[0]) * np.conj(d)).real / (abs(d) ** 2), 0.0, 1.0)
            if abs(tail[0] + s * d - o) < radius:
                raise DomainError(f"straight lasso tail toward {center} passes too close to {o}")
    return verts


def _densify(verts: Sequence[complex], per_segment: int) -> np.ndarray:
    v = np.asarray(verts, dtype=complex)
    if len(v) == 1:
        return v
    t = np.arange(per_segment) / per_segment
    pieces = v[:-1, None] + (v[1:, None] - v[:-1, None]) * t[None, :]
    return np.concatenate([pieces.ravel(), v[-1:]])


def transport_paths(t: FourTuple, loops: LoopCounts, segments: int = 64, per_segment: int = 8) -> list[PolyPath]:
    """Polygonal traces of all four coordinates during the transport.

    ``x0`` and ``x1`` follow lassos of ``segments``-gon circles; the radius is a
    quarter of the distance from the circled point to the nearest other
    singular point (or to the base point). The traced loops of ``x2`` and
    ``x3`` are images of finely subdivided ``x0``/``x1`` paths.
    """
    x0, x1 = complex(t.x0), complex(t.x1)
    c = 1 - x1
    path0 = [x0]
    for center, turns in ((0j, loops.p0 // 2), (1 + 0j, -loops.q0 // 2), (c, -loops.r // 2)):
        others = [o for o in (0j, 1 + 0j, c) if o != center]
        path0 += _lasso_checked(x0, center, others, turns, segments)[1:]
    c1 = 1 - x0
    path1 = [x1]
    for center, turns in ((0j, loops.p1 // 2), (1 + 0j, -loops.q1 // 2)):
        others = [o for o in (0j, 1 + 0j, c1) if o != center]
        path1 += _lasso_checked(x1, center, others, turns, segments)[1:]
    s0 = _densify(path0, per_segment)
    s1 = _densify(path1, per_segment)
    y0 = np.concatenate([s0, np.full(len(s1) - 1, x0)])
    y1 = np.concatenate([np.full(len(s0), x1), s1[1:]])
    traces = (y0, y1, y1 / (1 - y0), y0 / (1 - y1))
    out = []
    for tr, exact in zip(traces, t.coords):
        tr = tr.copy()
        tr[0] = tr[-1] = complex(exact)
        if len(tr) < 2:
            tr = np.array([tr[0], tr[0]])
        out.append(PolyPath(tr))
    return out


def random_4tplus(rng, lo: float = 0.1, hi: float = 0.9, max_tries: int = 10_000) -> FourTuple:
    """Rejection-sample ``x0, x1`` in ``[lo, hi] x [lo, hi]i`` until the tuple lies in the upper half-plane region."""
    for _ in range(max_tries):
        x0 = complex(rng.uniform(lo, hi), rng.uniform(lo, hi))
        x1 = complex(rng.uniform(lo, hi), rng.uniform(lo, hi))
        t = FourTuple(x0, x1)
        if in_4Tplus(t):
            return t
    raise RuntimeError("rejection sampling for upper-half-plane tuples did not converge")
