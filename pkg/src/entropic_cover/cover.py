"""Points and paths on the universal abelian cover of C minus {0, 1}.

A point of the cover is written ``(z; p, q)``: ``z`` lives in the cut plane
(C minus {0, 1}, slit along ``(-inf, 0)`` and ``(1, inf)``, each slit point
occurring twice, once approached from above and once from below) and ``p, q``
are even integers. The branches of the two logarithms at such a point are

    log z     = Log z     + pi*i*p
    log(1-z)  = Log(1-z)  - pi*i*q

with ``Log`` the principal branch (cut on the negative real axis). Gluing the
two copies of a slit point, ``(x+0i; p, q) ~ (x-0i; p+2, q)`` for ``x < 0``
and ``(x+0i; p, q) ~ (x-0i; p, q+2)`` for ``x > 1``, is exactly what keeps
those logarithms continuous.

Lifting a path therefore changes ``(p, q)`` only at transversal crossings of
the slits: a crossing from the upper to the lower half-plane adds 2 (to ``p``
on the left slit, to ``q`` on the right slit) and the reverse crossing
subtracts 2. In winding terms, ``dp = 2 * wind(path, 0)`` and
``dq = -2 * wind(path, 1)`` with counterclockwise-positive winding numbers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import DomainError

__all__ = [
    "Side",
    "CutPoint",
    "CoverPoint",
    "DeckVector",
    "PolyPath",
    "PUNCTURE_EPS",
    "on_cut",
    "project",
    "deck_act",
    "winding_data",
    "continue_point",
    "circle_loop",
    "lasso",
]

# Vertices and segments closer than this to 0 or 1 are rejected.
PUNCTURE_EPS = 1e-12


class Side(enum.Enum):
    NONE = "none"
    ABOVE = "above"
    BELOW = "below"

    @property
    def sign(self) -> int:
        return {Side.NONE: 0, Side.ABOVE: 1, Side.BELOW: -1}[self]


def on_cut(z) -> bool:
    """True if ``z`` is real and lies on ``(-inf, 0)`` or ``(1, inf)``."""
    if z.imag != 0:
        return False
    return z.real < 0 or z.real > 1


def _is_puncture(z) -> bool:
    return z.imag == 0 and (z.real == 0 or z.real == 1)


def _require_even(name: str, value: int) -> int:
    if isinstance(value, bool) or int(value) != value:
        raise DomainError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if value % 2:
        raise DomainError(f"{name} must be even, got {value}")
    return value


@dataclass(frozen=True)
class CutPoint:
    """A point of the cut plane.

    ``z`` may be a Python complex or an exact ``GaussianRational``. Points on a
    slit must say which half-plane they are approached from.
    """

    z: object
    side: Side = Side.NONE

    def __post_init__(self):
        side = Side(self.side)
        object.__setattr__(self, "side", side)
        if _is_puncture(self.z):
            raise DomainError(f"{self.z} is a puncture")
        if on_cut(self.z):
            if side is Side.NONE:
                raise DomainError(f"{self.z} lies on a cut and needs a side (above/below)")
        elif side is not Side.NONE:
            raise DomainError(f"side {side.value!r} given for {self.z}, which is not on a cut")

    def as_complex(self) -> complex:
        """The coordinate as a complex number whose signed zero encodes the side."""
        z = complex(self.z)
        if self.side is Side.BELOW:
            return complex(z.real, -0.0)
        if self.side is Side.ABOVE:
            return complex(z.real, 0.0)
        return z


@dataclass(frozen=True, eq=False)
class CoverPoint:
    base: CutPoint
    p: int = 0
    q: int = 0

    def __post_init__(self):
        object.__setattr__(self, "p", _require_even("p", self.p))
        object.__setattr__(self, "q", _require_even("q", self.q))

    @classmethod
    def at(cls, z, p: int = 0, q: int = 0, side: Side | str = Side.NONE) -> "CoverPoint":
        return cls(CutPoint(z, Side(side)), p, q)

    @property
    def z(self):
        return self.base.z

    @property
    def side(self) -> Side:
        return self.base.side

    def canonical(self) -> tuple:
        """Representative with slit points always approached from above."""
        z, p, q = self.base.z, self.p, self.q
        if self.base.side is Side.BELOW:
            if z.real < 0:
                p -= 2
            else:
                q -= 2
        return (z, p, q)

    def __eq__(self, other):
        if not isinstance(other, CoverPoint):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        side = "" if self.side is Side.NONE else f" {self.side.value}"
        return f"CoverPoint({self.z}{side}; {self.p}, {self.q})"

    def to_json(self) -> dict:
        z = complex(self.z)
        return {"re": z.real, "im": z.imag, "side": self.side.value, "p": self.p, "q": self.q}

    @classmethod
    def from_json(cls, data: dict) -> "CoverPoint":
        try:
            z = complex(float(data["re"]), float(data.get("im", 0.0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"bad cover point {data!r}") from exc
        return cls.at(z, data.get("p", 0), data.get("q", 0), data.get("side", "none"))


@dataclass(frozen=True)
class DeckVector:
    dp: int = 0
    dq: int = 0

    def __post_init__(self):
        object.__setattr__(self, "dp", _require_even("dp", self.dp))
        object.__setattr__(self, "dq", _require_even("dq", self.dq))

    def __add__(self, other: "DeckVector") -> "DeckVector":
        return DeckVector(self.dp + other.dp, self.dq + other.dq)

    def __neg__(self) -> "DeckVector":
        return DeckVector(-self.dp, -self.dq)

    def __iter__(self):
        return iter((self.dp, self.dq))


@dataclass(frozen=True)
class PolyPath:
    """Polygonal path in C minus {0, 1}.

    ``start_side`` is required when the first vertex lies on a slit. Interior
    vertices may not lie on a slit and no segment may run along one.
    """

    vertices: tuple
    start_side: Side = Side.NONE

    def __init__(self, vertices: Iterable, start_side: Side | str = Side.NONE):
        verts = tuple(complex(v) for v in vertices)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "start_side", Side(start_side))
        if len(verts) < 2:
            raise DomainError("a path needs at least two vertices")
        _validate(verts)

    @classmethod
    def from_json(cls, data: Sequence, start_side: Side | str = Side.NONE) -> "PolyPath":
        try:
            verts = [complex(float(re), float(im)) for re, im in data]
        except (TypeError, ValueError) as exc:
            raise DomainError("path must be a JSON array of [re, im] pairs") from exc
        return cls(verts, start_side)

    def to_json(self) -> list:
        return [[v.real, v.imag] for v in self.vertices]

    @property
    def start(self) -> complex:
        return self.vertices[0]

    @property
    def end(self) -> complex:
        return self.vertices[-1]

    @property
    def is_closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def reversed(self) -> "PolyPath":
        return PolyPath(self.vertices[::-1], _end_side(self))

    def __add__(self, other: "PolyPath") -> "PolyPath":
        if self.end != other.start:
            raise DomainError("paths can only be concatenated when endpoints match")
        return PolyPath(self.vertices + other.vertices[1:], self.start_side)

    def __len__(self):
        return len(self.vertices)


def _segment_distance(a: np.ndarray, b: np.ndarray, c: complex) -> np.ndarray:
    d = b - a
    dd = (d * d.conjugate()).real
    safe = np.where(dd > 0, dd, 1.0)
    t = np.clip(((c - a) * d.conjugate()).real / safe, 0.0, 1.0)
    return np.abs(a + t * d - c)


def _validate(verts: tuple) -> None:
    v = np.asarray(verts, dtype=complex)
    for c in (0.0, 1.0):
        if np.any(np.abs(v - c) < PUNCTURE_EPS):
            raise DomainError(f"path vertex within {PUNCTURE_EPS:g} of the puncture {c:g}")
        if len(v) > 1 and np.any(_segment_distance(v[:-1], v[1:], c) < PUNCTURE_EPS):
            raise DomainError(f"path segment passes through the puncture {c:g}")
    interior = v[1:-1]
    bad = (interior.imag == 0) & ((interior.real < 0) | (interior.real > 1))
    if np.any(bad):
        raise DomainError("interior path vertex lies on a cut; nudge it off the real axis")
    a, b = v[:-1], v[1:]
    flat = (a.imag == 0) & (b.imag == 0) & (a != b)
    if np.any(flat):
        lo = np.minimum(a.real[flat], b.real[flat])
        hi = np.maximum(a.real[flat], b.real[flat])
        if np.any((lo < 0) | (hi > 1)):
            raise DomainError("path segment runs along a cut")


def _start_sign(path: PolyPath, side: Side) -> int:
    z0 = path.start
    if on_cut(z0):
        if side is Side.NONE:
            raise DomainError(f"path starts on a cut at {z0}; a side annotation is required")
        return side.sign
    return 0


def _crossings(path: PolyPath, side: Side) -> tuple[int, int]:
    v = np.asarray(path.vertices, dtype=complex)
    dp, dq = _kernels.count_crossings(
        np.ascontiguousarray(v.real), np.ascontiguousarray(v.imag), _start_sign(path, side)
    )
    return int(dp), int(dq)


def project(pt: CoverPoint):
    """The underlying point of C minus {0, 1}."""
    return pt.base.z


def deck_act(pt: CoverPoint, v: DeckVector) -> CoverPoint:
    return CoverPoint(pt.base, pt.p + v.dp, pt.q + v.dq)


def winding_data(path: PolyPath) -> DeckVector:
    """Deck vector obtained by lifting the closed path ``path``."""
    if not path.is_closed:
        raise DomainError("winding data needs a closed path")
    start = CoverPoint(CutPoint(path.start, path.start_side))
    _start_sign(path, path.start_side)
    _, p1, q1 = continue_point(start, path).canonical()
    _, p0, q0 = start.canonical()
    return DeckVector(p1 - p0, q1 - q0)


def _end_side(path: PolyPath) -> Side:
    z = path.end
    if not on_cut(z):
        return Side.NONE
    # the last segment cannot lie on the axis (validated), so the previous vertex is off it
    return Side.ABOVE if path.vertices[-2].imag > 0 else Side.BELOW


def continue_point(start: CoverPoint, path: PolyPath) -> CoverPoint:
    """Endpoint of the lift of ``path`` that begins at ``start``."""
    if complex(start.z) != path.start:
        raise DomainError("path does not start at the projection of the start point")
    side = start.side
    if path.start_side is not Side.NONE and side is not path.start_side:
        raise DomainError("path start side disagrees with the start point")
    dp, dq = _crossings(path, side)
    return CoverPoint(CutPoint(path.end, _end_side(path)), start.p + dp, start.q + dq)


# -- loop builders -------------------------------------------------------------


def circle_loop(center: complex, start: complex, turns: int, segments: int = 64) -> list[complex]:
    """Vertices of ``|turns|`` circuits around ``center`` beginning and ending at ``start``.

    Positive ``turns`` run counterclockwise. Intermediate vertices sit at
    half-step angles so that a start on the real axis is the only vertex there.
    """
    start = complex(start)
    radius = abs(start - center)
    theta0 = math.atan2((start - center).imag, (start - center).real)
    out = [start]
    if turns == 0:
        return out
    direction = 1 if turns > 0 else -1
    step = 2 * math.pi / segments
    for _ in range(abs(turns)):
        for k in range(segments):
            theta = theta0 + direction * step * (k + 0.5)
            out.append(center + radius * complex(math.cos(theta), math.sin(theta)))
        out.append(start)
    return out


def lasso(base: complex, center: complex, radius: float, turns: int, segments: int = 64) -> list[complex]:
    """Straight tail from ``base`` toward ``center``, ``turns`` circuits, then back.

    The returned vertices begin and end at ``base``. The caller ensures that the
    tail avoids other punctures and that the disc holds only ``center``.
    """
    base = complex(base)
    if turns == 0:
        return [base]
    offset = base - center
    if abs(offset) <= radius:
        raise DomainError("lasso base must lie outside the loop circle")
    entry = center + offset * (radius / abs(offset))
    ring = circle_loop(center, entry, turns, segments)
    return [base] + ring + [base]
