"""Stirling asymptotics behind the entropy function.

``log_factorial`` is self-contained (recurrence shift plus the Stirling
series) so that results do not depend on a platform ``lgamma``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from .entropy import entropy_principal
from .errors import DomainError

__all__ = [
    "AsymptoticReport",
    "log_factorial",
    "binomial_asymptotic_check",
    "multinomial",
    "associativity_check",
    "entropy_4term_check",
    "SERIES_SHIFT",
]

# the series is applied only at arguments >= SERIES_SHIFT
SERIES_SHIFT = 10
_EXACT_LIMIT = 20
_HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)


def _as_integer(m) -> int | None:
    if isinstance(m, bool):
        return None
    if isinstance(m, int):
        return m
    if isinstance(m, Rational):
        return int(m) if Fraction(m).denominator == 1 else None
    if isinstance(m, float) and m.is_integer():
        return int(m)
    return None


def _stirling_tail(m: float) -> float:
    """``log m! - (m log m - m + log(2 pi m) / 2)`` through order ``m**-5``."""
    inv = 1.0 / m
    inv2 = inv * inv
    return inv * (1.0 / 12 - inv2 * (1.0 / 360 - inv2 / 1260))


def log_factorial(m) -> float:
    """``log Gamma(m + 1)`` for real ``m > 0``.

    Integers up to 20 use the exact factorial. Other arguments are shifted up
    to at least 10 with ``log m! = log (m+k)! - sum log(m+j)`` and evaluated
    with the Stirling series.
    """
    k = _as_integer(m)
    if k is not None and k <= 0 or k is None and not float(m) > 0:
        raise DomainError(f"log_factorial needs m > 0, got {m}")
    if k is not None and k <= _EXACT_LIMIT:
        return math.log(math.factorial(k))
    x = float(m)
    shift = max(0, math.ceil(SERIES_SHIFT - x))
    correction = math.fsum(math.log(x + j) for j in range(1, shift + 1))
    y = x + shift
    series = math.fsum((y * math.log(y), -y, 0.5 * math.log(y), _HALF_LOG_2PI, _stirling_tail(y)))
    return series - correction


@dataclass(frozen=True)
class AsymptoticReport:
    """Exact against approximate ``log binom(an, bn)`` over a list of ``n``.

    ``scaled_errors[i] = n * |exact_log[i] - approx_log[i]|``; boundedness of
    this column is the ``1 + O(1/n)`` statement.
    """

    a: float
    b: float
    n_values: tuple[int, ...]
    exact_log: tuple[float, ...]
    approx_log: tuple[float, ...]
    scaled_errors: tuple[float, ...] = field(default=())

    @property
    def errors(self) -> tuple[float, ...]:
        return tuple(abs(e - x) for e, x in zip(self.exact_log, self.approx_log))

    def errors_non_increasing(self, slack: float = 1e-12) -> bool:
        """Whether ``|exact - approx|`` does not grow along increasing ``n``."""
        errs = self.errors
        return all(e1 <= e0 + slack for e0, e1 in zip(errs, errs[1:]))

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "n": list(self.n_values),
            "exact_log": list(self.exact_log),
            "approx_log": list(self.approx_log),
            "scaled_errors": list(self.scaled_errors),
        }


def _real_entropy(x: float) -> float:
    return entropy_principal(complex(x, 0.0)).real


def binomial_asymptotic_check(a, b, n_values) -> AsymptoticReport:
    """Compare ``log binom(an, bn)`` with ``n a Phi(b/a) + log(a / (2 pi b (a-b) n)) / 2``."""
    if not (float(a) > float(b) > 0):
        raise DomainError("binomial_asymptotic_check needs a > b > 0")
    ns = tuple(int(n) for n in n_values)
    if any(n < 10 for n in ns):
        raise DomainError("n values must be at least 10")
    exact_a = _exact_or_float(a)
    exact_b = _exact_or_float(b)
    phi = _real_entropy(float(exact_b / exact_a) if isinstance(exact_a, Fraction) else float(b) / float(a))
    af, bf = float(a), float(b)
    exact, approx, scaled = [], [], []
    for n in ns:
        an, bn, cn = exact_a * n, exact_b * n, (exact_a - exact_b) * n
        ex = log_factorial(an) - log_factorial(bn) - log_factorial(cn)
        ap = n * af * phi + 0.5 * math.log(af / (2 * math.pi * bf * (af - bf) * n))
        exact.append(ex)
        approx.append(ap)
        scaled.append(n * abs(ex - ap))
    return AsymptoticReport(af, bf, ns, tuple(exact), tuple(approx), tuple(scaled))


def _exact_or_float(v):
    if isinstance(v, (int, Rational)) and not isinstance(v, bool):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    return float(v)


def _integral(v: Fraction, what: str) -> int:
    if v.denominator != 1 or v < 0:
        raise DomainError(f"{what} = {v} must be a non-negative integer")
    return int(v)


def multinomial(*parts: int) -> int:
    """``(sum parts)! / prod(part!)`` as an exact integer."""
    total, out = 0, 1
    for k in parts:
        total += k
        out *= math.comb(total, k)
    return out


def associativity_check(a, b, c, n) -> bool:
    """Exact check of the two factorisations of a trinomial coefficient.

    ``binom((a+b+c)n, an) binom((b+c)n, bn)`` and
    ``binom((a+b+c)n, bn) binom((a+c)n, an)`` must both equal
    ``((a+b+c)n)! / ((an)! (bn)! (cn)!)``.
    """
    a, b, c = (Fraction(v) for v in (a, b, c))
    if min(a, b, c) <= 0:
        raise DomainError("a, b, c must be positive")
    A, B, C = (_integral(v * n, name) for v, name in ((a, "an"), (b, "bn"), (c, "cn")))
    first = math.comb(A + B + C, A) * math.comb(B + C, B)
    second = math.comb(A + B + C, B) * math.comb(A + C, A)
    direct = math.factorial(A + B + C) // (math.factorial(A) * math.factorial(B) * math.factorial(C))
    return first == second == direct


def entropy_4term_check(a, b) -> float:
    """``|Phi(b) - Phi(a) + (1-b) Phi(a/(1-b)) - (1-a) Phi(b/(1-a))|``."""
    a, b = _exact_or_float(a), _exact_or_float(b)
    for v in (a, b, a + b):
        if not 0 < v < 1:
            raise DomainError("entropy_4term_check needs a, b, a + b in (0, 1)")
    terms = (
        _real_entropy(float(b)),
        -_real_entropy(float(a)),
        float(1 - b) * _real_entropy(float(a / (1 - b))),
        -float(1 - a) * _real_entropy(float(b / (1 - a))),
    )
    return abs(math.fsum(terms))
