"""Exact certificates: a target sum as a combination of relation instances.

``find_certificate`` runs sparse Gaussian elimination over the Gaussian
rationals with generators as coordinates (ordered by ``Generator.sort_key``,
first-nonzero pivoting), so results are reproducible. A ``None`` result only
says the target is outside the span of the given pool.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, RegimeError
from .formal import FormalSum, Generator, as_argument
from .fourterm import FourTuple, in_4Tplus, in_real_triangle
from .gaussian import GaussianRational
from .groups import (
    CHI_BASE,
    RelationInstance,
    Schema,
    bracket_element,
    c_element,
    instantiate_relation,
    corner_expand,
)

__all__ = [
    "Certificate",
    "find_certificate",
    "verify_certificate",
    "transfer_pool",
    "ext4term_pool",
    "even_range",
    "branch_shift_target",
    "corner_square_target",
    "corner_expansion_target",
    "kernel_c_target",
    "beta2_symmetry_target",
    "beta2_inversion_target",
    "beta2_pool",
    "named_target",
    "pool_from_spec",
    "default_pool",
    "parse_exact",
    "DEFAULT_TRANSFER_RANGE",
]

DEFAULT_TRANSFER_RANGE = (-6, 8)


@dataclass(frozen=True)
class Certificate:
    combination: tuple  # of (RelationInstance, GaussianRational)

    def total(self) -> FormalSum:
        out = FormalSum()
        for inst, c in self.combination:
            out = out + inst.sum.scale(c)
        return out

    def __len__(self):
        return len(self.combination)

    def to_json(self) -> list:
        return [{"instance": inst.to_json(), "coefficient": c.to_json()} for inst, c in self.combination]


def _require_exact(total: FormalSum, what: str) -> None:
    if total.exact is False:
        raise RegimeError(f"{what} must use exact coefficients")


def find_certificate(target: FormalSum, pool: Sequence[RelationInstance]) -> Certificate | None:
    """Exact coefficients ``c_j`` with ``sum_j c_j * pool[j].sum == target``, or None."""
    _require_exact(target, "target")
    for inst in pool:
        _require_exact(inst.sum, f"pool instance {inst}")
        if target.group and inst.sum.group and inst.sum.group is not target.group:
            raise DomainError(f"pool instance {inst} is in a different group from the target")
    if target.is_zero():
        return Certificate(())
    gens: set[Generator] = set(target)
    for inst in pool:
        gens.update(inst.sum)
    order = {g: i for i, g in enumerate(sorted(gens, key=Generator.sort_key))}

    # Real problems (the common case) run on plain Fractions: about twice as fast.
    real = all(c.is_real() for _, c in target.items()) and all(
        c.is_real() for inst in pool for _, c in inst.sum.items())
    one = Fraction(1) if real else GaussianRational(1)

    def vec(total: FormalSum) -> dict:
        if real:
            return {order[g]: c.real for g, c in total.items()}
        return {order[g]: c for g, c in total.items()}

    # pivot -> (row, combination); row[pivot] == 1
    basis: dict[int, tuple[dict, dict]] = {}

    def axpy(dst: dict, f, src: dict, heap=None) -> None:
        for key, v in src.items():
            if key in dst:
                nv = dst[key] - f * v
            else:
                nv = -(f * v)
            if nv:
                if heap is not None and key not in dst:
                    heapq.heappush(heap, key)
                dst[key] = nv
            else:
                dst.pop(key, None)

    def reduce(row: dict, combo: dict) -> None:
        heap = list(row)
        heapq.heapify(heap)
        while heap:
            k = heapq.heappop(heap)
            if k not in row or k not in basis:
                continue
            f = row[k]
            brow, bcombo = basis[k]
            axpy(row, f, brow, heap)
            axpy(combo, f, bcombo)

    target_row = vec(target)
    for j, inst in enumerate(pool):
        row = vec(inst.sum)
        if not row:
            continue
        combo = {j: one}
        reduce(row, combo)
        if not row:
            continue
        pivot = min(row)
        inv = 1 / row[pivot]
        row = {k: v * inv for k, v in row.items()}
        combo = {k: v * inv for k, v in combo.items()}
        basis[pivot] = (row, combo)
    combo: dict = {}
    row = dict(target_row)
    reduce(row, combo)
    if row:
        return None
    # row == target + sum combo_j * pool_j == 0
    pairs = tuple((pool[j], GaussianRational(-c) if real else -c) for j, c in sorted(combo.items()) if c)
    return Certificate(pairs)


def verify_certificate(target: FormalSum, cert: Certificate | None) -> bool:
    """Exact check that the certificate's combination reproduces ``target``."""
    if cert is None:
        return False
    _require_exact(target, "target")
    for inst, c in cert.combination:
        if not isinstance(c, GaussianRational):
            return False
        _require_exact(inst.sum, "certificate instance")
    return (cert.total() - target).is_zero()


# -- pools ----------------------------------------------------------------------


def even_range(lo: int, hi: int) -> list[int]:
    start = lo if lo % 2 == 0 else lo + 1
    return list(range(start, hi + 1, 2))


def transfer_pool(args: Iterable, lo: int = DEFAULT_TRANSFER_RANGE[0], hi: int = DEFAULT_TRANSFER_RANGE[1],
                  mode: str = "adjacent") -> list[RelationInstance]:
    """Transfer instances at each argument with all parameters in ``[lo, hi]``.

    ``adjacent`` keeps only ``q' = q - 2`` (resp. ``p' = p - 2``), which spans
    the same relations as ``all`` with far fewer instances.
    """
    evens = even_range(lo, hi)
    out = []
    for x in args:
        x = as_argument(x)
        for a in evens:
            for b in evens:
                if mode == "adjacent":
                    primes = [b - 2] if b - 2 >= lo else []
                elif mode == "all":
                    primes = [c for c in evens if c != b]
                else:
                    raise DomainError(f"unknown transfer mode {mode!r}")
                for c in primes:
                    out.append(instantiate_relation(Schema.TRANSFER_Q, (x, a, b, c)))
                    out.append(instantiate_relation(Schema.TRANSFER_P, (x, b, a, c)))
    return out


def ext4term_pool(x0, x1, params: Iterable[Sequence[int]]) -> list[RelationInstance]:
    x0, x1 = as_argument(x0), as_argument(x1)
    return [instantiate_relation(Schema.EXT_4TERM, (x0, x1, *p)) for p in params]


def _param_grid(lo: int, hi: int) -> list[tuple]:
    return list(itertools.product(even_range(lo, hi), repeat=5))


def _arguments(total: FormalSum) -> list:
    return sorted({g.argument for g in total}, key=lambda z: z.sort_key())


def _pool_args(pool: Sequence[RelationInstance], target: FormalSum) -> list:
    args = {g.argument for g in target}
    for inst in pool:
        args.update(g.argument for g in inst.sum)
    return sorted(args, key=lambda z: z.sort_key())


# -- named targets ----------------------------------------------------------------


def _G(x, p, q) -> Generator:
    return Generator.ext(x, p, q)


def branch_shift_target(y, x, p0: int = 0, q0: int = 0, p1: int = 0, q1: int = 0) -> FormalSum:
    """``<y;p0-2,q0+2> - <y;p0,q0> - <x;p1-2,q1+2> + <x;p1,q1>``."""
    y, x = as_argument(y), as_argument(x)
    return FormalSum([(_G(y, p0 - 2, q0 + 2), 1), (_G(y, p0, q0), -1),
                      (_G(x, p1 - 2, q1 + 2), -1), (_G(x, p1, q1), 1)])


def corner_square_target(x) -> FormalSum:
    """``<x;2,2> - <x;2,0> - <x;0,2> + <x;0,0>``."""
    x = as_argument(x)
    return FormalSum([(_G(x, 2, 2), 1), (_G(x, 2, 0), -1), (_G(x, 0, 2), -1), (_G(x, 0, 0), 1)])


def corner_expansion_target(x, p: int, q: int) -> FormalSum:
    """``<x;p,q>`` minus its corner expansion."""
    return FormalSum.of(_G(as_argument(x), p, q)) - corner_expand(x, p, q)


def kernel_c_target(x) -> FormalSum:
    """``{x} - c`` with ``c`` at the chi base argument."""
    return bracket_element(x) - c_element(CHI_BASE)


def beta2_symmetry_target(a) -> FormalSum:
    """``<a> - <1 - a>`` in beta2."""
    a = as_argument(a)
    return FormalSum([(Generator.beta2(a), 1), (Generator.beta2(1 - a), -1)])


def beta2_inversion_target(a) -> FormalSum:
    """``<1/a> + <a>/a`` in beta2."""
    a = as_argument(a)
    return FormalSum([(Generator.beta2(1 / a), 1), (Generator.beta2(a), 1 / a)])


def _orbit(a) -> set:
    """The six arguments related to ``a`` by ``t -> 1 - t`` and ``t -> 1/t``."""
    return {a, 1 - a, 1 / a, 1 / (1 - a), a / (a - 1), (a - 1) / a}


def _closure_step(args: set) -> set:
    out = set(args)
    for x, y in itertools.permutations(args, 2):
        out.add(y / x)
        out.add((1 - y) / (1 - x))
    return {v for v in out if v != 0 and v != 1}


def beta2_pool(args) -> list[RelationInstance]:
    """All beta2 4-term instances with both parameters in ``args``."""
    ordered = sorted(args, key=lambda z: z.sort_key())
    return [instantiate_relation(Schema.BETA2_4TERM, (x, y)) for x, y in itertools.permutations(ordered, 2)]


def _companion(x) -> GaussianRational:
    """A partner ``y`` with ``(y, x)`` in the real triangle or the upper-half-plane region."""
    x = as_argument(x)
    for y in (x / 2, x / 3, x * GaussianRational(1, 1) / 4):
        try:
            t = FourTuple(y, x)
        except DomainError:
            continue
        if in_real_triangle(t) or in_4Tplus(t):
            return y
    raise DomainError(f"no default companion argument for {x}; give an explicit pool")


def _neighbours(base: Sequence[int]) -> list[tuple]:
    out = [tuple(base)]
    for i in range(5):
        for d in (-2, 2):
            v = list(base)
            v[i] += d
            out.append(tuple(v))
    return out


def default_pool(name: str, args: Sequence) -> list[RelationInstance]:
    if name == "lemma1":
        y, x, p0, q0, p1, q1 = args
        base = (p0, q0, p1, q1, 0)
        shifted = (p0 - 2, q0 + 2, p1 - 2, q1 + 2, 2)
        params = sorted(set(_neighbours(base)) | set(_neighbours(shifted)))
        return ext4term_pool(y, x, params)
    if name == "eq2t3":
        (x,) = args
        y = _companion(x)
        params = [(p0, q0, p1, q1, r)
                  for (p0, q0, r) in ((0, 0, 0), (-2, 2, 2))
                  for p1 in (-2, 0, 2) for q1 in (-2, 0, 2)]
        return ext4term_pool(y, x, params) + transfer_pool([x])
    if name == "lemma2":
        (x, _, _) = args
        return transfer_pool([x])
    if name == "kernel-c":
        (x,) = args
        y = _companion(x)
        w = FourTuple(y, x).x3
        grid = _param_grid(-2, 2)
        pool = ext4term_pool(y, x, grid) + ext4term_pool(w, x, grid) + ext4term_pool(w, CHI_BASE, grid)
        return pool + transfer_pool(sorted({x, y, w, CHI_BASE}, key=lambda z: z.sort_key()), -4, 4)
    if name == "beta2-symmetry":
        return beta2_pool(_orbit(args[0]))
    if name == "beta2-inversion":
        return beta2_pool(_closure_step(_orbit(args[0])))
    raise DomainError(f"no default pool for {name!r}")


_SHIFT_DEFAULTS = {
    0: ("1/5", "1/3", 0, 0, 0, 0),
    1: ("1/7", "2/5", 2, -2, 4, 0),
    2: (["1/5", "1/5"], ["3/10", "1/5"], -2, 4, 0, 2),
}


def named_target(spec: str) -> tuple[str, tuple, FormalSum]:
    """Parse ``name[:args]`` into ``(name, parsed args, target sum)``.

    Recognised: ``lemma1[:k]`` (k in 0..2) or ``lemma1:y,x,p0,q0,p1,q1``;
    ``eq2t3[:x]``; ``lemma2:p,q[,x]``; ``kernel-c[:x]``; and the beta2
    identities ``beta2-symmetry[:a]`` and ``beta2-inversion[:a]``. Exact arguments are
    rationals ``a/b``; Gaussian ones are written ``re+imi`` as ``1/5+1/5i``.
    """
    name, _, rest = spec.partition(":")
    parts = [s.strip() for s in rest.split(",")] if rest else []
    try:
        if name == "lemma1":
            if not parts:
                raw = _SHIFT_DEFAULTS[0]
            elif len(parts) == 1:
                raw = _SHIFT_DEFAULTS[int(parts[0])]
            else:
                raw = (parts[0], parts[1], *map(int, parts[2:6]))
            y, x = parse_exact(raw[0]), parse_exact(raw[1])
            args = (y, x, *raw[2:6])
            return name, args, branch_shift_target(*args)
        if name == "eq2t3":
            x = parse_exact(parts[0]) if parts else GaussianRational(Fraction(1, 3))
            return name, (x,), corner_square_target(x)
        if name == "lemma2":
            p, q = int(parts[0]), int(parts[1])
            x = parse_exact(parts[2]) if len(parts) > 2 else GaussianRational(Fraction(1, 3))
            return name, (x, p, q), corner_expansion_target(x, p, q)
        if name == "kernel-c":
            x = parse_exact(parts[0]) if parts else GaussianRational(Fraction(1, 3))
            return name, (x,), kernel_c_target(x)
        if name in ("beta2-symmetry", "beta2-inversion"):
            a = parse_exact(parts[0]) if parts else GaussianRational(Fraction(1, 3))
            if a in (0, 1):
                raise ValueError("argument must avoid 0 and 1")
            fn = beta2_symmetry_target if name == "beta2-symmetry" else beta2_inversion_target
            return name, (a,), fn(a)
    except (IndexError, ValueError, KeyError) as exc:
        raise DomainError(f"bad target {spec!r}: {exc}") from exc
    raise DomainError(f"unknown target {name!r} (lemma1, eq2t3, lemma2:<p>,<q>, kernel-c, "
                      "beta2-symmetry, beta2-inversion)")


def parse_exact(text) -> GaussianRational:
    """``"1/3"``, ``"1/5+1/5i"``, ``"-2/7i"``, or a ``[re, im]`` pair."""
    if isinstance(text, (GaussianRational, list, tuple, dict)):
        return GaussianRational.parse(text)
    s = str(text).replace(" ", "")
    if not s.endswith("i"):
        return GaussianRational.parse(s)
    body = s[:-1]
    for k in range(len(body) - 1, 0, -1):
        if body[k] in "+-" and body[k - 1] != "/":
            return GaussianRational(Fraction(body[:k]), Fraction(_unit(body[k:])))
    return GaussianRational(0, Fraction(_unit(body)))


def _unit(s: str) -> str:
    return s + "1" if s in ("", "+", "-") else s


def pool_from_spec(spec: dict, target: FormalSum) -> list[RelationInstance]:
    """Build a pool from a JSON-style description.

    Keys: ``ext4term`` -- list of ``{"x0", "x1", "params": [[p0,q0,p1,q1,r], ...]}``
    or ``{"x0", "x1", "grid": [lo, hi]}``; ``beta2_4term`` -- list of
    ``[a, b]``; ``transfer`` -- ``{"args": "target" | "all" | [...],
    "range": [lo, hi], "mode": "adjacent" | "all"}``.
    """
    pool: list[RelationInstance] = []
    for entry in spec.get("ext4term", []):
        x0, x1 = parse_exact(entry["x0"]), parse_exact(entry["x1"])
        if "params" in entry:
            params = [tuple(map(int, p)) for p in entry["params"]]
        else:
            lo, hi = entry.get("grid", [-2, 2])
            params = _param_grid(int(lo), int(hi))
        pool += ext4term_pool(x0, x1, params)
    for a, b in spec.get("beta2_4term", []):
        pool.append(instantiate_relation(Schema.BETA2_4TERM, (parse_exact(a), parse_exact(b))))
    if "transfer" in spec:
        tspec = spec["transfer"]
        lo, hi = tspec.get("range", DEFAULT_TRANSFER_RANGE)
        which = tspec.get("args", "all")
        if which == "target":
            args = _arguments(target)
        elif which == "all":
            args = _pool_args(pool, target)
        else:
            args = [parse_exact(a) for a in which]
        pool += transfer_pool(args, int(lo), int(hi), tspec.get("mode", "adjacent"))
    return pool
