"""Randomised numerical sweeps of the extended 4-term relation.

All sample points are drawn up front from one ``Xoshiro256`` stream, so the
report depends only on the seed; evaluation of independent samples may run
on a thread pool whose size is capped by ``ENTROPIC_COVER_THREADS``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .entropy import entropy_cover_many
from .errors import DomainError
from .fourterm import FourTuple, LatticeVariant, random_4tplus
from .rng import Xoshiro256

__all__ = [
    "FourTermReport",
    "relation_residuals",
    "verify_4term",
    "compare_variants",
    "thread_count",
    "DEFAULT_TOLERANCE",
]

DEFAULT_TOLERANCE = 1e-8


def thread_count() -> int:
    """Worker cap from ``ENTROPIC_COVER_THREADS`` (default 1)."""
    raw = os.environ.get("ENTROPIC_COVER_THREADS", "1")
    try:
        n = int(raw)
    except ValueError as exc:
        raise DomainError(f"ENTROPIC_COVER_THREADS must be an integer, got {raw!r}") from exc
    return max(1, n)


def _branch_arrays(params: np.ndarray, variant: LatticeVariant) -> tuple[np.ndarray, np.ndarray]:
    p0, q0, p1, q1, r = (params[:, k] for k in range(5))
    s2 = -1 if variant is not LatticeVariant.MONODROMY else 1
    s3 = -1 if variant is LatticeVariant.BOTH_FLIPPED else 1
    p = np.stack([p0, p1, p1 + s2 * q0, p0 + s3 * q1], axis=1)
    q = np.stack([q0, q1, r - q0, r - q1], axis=1)
    return p, q


def relation_residuals(t: FourTuple, params, variant: LatticeVariant = LatticeVariant.MONODROMY) -> np.ndarray:
    """``|R|`` of the relation sum of ``t`` lifted by each row ``(p0, q0, p1, q1, r)`` of ``params``."""
    params = np.asarray(params, dtype=np.int64).reshape(-1, 5)
    if np.any(params % 2):
        raise DomainError("lattice parameters must be even")
    # real coordinates carry +0.0 imaginary parts, i.e. the upper side of a slit
    coords = np.array([complex(x) for x in t.coords])
    weights = np.array([complex(c) for c in t.coefficients])
    p, q = _branch_arrays(params, variant)
    z = np.broadcast_to(coords, p.shape)
    values = entropy_cover_many(z.ravel(), p.ravel(), q.ravel()).reshape(p.shape)
    return np.abs(values @ weights)


@dataclass(frozen=True)
class FourTermReport:
    samples: int
    params_per_sample: int
    param_range: int
    seed: int
    variant: LatticeVariant
    tolerance: float
    per_sample_max: tuple[float, ...]

    @property
    def max_residual(self) -> float:
        return max(self.per_sample_max, default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_residual < self.tolerance

    def to_json(self) -> dict:
        return {
            "variant": self.variant.value,
            "samples": self.samples,
            "params_per_sample": self.params_per_sample,
            "param_range": self.param_range,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "per_sample_max": list(self.per_sample_max),
            "max_residual": self.max_residual,
            "passed": self.passed,
        }


def _draw(samples: int, params_per_sample: int, param_range: int, seed: int):
    rng = Xoshiro256(seed)
    draws = []
    for _ in range(samples):
        t = random_4tplus(rng)
        params = np.array(
            [[rng.even(-param_range, param_range) for _ in range(5)] for _ in range(params_per_sample)],
            dtype=np.int64,
        )
        draws.append((t, params))
    return draws


def verify_4term(samples: int = 100, params_per_sample: int = 200, param_range: int = 8, seed: int = 0,
                 variant: LatticeVariant = LatticeVariant.MONODROMY,
                 tolerance: float = DEFAULT_TOLERANCE) -> FourTermReport:
    """Random upper-half-plane tuples, random even lattice parameters in ``[-K, K]``."""
    return compare_variants(samples, params_per_sample, param_range, seed, (variant,), tolerance)[0]


def compare_variants(samples: int = 100, params_per_sample: int = 200, param_range: int = 8, seed: int = 0,
                     variants=tuple(LatticeVariant), tolerance: float = DEFAULT_TOLERANCE) -> list[FourTermReport]:
    """One report per lattice variant, all on the same sample points."""
    if samples < 1 or params_per_sample < 1 or param_range < 0:
        raise DomainError("samples and params per sample must be positive, the range non-negative")
    draws = _draw(samples, params_per_sample, param_range, seed)
    variants = tuple(LatticeVariant(v) for v in variants)

    def one(draw):
        t, params = draw
        return [float(relation_residuals(t, params, v).max()) for v in variants]

    workers = min(thread_count(), samples)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(one, draws))
    else:
        rows = [one(d) for d in draws]
    return [
        FourTermReport(samples, params_per_sample, param_range, seed, v, tolerance,
                       tuple(row[k] for row in rows))
        for k, v in enumerate(variants)
    ]
