"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--size 100000]

Each kernel runs on identical inputs in both implementations; the table
shows the best wall time per call and the speed-up of the compiled version.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from entropic_cover import _kernels, _pykernels
from entropic_cover.cover import CoverPoint, PolyPath, circle_loop
from entropic_cover.entropy import continue_entropy

try:
    from entropic_cover import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def _inputs(size: int, seed: int = 0):
    rng = np.random.default_rng(seed)
    steps = rng.normal(scale=0.05, size=(size, 2))
    pts = np.cumsum(steps, axis=0) + np.array([0.5, 0.3])
    re, im = np.ascontiguousarray(pts[:, 0]), np.ascontiguousarray(pts[:, 1])
    p = rng.integers(-4, 5, size=size).astype(np.int64) * 2
    q = rng.integers(-4, 5, size=size).astype(np.int64) * 2
    return re, im, p, q


def _cases(mod, re, im, p, q, short):
    l0 = complex(np.log(complex(re[0], im[0])))
    m0 = complex(np.log(complex(1 - re[0], -im[0])))
    sr, si = re[:short], im[:short]
    sl0, sm0 = l0, m0
    return {
        "count_crossings": lambda: mod.count_crossings(re, im, 0),
        "track_logs": lambda: mod.track_logs(re, im, l0, m0),
        "entropy_cover_many": lambda: mod.entropy_cover_many(re, im, p, q),
        # short segments dominate continuation along polygons
        f"track_logs[{short}]": lambda: mod.track_logs(sr, si, sl0, sm0),
    }


def _end_to_end(mod):
    """``continue_entropy`` around a three-turn circle, with ``mod`` patched in as the backend."""
    path = PolyPath(circle_loop(0.5, complex(0.5, 0.8), 3, segments=64))
    start = CoverPoint.at(path.start)

    def run():
        saved = {k: getattr(_kernels, k) for k in ("count_crossings", "track_logs", "entropy_cover_many")}
        for k in saved:
            setattr(_kernels, k, getattr(mod, k))
        try:
            continue_entropy(start, path)
        finally:
            for k, v in saved.items():
                setattr(_kernels, k, v)

    return run


def _best(fn, repeat: int) -> float:
    timer = timeit.Timer(fn)
    n, _ = timer.autorange()
    return min(timer.repeat(repeat=repeat, number=n)) / n


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--size", type=int, default=100_000)
    ap.add_argument("--short", type=int, default=17, help="length of the small-input case")
    args = ap.parse_args(argv)
    re, im, p, q = _inputs(args.size)
    py = _cases(_pykernels, re, im, p, q, args.short)
    py["continue_entropy"] = _end_to_end(_pykernels)
    c = _cases(_ckernels, re, im, p, q, args.short) if _ckernels else {}
    if _ckernels:
        c["continue_entropy"] = _end_to_end(_ckernels)
    print(f"{'kernel':<24}{'python':>14}{'cython':>14}{'speed-up':>10}")
    for name, fn in py.items():
        t_py = _best(fn, args.repeat)
        if name in c:
            t_c = _best(c[name], args.repeat)
            print(f"{name:<24}{t_py * 1e6:>12.1f}us{t_c * 1e6:>12.1f}us{t_py / t_c:>9.1f}x")
        else:
            print(f"{name:<24}{t_py * 1e6:>12.1f}us{'n/a':>14}{'':>10}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
