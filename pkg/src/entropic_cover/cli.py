"""Command-line front end: ``entropic-cover <command> [options]``.

Every command writes one JSON document (``"schema": "1"``) to stdout or to
``--out``. Exit status is 0 when all checks pass, 1 when a check exceeds its
tolerance and 2 for usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import _kernels
from .asymptotics import binomial_asymptotic_check
from .certify import default_pool, find_certificate, named_target, pool_from_spec, verify_certificate
from .cover import CoverPoint, PolyPath, continue_point
from .entropy import continue_entropy, entropy_cover
from .errors import DomainError, RegimeError, StepResolutionError
from .fourterm import LatticeVariant
from .verify import DEFAULT_TOLERANCE, compare_variants

SCHEMA = "1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_DEFAULT_TOLERANCE = {
    "eval": 0.0,
    "continue": 1e-8,
    "verify-4term": DEFAULT_TOLERANCE,
    "certify": 0.0,
    "asymptotics": 0.0,
}


@dataclass
class RunConfig:
    command: str
    tolerance: float
    seed: int = 0
    out: str | None = None
    options: dict = field(default_factory=dict)


class UsageError(Exception):
    """Bad flag value; the message names the flag."""


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _json_arg(text: str, flag: str):
    try:
        if text.startswith("@"):
            with open(text[1:], encoding="utf-8") as fh:
                return json.load(fh)
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _cmd_eval(cfg: RunConfig) -> tuple[dict, bool]:
    data = _json_arg(cfg.options["point"], "--point")
    if not isinstance(data, dict):
        raise UsageError("--point: expected a JSON object with re, im, p, q")
    pt = CoverPoint.from_json(data)
    return {"point": pt.to_json(), "phi": _pair(entropy_cover(pt))}, True


def _cmd_continue(cfg: RunConfig) -> tuple[dict, bool]:
    start_data = _json_arg(cfg.options["start"], "--start")
    if not isinstance(start_data, dict):
        raise UsageError("--start: expected a JSON cover point")
    start = CoverPoint.from_json(start_data)
    path = PolyPath.from_json(_json_arg(cfg.options["path"], "--path"), start.side)
    end = continue_point(start, path)
    continued = continue_entropy(start, path, steps=cfg.options["steps"])
    closed = entropy_cover(end)
    diff = abs(continued - closed)
    ok = diff < cfg.tolerance
    return {
        "start": start.to_json(),
        "end": end.to_json(),
        "continued": _pair(continued),
        "closed_form": _pair(closed),
        "difference": diff,
        "tolerance": cfg.tolerance,
        "passed": ok,
    }, ok


def _cmd_verify(cfg: RunConfig) -> tuple[dict, bool]:
    o = cfg.options
    variants = tuple(LatticeVariant) if o["compare_variants"] else (LatticeVariant.MONODROMY,)
    reports = compare_variants(o["samples"], o["params_per_sample"], o["param_range"], cfg.seed,
                               variants, cfg.tolerance)
    if not o["compare_variants"]:
        rep = reports[0]
        return rep.to_json(), rep.passed
    annihilating = [r.variant.value for r in reports if r.passed]
    return {
        "variants": [r.to_json() for r in reports],
        "annihilating": annihilating,
        "passed": bool(annihilating),
    }, bool(annihilating)


def _cmd_certify(cfg: RunConfig) -> tuple[dict, bool]:
    name, args, target = named_target(cfg.options["target"])
    if cfg.options["pool_spec"]:
        spec = _json_arg(cfg.options["pool_spec"], "--pool-spec")
        if not isinstance(spec, dict):
            raise UsageError("--pool-spec: expected a JSON object")
        pool = pool_from_spec(spec, target)
    else:
        pool = default_pool(name, args)
    cert = find_certificate(target, pool)
    verified = verify_certificate(target, cert)
    return {
        "target": cfg.options["target"],
        "target_sum": target.to_json(),
        "pool_size": len(pool),
        "found": cert is not None,
        "verified": verified,
        "certificate": None if cert is None else cert.to_json(),
    }, verified


def _parse_number(text: str, flag: str):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{flag}: expected a rational or decimal number, got {text!r}") from exc


def _cmd_asymptotics(cfg: RunConfig) -> tuple[dict, bool]:
    a = _parse_number(cfg.options["a"], "--a")
    b = _parse_number(cfg.options["b"], "--b")
    try:
        ns = [int(s) for s in cfg.options["n"].split(",") if s.strip()]
    except ValueError as exc:
        raise UsageError(f"--n: expected comma-separated integers, got {cfg.options['n']!r}") from exc
    rep = binomial_asymptotic_check(a, b, sorted(ns))
    ok = rep.errors_non_increasing()
    if cfg.options["bound"] is not None:
        ok = ok and max(rep.scaled_errors) <= cfg.options["bound"]
    out = rep.to_json()
    out.update(errors_non_increasing=rep.errors_non_increasing(), bound=cfg.options["bound"], passed=ok)
    return out, ok


_COMMANDS = {
    "eval": _cmd_eval,
    "continue": _cmd_continue,
    "verify-4term": _cmd_verify,
    "certify": _cmd_certify,
    "asymptotics": _cmd_asymptotics,
}


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from exc
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=_positive_float, default=argparse.SUPPRESS,
                        help="override the command's pass/fail tolerance")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="PRNG seed (default 0)")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the JSON report here instead of stdout")

    parser = argparse.ArgumentParser(prog="entropic-cover", parents=[common],
                                     description="Entropy on the abelian cover of C minus {0, 1}.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate the entropy at a point of the cover")
    p.add_argument("--point", required=True, help='JSON like {"re":0.5,"im":0,"p":0,"q":0} or @file')

    p = sub.add_parser("continue", parents=[common], help="continue along a path and compare with the closed form")
    p.add_argument("--start", required=True, help="start cover point as JSON or @file")
    p.add_argument("--path", required=True, help="JSON array of [re, im] vertices or @file")
    p.add_argument("--steps", type=int, default=16, help="initial sub-steps per segment")

    p = sub.add_parser("verify-4term", parents=[common], help="random sweep of the extended 4-term relation")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--params-per-sample", type=int, default=200)
    p.add_argument("--param-range", type=int, default=8, help="lattice parameters are even in [-K, K]")
    p.add_argument("--compare-variants", action="store_true",
                   help="also evaluate the two sign-flipped branch formulas for x2/x3")

    p = sub.add_parser("certify", parents=[common], help="exact certificate for a named target")
    p.add_argument("--target", required=True,
                   help="lemma1[:k], eq2t3[:x], lemma2:<p>,<q>[,x], kernel-c[:x], "
                        "beta2-symmetry[:a], beta2-inversion[:a]")
    p.add_argument("--pool-spec", default=None, help="pool description as JSON or @file (default: per target)")

    p = sub.add_parser("asymptotics", parents=[common], help="binomial asymptotics from the Stirling series")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--n", default="100,1000,10000", help="comma-separated n values")
    p.add_argument("--bound", type=_positive_float, default=None, help="fail if any n*|error| exceeds this")
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    opts = {k: v for k, v in vars(ns).items() if k not in ("command", "tolerance", "seed", "out")}
    tol = getattr(ns, "tolerance", None)
    return RunConfig(
        command=ns.command,
        tolerance=_DEFAULT_TOLERANCE[ns.command] if tol is None else tol,
        seed=getattr(ns, "seed", 0),
        out=getattr(ns, "out", None),
        options=opts,
    )


def run(cfg: RunConfig) -> int:
    try:
        body, ok = _COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"entropic-cover {cfg.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, RegimeError, StepResolutionError) as exc:
        print(f"entropic-cover {cfg.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {"schema": SCHEMA, "command": cfg.command, "backend": _kernels.BACKEND, **body}
    text = json.dumps(report, indent=2) + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    return run(_config(ns))


if __name__ == "__main__":
    sys.exit(main())
