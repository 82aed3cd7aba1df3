"""Command-line front end: ``exactsample {sample,check,enumerate}``.

Exit codes: 0 success, 1 a conformance check failed, 2 invalid usage,
3 sampler or internal error (including an exhausted replay tape).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Any, TextIO

from exactsample import creal, samplers
from exactsample.conformance import suite
from exactsample.conformance.enumerate import MAX_DEPTH, enumerate_exact
from exactsample.conformance.registry import DISCRETE_SAMPLERS, discrete_sampler
from exactsample.entropy import DEFAULT_SEED, BitSource, RecordingSource, SeededSource, TapeSource, read_tape, write_tape
from exactsample.errors import Exhausted, Undecided
from exactsample.lazyreal import LazyUniform, max2

DISTRIBUTIONS = ("uniform", "max2", "gaussian", "half-gaussian", "exponential", "laplace", "gaussian-int", "half-exp")
FORMATS = ("text", "csv", "json-lines")


class UsageError(Exception):
    pass


def _bits(u: LazyUniform) -> str:
    return "".join(map(str, u.cells))


def _sample_row(dist: str, src: BitSource, digits: int, eps_exp: int, mu: creal.CReal) -> dict[str, Any]:
    if dist == "uniform":
        return {"value": creal.to_decimal(creal.of_uniform(LazyUniform(src)), digits)}
    if dist == "max2":
        return {"value": creal.to_decimal(creal.of_uniform(max2(src)), digits)}
    if dist == "gaussian":
        return {"value": creal.to_decimal(samplers.gaussian(src), digits)}
    if dist == "laplace":
        return {"value": creal.to_decimal(samplers.laplace(src, eps_exp, mu), digits)}
    if dist == "gaussian-int":
        return {"value": str(samplers.gaussian_int(src))}
    if dist == "half-exp":
        return {"value": "true" if samplers.bernoulli_half_exp(src) else "false"}
    if dist in ("half-gaussian", "exponential"):
        draw = samplers.half_gaussian(src) if dist == "half-gaussian" else samplers.neg_exponential(src)
        value = creal.to_decimal(draw.to_creal(), digits)
        return {"value": value, "k": draw.k, "frac_bits": _bits(draw.frac)}
    raise UsageError(f"unknown distribution {dist!r}")


class _Writer:
    def __init__(self, fmt: str, out: TextIO, columns: list[str]):
        self.fmt = fmt
        self.out = out
        self.columns = columns
        if fmt == "csv":
            self._csv = csv.writer(out, lineterminator="\n")
            self._csv.writerow(columns)

    def write(self, row: dict[str, Any]) -> None:
        if self.fmt == "json-lines":
            self.out.write(json.dumps(row) + "\n")
        elif self.fmt == "csv":
            self._csv.writerow([row.get(c, "") for c in self.columns])
        else:
            self.out.write("\t".join(str(row[c]) for c in self.columns if c != "index") + "\n")
        self.out.flush()


def run_sample(args: argparse.Namespace, out: TextIO) -> int:
    if args.dist != "laplace" and (args.eps_exp is not None or args.mu is not None):
        raise UsageError("--eps-exp and --mu only apply to --dist laplace")
    if args.record and args.replay:
        raise UsageError("--record and --replay are mutually exclusive")
    try:
        mu = creal.parse_decimal(args.mu) if args.mu is not None else creal.of_int(0)
    except ValueError:
        raise UsageError(f"--mu must be a decimal number, got {args.mu!r}") from None
    eps_exp = args.eps_exp or 0

    src: BitSource
    if args.replay:
        src = TapeSource(read_tape(args.replay))
    else:
        src = SeededSource(args.seed)
    recorder = RecordingSource(src) if args.record else None
    if recorder is not None:
        src = recorder

    columns = ["index", "value"]
    if args.dist in ("half-gaussian", "exponential"):
        columns += ["k", "frac_bits"]
    writer = _Writer(args.format, out, columns)
    try:
        for i in range(args.count):
            row = {"index": i, **_sample_row(args.dist, src, args.digits, eps_exp, mu)}
            writer.write(row)
    except (Exhausted, Undecided) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    finally:
        if recorder is not None:
            write_tape(args.record, recorder.log)
    return 0


def run_check(args: argparse.Namespace, out: TextIO) -> int:
    if args.list:
        for name, check in suite.CHECKS.items():
            tag = " (negative control)" if check.negative_control else ""
            out.write(f"{name}{tag}\n")
        return 0
    try:
        names = suite.select(args.only, args.negative_controls)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    if args.trials is not None:
        for name in names:
            recommended = suite.CHECKS[name].trials
            if args.trials < recommended:
                print(
                    f"warning: --trials {args.trials} is below the recommended {recommended} for {name}",
                    file=sys.stderr,
                )
    results = suite.run_suite(names, seed=args.seed, trials=args.trials, jobs=args.jobs)
    ok = True
    for r in results:
        expected = not suite.CHECKS[r.check].negative_control
        ok &= r.report.passed == expected
        if args.format == "text":
            out.write(r.report.summary() + "\n")
        else:
            out.write(r.report.to_json() + "\n")
    return 0 if ok else 1


def _fmt_mass(num: int, depth: int) -> str:
    return f"{num}/2^{depth}"


def run_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    if args.dist not in DISCRETE_SAMPLERS:
        print(
            f"error: enumeration supports {', '.join(DISCRETE_SAMPLERS)}; got {args.dist!r}",
            file=sys.stderr,
        )
        return 2
    if not 0 <= args.depth <= MAX_DEPTH:
        raise UsageError(f"--depth must lie in [0, {MAX_DEPTH}]")
    params = {"m": args.m, "n": args.n, "bound": args.bound}
    sampler = discrete_sampler(args.dist, **{k: v for k, v in params.items() if v is not None})
    brackets = enumerate_exact(sampler, args.depth)
    denom = 1 << args.depth
    writer = _Writer(args.format, out, ["outcome", "lower", "residual"])
    if args.format == "text":
        out.write("outcome\tlower\tresidual\n")
    for b in brackets:
        if b.outcome is None:
            outcome = "(none)"
        elif isinstance(b.outcome, bool):
            outcome = "true" if b.outcome else "false"
        else:
            outcome = str(b.outcome)
        writer.write(
            {
                "outcome": outcome,
                "lower": _fmt_mass(int(b.lower * denom), args.depth),
                "residual": _fmt_mass(int(b.residual * denom), args.depth),
            }
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="exactsample", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="draw exact samples and render them in decimal")
    p.add_argument("--dist", required=True, choices=DISTRIBUTIONS)
    p.add_argument("-n", "--count", type=int, default=1)
    p.add_argument("--digits", type=int, default=10)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--eps-exp", type=int, default=None, help="laplace rate is 2**eps_exp")
    p.add_argument("--mu", default=None, help="laplace location, exact decimal")
    p.add_argument("--record", metavar="PATH", help="save consumed entropy as a tape file")
    p.add_argument("--replay", metavar="PATH", help="draw entropy from a tape file")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=run_sample)

    p = sub.add_parser("check", help="run the conformance suite")
    p.add_argument("--only", action="append", metavar="NAME")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--negative-controls", action="store_true", help="run the controls, which must fail")
    p.add_argument("--list", action="store_true", help="list check names and exit")
    p.add_argument("--format", choices=("json-lines", "text"), default="json-lines")
    p.set_defaults(func=run_check)

    p = sub.add_parser("enumerate", help="exact probability brackets by tape enumeration")
    p.add_argument("--dist", required=True)
    p.add_argument("--depth", type=int, default=16)
    p.add_argument("--m", type=int, default=None, help="choose3 outcome count")
    p.add_argument("--n", type=int, default=None, help="all-of-fair trial count")
    p.add_argument("--bound", type=int, default=None, help="rand-uniform upper bound")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=run_enumerate)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    for name in ("count", "digits"):
        if getattr(args, name, 1) is not None and getattr(args, name, 1) < 1:
            parser.error(f"--{name} must be positive")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    if getattr(args, "trials", None) is not None and args.trials < 1:
        parser.error("--trials must be positive")
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.error(str(exc))
    except (Exhausted, Undecided) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
