"""The named conformance suite run by ``exactsample check`` and the acceptance tests."""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from exactsample import creal, samplers
from exactsample.conformance import constants as C
from exactsample.conformance.checks import (
    approx_closure_check,
    cdf_check,
    chi_square_check,
    ks_check,
    laplace_accuracy_check,
    rate_check,
)
from exactsample.conformance.enumerate import enumerate_counts
from exactsample.conformance.registry import discrete_sampler
from exactsample.conformance.report import CdfCheckSpec, ConformanceReport
from exactsample.creal import Dyadic
from exactsample.entropy import DEFAULT_SEED, SeededSource, shard_seed
from exactsample.lazyreal import LazyUniform, max2


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[int, int | None], ConformanceReport]
    trials: int
    negative_control: bool = False


@dataclass
class SuiteResult:
    check: str
    report: ConformanceReport
    seconds: float


def _bracket_report(name: str, sampler: str, depth: int, outcome, target: float, **params) -> ConformanceReport:
    counts, residual = enumerate_counts(discrete_sampler(sampler, **params), depth)
    denom = 1 << depth
    lower = Fraction(counts.get(outcome, 0), denom)
    upper = lower + Fraction(residual, denom)
    t = Fraction(target)
    miss = float(max(lower - t, t - upper, Fraction(0)))
    tally = {str(k): v for k, v in counts.items()}
    tally["residual"] = residual
    return ConformanceReport(name, tally, miss, 0.0, miss == 0.0, None, denom)


def _draw_counts(draw: Callable, n: int, seed: int) -> dict[int, int]:
    src = SeededSource(seed)
    counts: dict[int, int] = {}
    for _ in range(n):
        k = draw(src)
        counts[k] = counts.get(k, 0) + 1
    return counts


def _gauss_int_pmf(kmax: int = 8) -> dict[int, float]:
    return {k: math.exp(-k * k / 2) / C.GAUSS_INT_NORM for k in range(kmax + 1)}


def _exp_k_pmf(kmax: int = 4) -> dict[int, float]:
    return {j: C.ONE_MINUS_EXP_MINUS_ONE * C.EXP_MINUS_ONE**j for j in range(kmax + 1)}


def _gaussian_int_chi2(name, shift=0):
    def run(seed, trials):
        n = trials or 100_000
        counts = _draw_counts(lambda s: samplers.gaussian_int(s) + shift, n, seed)
        return chi_square_check(counts, _gauss_int_pmf(), name=name, seed=seed)

    return run


def _exp_k_chi2(name):
    def run(seed, trials):
        n = trials or 100_000
        counts = _draw_counts(lambda s: samplers.neg_exponential(s).k, n, seed)
        return chi_square_check(counts, _exp_k_pmf(), name=name, seed=seed)

    return run


def _ks_uniform_bits(name, draw, cdf, bits=8):
    def run(seed, trials):
        n = trials or 10_000
        src = SeededSource(seed)
        xs = [Fraction(draw(src).get_bits(bits), 1 << bits) for _ in range(n)]
        return ks_check(xs, cdf, bits=bits, name=name, seed=seed)

    return run


def _cdf(name, sampler, point: Dyadic, expected, trials=10_000, **params):
    def run(seed, n):
        spec = CdfCheckSpec(sampler, point, n or trials, expected, params=params)
        return cdf_check(spec, seed, name=name)

    return run


def _rate(name, trial, p, trials):
    def run(seed, n):
        return rate_check(name, trial, p, n or trials, seed)

    return run


def _dyadic(x: float) -> Dyadic:
    f = Fraction(x)
    return Dyadic(f.numerator, f.denominator.bit_length() - 1)


def _build_checks() -> list[Check]:
    checks = [
        Check(
            "creal-approx-closure",
            lambda seed, n: approx_closure_check(n or 10_000, seed),
            10_000,
        ),
        Check(
            "half-exp-enum",
            lambda seed, n: _bracket_report("half-exp-enum", "half-exp", 24, True, C.EXP_MINUS_HALF),
            1 << 24,
        ),
        Check("half-exp-rate", _rate("half-exp-rate", samplers.bernoulli_half_exp, C.EXP_MINUS_HALF, 1_000_000), 1_000_000),
        Check(
            "choose3-enum",
            lambda seed, n: _bracket_report("choose3-enum", "choose3", 8, 1, 0.5, m=4),
            1 << 8,
        ),
        Check("gaussian-int-chi2", _gaussian_int_chi2("gaussian-int-chi2"), 100_000),
    ]
    for x, phi in C.NORMAL_CDF.items():
        name = f"gaussian-cdf@{x:g}"
        checks.append(Check(name, _cdf(name, "gaussian", _dyadic(x), phi), 10_000))
    checks += [
        Check(
            "half-gaussian-cdf@1",
            _cdf("half-gaussian-cdf@1", "half-gaussian", Dyadic(1, 0), C.HALF_GAUSS_BELOW_ONE),
            10_000,
        ),
        Check(
            "exponential-k0",
            _rate("exponential-k0", lambda s: samplers.neg_exponential(s).k == 0, C.ONE_MINUS_EXP_MINUS_ONE, 100_000),
            100_000,
        ),
        Check("exponential-k-chi2", _exp_k_chi2("exponential-k-chi2"), 100_000),
    ]
    for eps_exp in (0, 1):
        for x in (-1.0, 0.0, 1.0):
            name = f"laplace-cdf(eps_exp={eps_exp})@{x:g}"
            expected = C.LAPLACE_CDF[(1 << eps_exp, x)]
            checks.append(Check(name, _cdf(name, "laplace", _dyadic(x), expected, eps_exp=eps_exp, mu=0), 10_000))
    zero = creal.of_int(0)
    for beta, eps_exp in ((0.1, 0), (0.01, 1)):
        name = f"laplace-accuracy(beta={beta})"
        checks.append(
            Check(
                name,
                lambda seed, n, beta=beta, eps_exp=eps_exp, name=name: laplace_accuracy_check(
                    eps_exp, zero, beta, n or 100_000, seed, name=name
                ),
                100_000,
            )
        )
    checks.append(Check("max2-ks", _ks_uniform_bits("max2-ks", max2, lambda x: x * x), 10_000))

    # negative controls: each must FAIL at the same thresholds
    checks += [
        Check(
            "control:gaussian-int-chi2-shifted",
            _gaussian_int_chi2("control:gaussian-int-chi2-shifted", shift=1),
            100_000,
            True,
        ),
        Check(
            "control:ks-uniform-vs-x2",
            _ks_uniform_bits("control:ks-uniform-vs-x2", LazyUniform, lambda x: x * x),
            10_000,
            True,
        ),
        Check(
            "control:laplace-accuracy-half-radius",
            lambda seed, n: laplace_accuracy_check(
                0, zero, 0.1, n or 100_000, seed, radius_scale=0.5, name="control:laplace-accuracy-half-radius"
            ),
            100_000,
            True,
        ),
        Check(
            "control:gaussian-cdf-wrong-target",
            _cdf("control:gaussian-cdf-wrong-target", "gaussian", Dyadic(1, 0), C.NORMAL_CDF[0.5]),
            10_000,
            True,
        ),
        Check(
            "control:half-exp-enum-wrong-target",
            lambda seed, n: _bracket_report("control:half-exp-enum-wrong-target", "half-exp", 24, True, 0.6),
            1 << 24,
            True,
        ),
    ]
    return checks


CHECKS: dict[str, Check] = {c.name: c for c in _build_checks()}


def check_seed(seed: int, name: str) -> int:
    return shard_seed(seed, name)


def run_check(name: str, seed: int = DEFAULT_SEED, trials: int | None = None) -> SuiteResult:
    check = CHECKS[name]
    t0 = time.perf_counter()
    report = check.run(check_seed(seed, name), trials)
    return SuiteResult(name, report, time.perf_counter() - t0)


def _run_check_args(args):
    return run_check(*args)


def select(only: list[str] | None = None, negative_controls: bool = False) -> list[str]:
    if only:
        unknown = [n for n in only if n not in CHECKS]
        if unknown:
            raise KeyError(f"unknown checks: {', '.join(unknown)}")
        return list(only)
    return [n for n, c in CHECKS.items() if c.negative_control == negative_controls]


def run_suite(
    names: list[str] | None = None,
    seed: int = DEFAULT_SEED,
    trials: int | None = None,
    jobs: int = 1,
) -> list[SuiteResult]:
    """Run the named checks (default: every positive check).

    Each check draws from its own source seeded by (``seed``, check
    name), so results do not depend on ``jobs`` or on execution order.
    """
    names = select() if names is None else names
    args = [(n, seed, trials) for n in names]
    if jobs <= 1:
        return [run_check(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_check_args, args))
