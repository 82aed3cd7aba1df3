"""Statistical and exact conformance checks.

Every check returns a :class:`ConformanceReport`; a statistic outside its
threshold is a failed report, not an exception. Reports are pure
functions of their inputs and seed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Hashable, Mapping, Sequence

from exactsample import creal
from exactsample.conformance.constants import CHI2_CRIT_001
from exactsample.conformance.registry import real_sampler
from exactsample.conformance.report import CdfCheckSpec, ConformanceReport
from exactsample.creal import CReal, Dyadic
from exactsample.entropy import BitSource, SeededSource
from exactsample.errors import DegenerateBinning, Undecided
from exactsample.lazyreal import LazyUniform
from exactsample.samplers import laplace

CHECKER_MAX_P = 128
UNDECIDED_BUDGET = 0.001
MIN_BIN_EXPECTED = 5.0


def z_statistic(successes: int, n: int, p: float) -> float:
    """Standardized distance of a binomial frequency from ``p``."""
    if n == 0:
        return math.inf
    f = successes / n
    sd = math.sqrt(p * (1.0 - p) / n)
    if sd == 0.0:
        return 0.0 if f == p else math.inf
    return abs(f - p) / sd


def rate_check(
    name: str,
    trial: Callable[[BitSource], bool],
    p: float,
    trials: int,
    seed: int,
    z_threshold: float = 5.0,
) -> ConformanceReport:
    """Empirical success rate of a boolean sampler against ``p``."""
    src = SeededSource(seed)
    hits = sum(1 for _ in range(trials) if trial(src))
    z = z_statistic(hits, trials, p)
    return ConformanceReport(
        name, {"true": hits, "false": trials - hits}, z, z_threshold, z <= z_threshold, seed, trials
    )


def cdf_check(
    spec: CdfCheckSpec,
    seed: int,
    name: str | None = None,
    max_p: int = CHECKER_MAX_P,
) -> ConformanceReport:
    """Checker-based CDF test: frequency of ``sample < point`` against ``expected_cdf``."""
    if spec.trials < 100:
        raise ValueError("cdf_check needs at least 100 trials")
    draw = real_sampler(spec.sampler, **spec.params)
    src = SeededSource(seed)
    below = above = undecided = 0
    for _ in range(spec.trials):
        try:
            c = creal.checker(draw(src), spec.point, max_p)
        except Undecided:
            undecided += 1
            continue
        if c < 0:
            below += 1
        else:
            above += 1
    z = z_statistic(below, below + above, spec.expected_cdf)
    ok = z <= spec.z_threshold and undecided <= UNDECIDED_BUDGET * spec.trials
    return ConformanceReport(
        name or f"{spec.sampler}-cdf@{spec.point}",
        {"-1": below, "1": above},
        z,
        spec.z_threshold,
        ok,
        seed,
        spec.trials,
        undecided,
    )


def _bin_outcomes(
    observed: Mapping[Hashable, int], expected_pmf: Mapping[Hashable, float]
) -> tuple[list[int], list[float], list[str]]:
    n = sum(observed.values())
    keys = sorted(expected_pmf)
    tail_p = max(0.0, 1.0 - sum(expected_pmf.values()))
    tail_o = sum(c for k, c in observed.items() if k not in expected_pmf)
    cells = [(str(k), observed.get(k, 0), expected_pmf[k] * n) for k in keys]
    if tail_p > 0.0 or tail_o:
        cells.append(("rest", tail_o, tail_p * n))

    # merge runs of cells until each expected count reaches the minimum
    obs, exp, labels = [], [], []
    acc_o, acc_e, acc_l = 0, 0.0, []
    for label, o, e in cells:
        acc_o += o
        acc_e += e
        acc_l.append(label)
        if acc_e >= MIN_BIN_EXPECTED:
            obs.append(acc_o)
            exp.append(acc_e)
            labels.append("+".join(acc_l))
            acc_o, acc_e, acc_l = 0, 0.0, []
    if acc_l:
        if obs:
            obs[-1] += acc_o
            exp[-1] += acc_e
            labels[-1] += "+" + "+".join(acc_l)
        else:
            obs, exp, labels = [acc_o], [acc_e], ["+".join(acc_l)]
    return obs, exp, labels


def chi_square_check(
    observed: Mapping[Hashable, int],
    expected_pmf: Mapping[Hashable, float],
    alpha_critical: float | None = None,
    name: str = "chi-square",
    seed: int | None = None,
) -> ConformanceReport:
    """Pearson goodness of fit.

    Outcomes missing from ``expected_pmf`` share a tail bin carrying the
    leftover probability. Adjacent bins are merged until every expected
    count is at least 5. ``alpha_critical`` defaults to the 0.001 critical
    value for the resulting degrees of freedom.
    """
    obs, exp, labels = _bin_outcomes(observed, expected_pmf)
    if len(obs) < 2:
        raise DegenerateBinning(f"only {len(obs)} bin(s) after merging")
    stat = 0.0
    for o, e in zip(obs, exp):
        if e == 0.0:
            stat = math.inf if o else stat
        else:
            stat += (o - e) ** 2 / e
    df = len(obs) - 1
    crit = CHI2_CRIT_001[df] if alpha_critical is None else alpha_critical
    counts = dict(zip(labels, obs))
    return ConformanceReport(name, counts, stat, crit, stat <= crit, seed, sum(obs))


def ks_statistic(samples: Sequence[float | Fraction], cdf: Callable[[float], float]) -> float:
    xs = sorted(float(s) for s in samples)
    n = len(xs)
    d = 0.0
    for i, x in enumerate(xs):
        f = cdf(x)
        d = max(d, (i + 1) / n - f, f - i / n)
    return d


def ks_check(
    samples: Sequence[float | Fraction],
    cdf: Callable[[float], float],
    threshold: float | None = None,
    bits: int = 8,
    name: str = "ks",
    seed: int | None = None,
) -> ConformanceReport:
    """One-sample Kolmogorov-Smirnov test on ``bits``-bit discretized samples.

    The default threshold 1.95/sqrt(n) is the alpha ~ 0.001 critical
    value; ``2**-bits`` is added to absorb the discretization.
    """
    n = len(samples)
    if threshold is None:
        threshold = 1.95 / math.sqrt(n)
    limit = threshold + 2.0**-bits
    d = ks_statistic(samples, cdf)
    return ConformanceReport(name, {"n": n, "bits": bits}, d, limit, d <= limit, seed, n)


def outward_dyadic(t: float, frac_bits: int = 40) -> Dyadic:
    """A dyadic at least ``t`` (for ``t >= 0``), within ``2**-(frac_bits-1)`` of it."""
    return Dyadic(math.ceil(t * 2**frac_bits) + 1, frac_bits)


def laplace_accuracy_check(
    eps_exp: int,
    mu: CReal,
    beta: float,
    trials: int,
    seed: int,
    radius_scale: float = 1.0,
    name: str | None = None,
    max_p: int = CHECKER_MAX_P,
) -> ConformanceReport:
    """Tail bound P(|X - mu| > log(1/beta) / 2**eps_exp) <= beta for Laplace noise.

    The cut radius is rounded outward to a dyadic, so the counted
    exceedances can only be fewer than the exact ones.
    """
    if not 0.0 < beta < 1.0:
        raise ValueError("beta must lie in (0, 1)")
    if trials * beta < 10:
        raise ValueError("trials * beta must be at least 10")
    radius = radius_scale * math.log(1.0 / beta) / 2.0**eps_exp
    hi = outward_dyadic(radius)
    lo = Dyadic(-hi.num, hi.exp)
    src = SeededSource(seed)
    exceed = undecided = 0
    for _ in range(trials):
        centred = creal.add(laplace(src, eps_exp, mu), creal.neg(mu))
        try:
            if creal.checker(centred, hi, max_p) > 0 or creal.checker(centred, lo, max_p) < 0:
                exceed += 1
        except Undecided:
            undecided += 1
    decided = trials - undecided
    freq = exceed / decided if decided else math.inf
    limit = beta + 5.0 * math.sqrt(beta * (1.0 - beta) / trials)
    ok = freq <= limit and undecided <= UNDECIDED_BUDGET * trials
    return ConformanceReport(
        name or f"laplace-accuracy(beta={beta},eps_exp={eps_exp})",
        {"exceed": exceed, "within": decided - exceed},
        freq,
        limit,
        ok,
        seed,
        trials,
        undecided,
    )


def _random_tree(src: BitSource, depth: int) -> CReal:
    if depth == 0 or src.rand_uniform(3) == 0:
        kind = src.rand_uniform(2)
        if kind == 0:
            return creal.of_int(src.rand_uniform(2000) - 1000)
        if kind == 1:
            return creal.of_uniform(LazyUniform(src))
        return creal.of_bzu(src.next_bit(), src.rand_uniform(20), LazyUniform(src))
    op = src.rand_uniform(2)
    if op == 0:
        return creal.add(_random_tree(src, depth - 1), _random_tree(src, depth - 1))
    if op == 1:
        return creal.neg(_random_tree(src, depth - 1))
    return creal.scal_pow2(_random_tree(src, depth - 1), src.rand_uniform(16) - 8)


def approx_closure_check(
    trees: int, seed: int, max_depth: int = 6, ref_extra: int = 64, name: str = "creal-approx-closure"
) -> ConformanceReport:
    """Random expression trees must honour the approximation contract.

    For each tree and a random precision p in [-8, 60] the approximant at
    p is compared with a reference at P = p + ``ref_extra``; the allowed
    gap is 1 + 2**(p - P). Checked in exact integer arithmetic.
    """
    src = SeededSource(seed)
    violations = 0
    for _ in range(trees):
        x = _random_tree(src, max_depth)
        p = src.rand_uniform(68) - 8
        big = p + ref_extra
        a = x.approx(p)
        ref = x.approx(big)
        scale = 1 << ref_extra
        gap = abs(a * scale - ref)
        if gap > scale + 1:
            violations += 1
    return ConformanceReport(
        name, {"violations": violations}, float(violations), 0.0, violations == 0, seed, trees
    )
