import json
import math
from fractions import Fraction

import pytest

from exactsample import creal
from exactsample.conformance import (
    CdfCheckSpec,
    ConformanceReport,
    MassBracket,
    approx_closure_check,
    cdf_check,
    chi_square_check,
    enumerate_exact,
    ks_check,
    laplace_accuracy_check,
)
from exactsample.conformance import constants as C
from exactsample.conformance import suite
from exactsample.conformance.checks import outward_dyadic, z_statistic
from exactsample.conformance.enumerate import enumerate_counts
from exactsample.conformance.registry import DISCRETE_SAMPLERS, REAL_SAMPLERS, discrete_sampler, real_sampler
from exactsample.creal import Dyadic
from exactsample.entropy import SeededSource
from exactsample.errors import DegenerateBinning
from exactsample.lazyreal import LazyUniform, max2


def brute_force(sampler, depth):
    """Run the sampler on every one of the 2**depth tapes."""
    from exactsample.entropy import TapeSource
    from exactsample.errors import Exhausted

    counts, residual = {}, 0
    for t in range(1 << depth):
        bits = [(t >> (depth - 1 - i)) & 1 for i in range(depth)]
        try:
            out = sampler(TapeSource(bits))
        except Exhausted:
            residual += 1
            continue
        counts[out] = counts.get(out, 0) + 1
    return counts, residual


@pytest.mark.parametrize("name", ["half-exp", "gaussian-int", "exponential-k", "rand-uniform"])
@pytest.mark.parametrize("depth", [0, 1, 5, 11])
def test_tree_enumeration_matches_brute_force(name, depth):
    sampler = discrete_sampler(name)
    assert enumerate_counts(sampler, depth) == brute_force(sampler, depth)


@pytest.mark.parametrize("name", DISCRETE_SAMPLERS)
def test_mass_conservation(name):
    bs = enumerate_exact(name, 12)
    assert sum(b.lower for b in bs) + bs[0].residual == 1


def test_bracket_nesting():
    prev = {b.outcome: b for b in enumerate_exact("half-exp", 6)}
    for depth in (8, 12, 16):
        cur = {b.outcome: b for b in enumerate_exact("half-exp", depth)}
        for k, b in prev.items():
            assert cur[k].lower >= b.lower
            assert cur[k].residual <= b.residual
        prev = cur


def test_enumerate_examples():
    bs = {b.outcome: b for b in enumerate_exact("half-exp", 24)}
    assert bs[True].contains(C.EXP_MINUS_HALF)
    bs = {b.outcome: b for b in enumerate_exact("choose3", 4, m=2)}
    assert bs[-1].contains(0.5) and bs[0].contains(0.5)
    bs = {b.outcome: b.lower for b in enumerate_exact("all-of-fair", 2, n=2)}
    assert bs == {True: Fraction(1, 4), False: Fraction(3, 4)}


def test_enumerate_depth_zero_and_limits():
    (b,) = enumerate_exact("half-exp", 0)
    assert b.outcome is None and b.lower == 0 and b.residual == 1
    with pytest.raises(ValueError):
        enumerate_exact("half-exp", 29)
    with pytest.raises(KeyError):
        enumerate_exact("nope", 3)


def test_mass_bracket():
    b = MassBracket(True, Fraction(1, 4), Fraction(1, 8))
    assert b.upper == Fraction(3, 8)
    assert b.contains(0.3) and not b.contains(0.5)


def test_z_statistic_edges():
    assert z_statistic(5, 10, 0.5) == 0
    assert z_statistic(0, 0, 0.5) == math.inf
    assert z_statistic(10, 10, 1.0) == 0
    assert z_statistic(9, 10, 1.0) == math.inf


def test_cdf_check_examples():
    r = cdf_check(CdfCheckSpec("gaussian", Dyadic(0, 1), 10_000, 0.5), seed=1)
    assert r.passed and r.undecided == 0
    assert r.counts["-1"] + r.counts["1"] == 10_000
    again = cdf_check(CdfCheckSpec("gaussian", Dyadic(0, 1), 10_000, 0.5), seed=1)
    assert again == r
    r = cdf_check(CdfCheckSpec("gaussian", Dyadic(1, 0), 10_000, C.NORMAL_CDF[1.0]), seed=2)
    assert r.passed
    spec = CdfCheckSpec("laplace", Dyadic(1, 0), 10_000, C.LAPLACE_CDF[(1, 1.0)], params={"eps_exp": 0, "mu": 0})
    assert cdf_check(spec, seed=3).passed


def test_cdf_check_rejects_wrong_target():
    r = cdf_check(CdfCheckSpec("uniform", Dyadic(1, 2), 10_000, 0.5), seed=4)
    assert not r.passed and r.statistic > 5


def test_cdf_check_validation():
    with pytest.raises(ValueError):
        CdfCheckSpec("gaussian", Dyadic(0, 0), 1000, 1.5)
    with pytest.raises(ValueError):
        cdf_check(CdfCheckSpec("gaussian", Dyadic(0, 0), 99, 0.5), seed=1)


def test_cdf_check_counts_undecided_separately():
    # a point mass at the checker point is always undecided
    spec = CdfCheckSpec("uniform", Dyadic(1, 1), 100, 0.5)
    r = cdf_check(spec, seed=0, max_p=4)
    assert r.undecided > 0
    assert r.counts["-1"] + r.counts["1"] + r.undecided == 100


def test_chi_square_pass_and_shifted_control():
    src = SeededSource(5)
    pmf = {k: math.exp(-k * k / 2) / C.GAUSS_INT_NORM for k in range(9)}
    from exactsample.samplers import gaussian_int

    counts = {}
    for _ in range(20_000):
        k = gaussian_int(src)
        counts[k] = counts.get(k, 0) + 1
    assert chi_square_check(counts, pmf).passed
    shifted = {k + 1: v for k, v in counts.items()}
    assert not chi_square_check(shifted, pmf).passed


def test_chi_square_binning():
    r = chi_square_check({0: 50, 1: 48, 2: 2}, {0: 0.5, 1: 0.48, 2: 0.02})
    # the last cell (expected 2) is merged into its neighbour
    assert list(r.counts) == ["0", "1+2"]
    assert r.threshold == C.CHI2_CRIT_001[1]
    assert chi_square_check({0: 50, 1: 50}, {0: 0.5, 1: 0.5}, alpha_critical=0.0).passed


def test_chi_square_degenerate():
    with pytest.raises(DegenerateBinning):
        chi_square_check({0: 3, 1: 1}, {0: 0.75, 1: 0.25})


def test_ks_examples():
    src = SeededSource(6)
    maxes = [Fraction(max2(src).get_bits(8), 256) for _ in range(10_000)]
    assert ks_check(maxes, lambda x: x * x).passed
    unis = [Fraction(LazyUniform(src).get_bits(8), 256) for _ in range(10_000)]
    assert ks_check(unis, lambda x: x).passed
    assert not ks_check(unis, lambda x: x * x).passed


def test_ks_threshold():
    r = ks_check([0.5] * 1000, lambda x: x, bits=8)
    assert r.threshold == pytest.approx(1.95 / math.sqrt(1000) + 2**-8)
    assert r.statistic == pytest.approx(0.5)


def test_outward_dyadic():
    for t in (0.0, 0.1, math.log(10), 4.605170185988092):
        d = outward_dyadic(t)
        assert Fraction(t) < d.as_fraction() <= Fraction(t) + Fraction(2, 2**40)


def test_laplace_accuracy_examples():
    zero = creal.of_int(0)
    r = laplace_accuracy_check(0, zero, 0.1, 20_000, seed=7)
    assert r.passed
    assert abs(r.statistic - 0.1) < 5 * math.sqrt(0.09 / 20_000)
    assert not laplace_accuracy_check(0, zero, 0.1, 20_000, seed=7, radius_scale=0.5).passed
    shifted = laplace_accuracy_check(1, creal.parse_decimal("2.5"), 0.05, 20_000, seed=8)
    assert shifted.passed


def test_laplace_accuracy_validation():
    with pytest.raises(ValueError):
        laplace_accuracy_check(0, creal.of_int(0), 0.01, 100, seed=1)
    with pytest.raises(ValueError):
        laplace_accuracy_check(0, creal.of_int(0), 1.5, 100, seed=1)


def test_approx_closure_check_small():
    r = approx_closure_check(500, seed=9)
    assert r.passed and r.counts == {"violations": 0}


def test_report_json_roundtrip():
    r = ConformanceReport("t", {"a": 1}, 1.5, 5.0, True, 3, 100, 2)
    line = r.to_json()
    d = json.loads(line)
    assert list(d) == ["test", "counts", "statistic", "threshold", "pass", "seed", "trials", "undecided"]
    assert ConformanceReport.from_json(line) == r
    inf = ConformanceReport("t", {}, math.inf, 1.0, False, None, 1)
    assert ConformanceReport.from_json(inf.to_json()).statistic == math.inf
    assert r.summary().startswith("PASS t:")


@pytest.mark.parametrize("name", REAL_SAMPLERS)
def test_real_registry(name):
    params = {"eps_exp": 1, "mu": "0.5"} if name == "laplace" else {}
    x = real_sampler(name, **params)(SeededSource(1))
    assert isinstance(x, creal.CReal)
    with pytest.raises(KeyError):
        real_sampler("nope")


def test_suite_is_seed_deterministic_and_job_independent():
    names = ["choose3-enum", "max2-ks", "gaussian-cdf@0"]
    a = suite.run_suite(names, seed=11, trials=2000)
    b = suite.run_suite(names, seed=11, trials=2000, jobs=2)
    assert [r.report for r in a] == [r.report for r in b]
    c = suite.run_suite(["gaussian-cdf@0"], seed=12, trials=2000)
    assert c[0].report.counts != a[2].report.counts


def test_suite_selection():
    assert "control:ks-uniform-vs-x2" in suite.select(negative_controls=True)
    assert all(not n.startswith("control:") for n in suite.select())
    with pytest.raises(KeyError):
        suite.select(["missing"])


def test_negative_controls_fail():
    fast = ["control:ks-uniform-vs-x2", "control:gaussian-cdf-wrong-target"]
    for r in suite.run_suite(fast):
        assert not r.report.passed
