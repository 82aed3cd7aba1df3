"""Exact samplers for the Bernoulli(e^-1/2), Gaussian, exponential and Laplace laws.

Every sampler takes the :class:`~exactsample.entropy.BitSource` it draws
from as its first argument, and draws fresh deviates from it in program
order. No floating point is used anywhere: discrete outcomes come from
comparisons between lazy deviates, continuous outcomes are returned as
lazy deviates or :class:`~exactsample.creal.CReal` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from exactsample import creal
from exactsample.creal import CReal
from exactsample.entropy import BitSource
from exactsample.errors import InvalidParameter
from exactsample.lazyreal import LazyUniform, cmp_uniform, le_half

Trial = Callable[[BitSource], bool]


@dataclass
class HalfSample:
    """Half-normal draw ``k + frac``."""

    k: int
    frac: LazyUniform

    def to_creal(self) -> CReal:
        return creal.of_bzu(0, self.k, self.frac)


@dataclass
class ExpSample:
    """Standard exponential draw ``k + frac``."""

    k: int
    frac: LazyUniform

    def to_creal(self) -> CReal:
        return creal.of_bzu(0, self.k, self.frac)


def decreasing_trial(src: BitSource, n0: int, x: LazyUniform) -> int:
    """``n0`` plus the length of the strictly decreasing run of fresh deviates below ``x``.

    Given x, ``result - n0 = n`` with probability x^n/n! - x^(n+1)/(n+1)!.
    """
    n = n0
    while True:
        y = LazyUniform(src)
        if cmp_uniform(y, x) >= 0:
            return n
        n += 1
        x = y


def bernoulli_half_exp(src: BitSource) -> bool:
    """True with probability exp(-1/2)."""
    x = LazyUniform(src)
    if le_half(x):
        return decreasing_trial(src, 0, x) % 2 == 1
    return True


def geometric(src: BitSource, trial: Trial, n0: int = 0) -> int:
    """``n0`` plus the number of successes of ``trial`` before its first failure."""
    n = n0
    while trial(src):
        n += 1
    return n


def all_of(src: BitSource, trial: Trial, n: int) -> bool:
    """True iff ``n`` independent runs of ``trial`` all succeed (short-circuits)."""
    if n < 0:
        raise InvalidParameter(f"n must be non-negative, got {n}")
    for _ in range(n):
        if not trial(src):
            return False
    return True


def gaussian_int(src: BitSource) -> int:
    """Integer k >= 0 with probability proportional to exp(-k^2/2)."""
    while True:
        k = geometric(src, bernoulli_half_exp)
        if all_of(src, bernoulli_half_exp, k * (k - 1)):
            return k


def choose3(src: BitSource, m: int) -> int:
    """-1 w.p. 1/m, 0 w.p. 1/m, 1 w.p. (m-2)/m."""
    if m < 2:
        raise InvalidParameter(f"choose3 needs m >= 2, got {m}")
    v = src.rand_uniform(m - 1)
    if v == 0:
        return -1
    if v == 1:
        return 0
    return 1


def thin_bernoulli(src: BitSource, k: int, x: LazyUniform) -> bool:
    """True with probability (2 - x) / (2k + 2)."""
    f = choose3(src, 2 * k + 2)
    if f == 0:
        return True
    if f == -1:
        return cmp_uniform(x, LazyUniform(src)) < 0
    return False


def thinned_trial(src: BitSource, k: int, x: LazyUniform) -> int:
    """Decreasing-run length with each step thinned by :func:`thin_bernoulli`.

    With q = (2k + x) / (2k + 2), returns n with probability
    (xq)^n/n! - (xq)^(n+1)/(n+1)!.
    """
    z = LazyUniform(src)
    if cmp_uniform(x, z) < 0 or thin_bernoulli(src, k, x):
        return 0
    n = 1
    y = z
    while True:
        z = LazyUniform(src)
        if cmp_uniform(y, z) < 0 or thin_bernoulli(src, k, x):
            return n
        n += 1
        y = z


def bernoulli_exp_frac(src: BitSource, k: int, x: LazyUniform) -> bool:
    """True with probability exp(-x (2k + x) / (2k + 2))."""
    return thinned_trial(src, k, x) % 2 == 0


def half_gaussian(src: BitSource) -> HalfSample:
    """Draw from the half-normal law on [0, inf) as an (integer, fraction) pair."""
    while True:
        k = gaussian_int(src)
        x = LazyUniform(src)
        if all_of(src, lambda s: bernoulli_exp_frac(s, k, x), k + 1):
            return HalfSample(k, x)


def gaussian(src: BitSource) -> CReal:
    """Standard normal sample."""
    h = half_gaussian(src)
    b = src.next_bit()
    return creal.of_bzu(b, h.k, h.frac)


def neg_exponential(src: BitSource) -> ExpSample:
    """Standard exponential sample as an (integer, fraction) pair."""
    n = 0
    while True:
        x = LazyUniform(src)
        if decreasing_trial(src, 0, x) % 2 == 0:
            return ExpSample(n, x)
        n += 1


def laplace(src: BitSource, eps_exp: int = 0, mu: CReal | None = None) -> CReal:
    """Laplace sample with location ``mu`` and rate ``2**eps_exp``."""
    if mu is None:
        mu = creal.of_int(0)
    e = neg_exponential(src)
    b = src.next_bit()
    return creal.add(mu, creal.scal_pow2(creal.of_bzu(b, e.k, e.frac), eps_exp))
