"""Named samplers the harness and the CLI can refer to by id."""

from __future__ import annotations

from typing import Any, Callable, Hashable

from exactsample import creal, samplers
from exactsample.creal import CReal
from exactsample.entropy import BitSource
from exactsample.lazyreal import LazyUniform, max2

DiscreteSampler = Callable[[BitSource], Hashable]
RealSampler = Callable[[BitSource], CReal]


def _fair_bit_trial(src: BitSource) -> bool:
    return src.next_bit() == 1


def discrete_sampler(name: str, **params: Any) -> DiscreteSampler:
    """Samplers with a discrete outcome, suitable for exact enumeration."""
    if name == "half-exp":
        return samplers.bernoulli_half_exp
    if name == "gaussian-int":
        return samplers.gaussian_int
    if name == "choose3":
        m = int(params.get("m", 4))
        return lambda src: samplers.choose3(src, m)
    if name == "all-of-fair":
        n = int(params.get("n", 2))
        return lambda src: samplers.all_of(src, _fair_bit_trial, n)
    if name == "exponential-k":
        return lambda src: samplers.neg_exponential(src).k
    if name == "rand-uniform":
        bound = int(params.get("bound", 2))
        return lambda src: src.rand_uniform(bound)
    raise KeyError(f"unknown discrete sampler {name!r}")


DISCRETE_SAMPLERS = ("half-exp", "gaussian-int", "choose3", "all-of-fair", "exponential-k", "rand-uniform")


def real_sampler(name: str, **params: Any) -> RealSampler:
    """Samplers whose outcome is a constructive real."""
    if name == "uniform":
        return lambda src: creal.of_uniform(LazyUniform(src))
    if name == "max2":
        return lambda src: creal.of_uniform(max2(src))
    if name == "gaussian":
        return samplers.gaussian
    if name == "half-gaussian":
        return lambda src: samplers.half_gaussian(src).to_creal()
    if name == "exponential":
        return lambda src: samplers.neg_exponential(src).to_creal()
    if name == "laplace":
        eps_exp = int(params.get("eps_exp", 0))
        mu = params.get("mu", 0)
        mu_real = mu if isinstance(mu, CReal) else creal.parse_decimal(str(mu))
        return lambda src: samplers.laplace(src, eps_exp, mu_real)
    raise KeyError(f"unknown real sampler {name!r}")


REAL_SAMPLERS = ("uniform", "max2", "gaussian", "half-gaussian", "exponential", "laplace")
