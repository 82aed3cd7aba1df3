"""Time each sampler and report bits of entropy consumed per draw.

    python3 scripts/bench_samplers.py --draws 20000
"""

import argparse
import time
from dataclasses import dataclass

from exactsample import creal, samplers
from exactsample.entropy import RecordingSource, SeededSource
from exactsample.lazyreal import LazyUniform, max2


@dataclass
class BenchConfig:
    draws: int = 10_000
    seed: int = 1
    digits: int = 0  # >0 also renders each real to this many decimals


def _cases(digits):
    def real(f):
        if digits:
            return lambda s: creal.to_decimal(f(s), digits)
        return f

    return {
        "bernoulli_half_exp": samplers.bernoulli_half_exp,
        "gaussian_int": samplers.gaussian_int,
        "choose3(4)": lambda s: samplers.choose3(s, 4),
        "neg_exponential": real(lambda s: samplers.neg_exponential(s).to_creal()),
        "half_gaussian": real(lambda s: samplers.half_gaussian(s).to_creal()),
        "gaussian": real(samplers.gaussian),
        "laplace": real(lambda s: samplers.laplace(s, 0)),
        "max2": real(lambda s: creal.of_uniform(max2(s))),
        "uniform": real(lambda s: creal.of_uniform(LazyUniform(s))),
    }


def run(cfg: BenchConfig) -> None:
    print(f"{'sampler':<20} {'us/draw':>9} {'bits/draw':>10}")
    for name, draw in _cases(cfg.digits).items():
        src = RecordingSource(SeededSource(cfg.seed))
        t0 = time.perf_counter()
        for _ in range(cfg.draws):
            draw(src)
        dt = time.perf_counter() - t0
        print(f"{name:<20} {1e6 * dt / cfg.draws:>9.1f} {len(src.log) / cfg.draws:>10.2f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--draws", type=int, default=BenchConfig.draws)
    p.add_argument("--seed", type=int, default=BenchConfig.seed)
    p.add_argument("--digits", type=int, default=BenchConfig.digits)
    run(BenchConfig(**vars(p.parse_args())))
