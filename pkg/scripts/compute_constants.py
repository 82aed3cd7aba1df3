"""Recompute the frozen reference values in exactsample.conformance.constants.

Needs mpmath and scipy (the ``test`` extra). Prints a Python snippet that
can be diffed against constants.py.

    python3 scripts/compute_constants.py
"""

from dataclasses import dataclass

import mpmath
from scipy import stats


@dataclass
class Config:
    dps: int = 40
    normal_points: tuple = (-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0)
    laplace_rates: tuple = (1, 2)
    laplace_points: tuple = (-1.0, 0.0, 1.0)
    chi2_alpha: float = 0.001
    chi2_max_df: int = 15


def main(cfg: Config = Config()) -> None:
    mpmath.mp.dps = cfg.dps
    e = mpmath.e
    half_exp = mpmath.exp(-0.5)
    values = {
        "EXP_MINUS_HALF": half_exp,
        "EXP_MINUS_ONE": 1 / e,
        "ONE_MINUS_EXP_MINUS_ONE": 1 - 1 / e,
        "E_MINUS_ONE": e - 1,
        "GEOMETRIC_HALF_EXP_MEAN": half_exp / (1 - half_exp),
        "EXP_MINUS_0375": mpmath.exp(-0.375),
        "GAUSS_INT_NORM": mpmath.nsum(lambda k: mpmath.exp(-k * k / 2), [0, mpmath.inf]),
        "HALF_GAUSS_NORM": mpmath.sqrt(mpmath.pi / 2),
        "HALF_GAUSS_BELOW_ONE": mpmath.erf(1 / mpmath.sqrt(2)),
    }
    for name, v in values.items():
        print(f"{name} = {mpmath.nstr(v, 18)}")

    print("NORMAL_CDF = {")
    for x in cfg.normal_points:
        print(f"    {x}: {mpmath.nstr(mpmath.ncdf(x), 18)},")
    print("}")

    print("LAPLACE_CDF = {")
    for rate in cfg.laplace_rates:
        for x in cfg.laplace_points:
            v = mpmath.exp(rate * x) / 2 if x < 0 else 1 - mpmath.exp(-rate * x) / 2
            print(f"    ({rate}, {x}): {mpmath.nstr(v, 18)},")
    print("}")

    print("CHI2_CRIT_001 = {")
    for df in range(1, cfg.chi2_max_df + 1):
        print(f"    {df}: {stats.chi2.isf(cfg.chi2_alpha, df)!r},")
    print("}")


if __name__ == "__main__":
    main()
