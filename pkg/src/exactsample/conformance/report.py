"""Result records produced by the conformance harness."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Hashable

from exactsample.creal import Dyadic


@dataclass
class CdfCheckSpec:
    sampler: str
    point: Dyadic
    trials: int
    expected_cdf: float
    z_threshold: float = 5.0
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not 0.0 <= self.expected_cdf <= 1.0:
            raise ValueError(f"expected_cdf must lie in [0, 1], got {self.expected_cdf}")


@dataclass
class MassBracket:
    """Exact probability bracket ``[lower, lower + residual]`` for one outcome."""

    outcome: Hashable
    lower: Fraction
    residual: Fraction

    @property
    def upper(self) -> Fraction:
        return self.lower + self.residual

    def contains(self, p: float | Fraction) -> bool:
        return self.lower <= Fraction(p) <= self.upper


@dataclass
class ConformanceReport:
    test: str
    counts: dict[str, int]
    statistic: float
    threshold: float
    passed: bool
    seed: int | None
    trials: int
    undecided: int = 0

    def to_dict(self) -> dict[str, Any]:
        stat = self.statistic if math.isfinite(self.statistic) else str(self.statistic)
        return {
            "test": self.test,
            "counts": self.counts,
            "statistic": stat,
            "threshold": self.threshold,
            "pass": self.passed,
            "seed": self.seed,
            "trials": self.trials,
            "undecided": self.undecided,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def from_json(cls, line: str) -> ConformanceReport:
        d = json.loads(line)
        return cls(
            test=d["test"],
            counts=d["counts"],
            statistic=float(d["statistic"]),
            threshold=float(d["threshold"]),
            passed=bool(d["pass"]),
            seed=d["seed"],
            trials=int(d["trials"]),
            undecided=int(d["undecided"]),
        )

    def summary(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return (
            f"{flag} {self.test}: statistic={self.statistic:.6g} "
            f"threshold={self.threshold:.6g} trials={self.trials} undecided={self.undecided}"
        )
