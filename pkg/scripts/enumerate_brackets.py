"""Show exact enumeration brackets tightening with tape depth.

    python3 scripts/enumerate_brackets.py --sampler half-exp --target 0.6065306597 --max-depth 22
"""

import argparse
from dataclasses import dataclass

from exactsample.conformance import enumerate_exact


@dataclass
class BracketConfig:
    sampler: str = "half-exp"
    outcome: str = "True"
    target: float | None = None
    min_depth: int = 4
    max_depth: int = 20
    step: int = 2


def _key(outcome: str):
    if outcome in ("True", "False"):
        return outcome == "True"
    return int(outcome)


def run(cfg: BracketConfig) -> None:
    want = _key(cfg.outcome)
    print(f"{'depth':>5}  {'lower':>12}  {'upper':>12}  {'width':>10}  contains")
    for depth in range(cfg.min_depth, cfg.max_depth + 1, cfg.step):
        found = [b for b in enumerate_exact(cfg.sampler, depth) if b.outcome == want]
        if not found:
            print(f"{depth:>5}  (outcome not reached)")
            continue
        b = found[0]
        mark = "-" if cfg.target is None else ("yes" if b.contains(cfg.target) else "NO")
        print(f"{depth:>5}  {float(b.lower):>12.9f}  {float(b.upper):>12.9f}  {float(b.residual):>10.3e}  {mark}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(BracketConfig()).items():
        kind = float if name == "target" else type(default)
        p.add_argument(f"--{name.replace('_', '-')}", type=kind, default=default)
    run(BracketConfig(**vars(p.parse_args())))
