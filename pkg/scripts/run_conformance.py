"""Run the conformance suite and save the reports as JSON lines.

    python3 scripts/run_conformance.py --out results/conformance.jsonl --jobs 4
    python3 scripts/run_conformance.py --seeds 5    # repeat over seeds 20240917..+4

Prints a one-line summary per check plus the wall time per check.
"""

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from exactsample.conformance import suite
from exactsample.entropy import DEFAULT_SEED


@dataclass
class RunConfig:
    seed: int = DEFAULT_SEED
    seeds: int = 1
    trials: int | None = None
    jobs: int = 1
    negative_controls: bool = False
    only: list[str] = field(default_factory=list)
    out: Path | None = None


def run(cfg: RunConfig) -> int:
    names = suite.select(cfg.only or None, cfg.negative_controls)
    lines, failures = [], 0
    for s in range(cfg.seed, cfg.seed + cfg.seeds):
        for r in suite.run_suite(names, seed=s, trials=cfg.trials, jobs=cfg.jobs):
            expected = not suite.CHECKS[r.check].negative_control
            failures += r.report.passed != expected
            print(f"{r.report.summary()}  [{r.seconds:.1f}s]")
            lines.append(r.report.to_json())
    if cfg.out:
        cfg.out.parent.mkdir(parents=True, exist_ok=True)
        cfg.out.write_text("\n".join(lines) + "\n")
    print(f"{failures} unexpected outcome(s)", file=sys.stderr)
    return 1 if failures else 0


def parse_args(argv=None) -> RunConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--seeds", type=int, default=1)
    p.add_argument("--trials", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--negative-controls", action="store_true")
    p.add_argument("--only", action="append", default=[])
    p.add_argument("--out", type=Path)
    return RunConfig(**vars(p.parse_args(argv)))


if __name__ == "__main__":
    sys.exit(run(parse_args()))
