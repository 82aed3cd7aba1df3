"""Exact finite-depth enumeration over entropy tapes.

Running a sampler on every bit string of length ``depth`` splits the
unit of probability mass into outcomes that completed (each string has
mass ``2**-depth``) and runs that exhausted the tape (the residual). The
true probability of an outcome then lies in ``[lower, lower + residual]``.

Rather than executing ``2**depth`` times, the search walks the tree of
tape prefixes: a run that finishes after reading ``j`` bits accounts for
all ``2**(depth - j)`` tapes sharing that prefix. The resulting masses
are identical to brute-force enumeration.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable

from exactsample.conformance.registry import discrete_sampler
from exactsample.conformance.report import MassBracket
from exactsample.entropy import BitSource, TapeSource
from exactsample.errors import Exhausted

MAX_DEPTH = 28


def enumerate_counts(
    sampler: Callable[[BitSource], Hashable], depth: int
) -> tuple[dict[Hashable, int], int]:
    """Outcome masses and residual as numerators over ``2**depth``."""
    if not 0 <= depth <= MAX_DEPTH:
        raise ValueError(f"depth must lie in [0, {MAX_DEPTH}], got {depth}")
    counts: dict[Hashable, int] = {}
    residual = 0
    stack: list[list[int]] = [[]]
    while stack:
        prefix = stack.pop()
        tape = TapeSource(prefix)
        try:
            outcome = sampler(tape)
        except Exhausted:
            if len(prefix) == depth:
                residual += 1
            else:
                stack.append(prefix + [1])
                stack.append(prefix + [0])
            continue
        counts[outcome] = counts.get(outcome, 0) + (1 << (depth - len(prefix)))
    return counts, residual


def enumerate_exact(
    sampler: str | Callable[[BitSource], Hashable], depth: int, **params
) -> list[MassBracket]:
    """Exact mass brackets for every outcome reached within ``depth`` bits.

    ``sampler`` is a callable or a discrete sampler id from the registry.
    With no completed outcome (e.g. ``depth=0`` for a sampler that needs
    entropy) a single bracket with outcome ``None`` carries the residual.
    """
    if isinstance(sampler, str):
        sampler = discrete_sampler(sampler, **params)
    counts, residual = enumerate_counts(sampler, depth)
    denom = 1 << depth
    res = Fraction(residual, denom)
    if not counts:
        return [MassBracket(None, Fraction(0), res)]
    try:
        keys = sorted(counts)
    except TypeError:
        keys = list(counts)
    return [MassBracket(k, Fraction(counts[k], denom), res) for k in keys]
