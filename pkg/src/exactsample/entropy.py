"""Bit sources: the only place randomness enters the package.

Every sampler pulls fair bits through a :class:`BitSource`. Three sources
are provided:

* :class:`SeededSource` -- reproducible stream from a 64-bit seed,
  backed by the stdlib Mersenne Twister (period 2**19937 - 1).
* :class:`TapeSource` -- replays a finite bit sequence, then raises
  :class:`~exactsample.errors.Exhausted`.
* :class:`RecordingSource` -- wraps another source and logs every bit
  it hands out, so a run can be replayed through a ``TapeSource``.

A source is single-owner. Independent tasks need independently seeded
sources (see :func:`shard_seed`).
"""

from __future__ import annotations

import hashlib
import os
import random
from typing import Iterable, Sequence

from exactsample.errors import Exhausted

DEFAULT_SEED = 20240917


class BitSource:
    """Abstract stream of fair random bits."""

    def next_bit(self) -> int:
        raise NotImplementedError

    def rand_uniform(self, bound: int) -> int:
        """Uniform integer in ``{0, ..., bound}``.

        Draws ``bound.bit_length()`` bits, most significant first, and
        retries while the packed value exceeds ``bound``.
        """
        if bound < 0:
            raise ValueError(f"bound must be non-negative, got {bound}")
        nbits = bound.bit_length()
        while True:
            v = 0
            for _ in range(nbits):
                v = (v << 1) | self.next_bit()
            if v <= bound:
                return v


class SeededSource(BitSource):
    __slots__ = ("seed", "_getrandbits")

    def __init__(self, seed: int = DEFAULT_SEED):
        if not 0 <= seed < 1 << 64:
            seed &= (1 << 64) - 1
        self.seed = seed
        self._getrandbits = random.Random(seed).getrandbits

    def next_bit(self) -> int:
        return self._getrandbits(1)

    def __repr__(self) -> str:
        return f"SeededSource(seed={self.seed})"


class TapeSource(BitSource):
    __slots__ = ("bits", "cursor")

    def __init__(self, bits: Sequence[int]):
        self.bits = list(bits)
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("tape bits must be 0 or 1")
        self.cursor = 0

    def next_bit(self) -> int:
        if self.cursor >= len(self.bits):
            raise Exhausted(f"tape exhausted after {len(self.bits)} bits")
        b = self.bits[self.cursor]
        self.cursor += 1
        return b

    @property
    def remaining(self) -> int:
        return len(self.bits) - self.cursor

    def __repr__(self) -> str:
        return f"TapeSource(len={len(self.bits)}, cursor={self.cursor})"


class RecordingSource(BitSource):
    __slots__ = ("inner", "log")

    def __init__(self, inner: BitSource):
        self.inner = inner
        self.log: list[int] = []

    def next_bit(self) -> int:
        b = self.inner.next_bit()
        self.log.append(b)
        return b

    def replay(self) -> TapeSource:
        return TapeSource(self.log)


def shard_seed(seed: int, shard: int) -> int:
    """Derive the 64-bit seed of worker ``shard`` from a master seed."""
    digest = hashlib.sha256(f"{seed}:{shard}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


# Tape files: one ASCII '0'/'1' per bit, terminated by a newline.


def format_tape(bits: Iterable[int]) -> str:
    return "".join("1" if b else "0" for b in bits) + "\n"


def parse_tape(text: str) -> list[int]:
    bits = []
    for ch in text:
        if ch in "01":
            bits.append(ord(ch) - 48)
        elif not ch.isspace():
            raise ValueError(f"invalid character {ch!r} in tape")
    return bits


def write_tape(path: str | os.PathLike, bits: Iterable[int]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_tape(bits))


def read_tape(path: str | os.PathLike) -> list[int]:
    with open(path, encoding="ascii") as fh:
        return parse_tape(fh.read())
