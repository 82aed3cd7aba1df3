"""Lazy uniform deviates on [0, 1].

A :class:`LazyUniform` holds the sampled prefix of a binary expansion
``0.b0 b1 b2 ...`` and extends it one fair bit at a time on demand.
Bits are never resampled, so every observation of the first ``k`` bits
agrees.

The prefix is stored as a Python integer plus a length, which makes
``get_bits`` a single shift.
"""

from __future__ import annotations

from typing import Iterable

from exactsample.entropy import BitSource
from exactsample.errors import Undecided

DEFAULT_MAX_BITS = 1 << 16


class LazyUniform:
    __slots__ = ("src", "_value", "_length")

    def __init__(self, src: BitSource, prefix: Iterable[int] = ()):
        self.src = src
        self._value = 0
        self._length = 0
        for b in prefix:
            if b not in (0, 1):
                raise ValueError("prefix bits must be 0 or 1")
            self._value = (self._value << 1) | b
            self._length += 1

    def __len__(self) -> int:
        return self._length

    @property
    def cells(self) -> list[int]:
        """Snapshot of the sampled bits, most significant first."""
        n, v = self._length, self._value
        return [(v >> (n - 1 - i)) & 1 for i in range(n)]

    def force_next(self, index: int) -> int:
        """Bit ``index`` of the expansion, sampling it if it is the next unsampled one."""
        n = self._length
        if index < n:
            return (self._value >> (n - 1 - index)) & 1
        if index != n:
            raise IndexError(f"bits must be forced in order: index {index}, length {n}")
        b = self.src.next_bit()
        self._value = (self._value << 1) | b
        self._length = n + 1
        return b

    def get_bits(self, n: int) -> int:
        """``floor(r * 2**n)``: the first ``n`` bits as a big-endian integer."""
        if n < 0:
            raise ValueError("n must be non-negative")
        src = self.src
        while self._length < n:
            self._value = (self._value << 1) | src.next_bit()
            self._length += 1
        return self._value >> (self._length - n)

    def __repr__(self) -> str:
        bits = "".join(map(str, self.cells[:32]))
        more = "..." if self._length > 32 else ""
        return f"LazyUniform(0.{bits}{more}b)"


def new_uniform(src: BitSource) -> LazyUniform:
    return LazyUniform(src)


def cmp_uniform(x: LazyUniform, y: LazyUniform, max_bits: int = DEFAULT_MAX_BITS) -> int:
    """Compare two deviates bit by bit: -1 if x < y, 1 if x > y.

    Returns 0 only when ``x`` and ``y`` are the same object. Distinct
    deviates that still agree after ``max_bits`` bits raise
    :class:`Undecided`.
    """
    if x is y:
        return 0
    # Already-sampled common prefix: no forcing needed to compare it.
    i = min(x._length, y._length, max_bits)
    if i:
        a = x._value >> (x._length - i)
        b = y._value >> (y._length - i)
        if a != b:
            return -1 if a < b else 1
    while i < max_bits:
        b1 = x.force_next(i)
        b2 = y.force_next(i)
        if b1 != b2:
            return -1 if b1 < b2 else 1
        i += 1
    raise Undecided(f"deviates agree on the first {max_bits} bits")


def le_half(x: LazyUniform) -> bool:
    """True iff the first bit is 0, i.e. x < 1/2 up to the null event x = 1/2."""
    return x.force_next(0) == 0


def max2(src: BitSource, max_bits: int = DEFAULT_MAX_BITS) -> LazyUniform:
    """Maximum of two fresh uniform deviates (CDF x**2)."""
    x = LazyUniform(src)
    y = LazyUniform(src)
    return y if cmp_uniform(x, y, max_bits) < 0 else x
