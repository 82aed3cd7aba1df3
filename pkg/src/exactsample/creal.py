"""Constructive reals over dyadic approximants.

A :class:`CReal` represents a real ``r`` by a procedure ``approx(p)``
returning an integer ``A`` with ``|A - r * 2**p| <= 1`` for every
integer precision ``p``. All operations below preserve that contract
and never touch floating point.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from exactsample.errors import Undecided
from exactsample.lazyreal import LazyUniform

DEFAULT_MAX_P = 1 << 12

_caching = True


@contextlib.contextmanager
def caching(enabled: bool) -> Iterator[None]:
    """Temporarily switch approximant caching for newly built reals."""
    global _caching
    old, _caching = _caching, enabled
    try:
        yield
    finally:
        _caching = old


def round_shift(a: int, k: int) -> int:
    """Nearest integer to ``a / 2**k`` (``k >= 0``), ties away from zero."""
    if k <= 0:
        return a << -k
    q = (abs(a) + (1 << (k - 1))) >> k
    return q if a >= 0 else -q


def round_div(n: int, d: int) -> int:
    """Nearest integer to ``n / d`` (``d > 0``), ties away from zero."""
    q = (2 * abs(n) + d) // (2 * d)
    return q if n >= 0 else -q


class CReal:
    """A real number given by its approximant procedure.

    Approximants are memoized per precision, so repeated requests (and
    shared subterms) are served without re-evaluation.
    """

    __slots__ = ("_fn", "_cache")

    def __init__(self, fn: Callable[[int], int]):
        self._fn = fn
        self._cache: dict[int, int] | None = {} if _caching else None

    def approx(self, p: int) -> int:
        cache = self._cache
        if cache is None:
            return self._fn(p)
        a = cache.get(p)
        if a is None:
            a = cache[p] = self._fn(p)
        return a

    __call__ = approx

    def __add__(self, other: CReal) -> CReal:
        return add(self, other)

    def __neg__(self) -> CReal:
        return neg(self)

    def __sub__(self, other: CReal) -> CReal:
        return add(self, neg(other))

    def __repr__(self) -> str:
        return f"CReal(~{to_decimal(self, 6)})"


@dataclass(frozen=True, eq=False)
class Dyadic:
    """The rational ``num / 2**exp``."""

    num: int
    exp: int

    def as_fraction(self) -> Fraction:
        if self.exp >= 0:
            return Fraction(self.num, 1 << self.exp)
        return Fraction(self.num << -self.exp)

    def to_creal(self) -> CReal:
        return scal_pow2(of_int(self.num), self.exp)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.as_fraction() == other.as_fraction()

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    def __str__(self) -> str:
        return f"{self.num}/2^{self.exp}"


def of_int(z: int) -> CReal:
    return CReal(lambda p: z << p if p >= 0 else round_shift(z, -p))


def of_fraction(q: Fraction | int) -> CReal:
    """Exact rational, each approximant nearest-rounded (error <= 1/2)."""
    q = Fraction(q)
    n, d = q.numerator, q.denominator

    def approx(p: int) -> int:
        if p >= 0:
            return round_div(n << p, d)
        return round_div(n, d << -p)

    return CReal(approx)


def parse_decimal(text: str) -> CReal:
    """Exact CReal for a decimal literal such as ``"2.5"`` or ``"-1e-3"``."""
    return of_fraction(Fraction(text.strip()))


def add(x: CReal, y: CReal) -> CReal:
    return CReal(lambda p: round_shift(x.approx(p + 2) + y.approx(p + 2), 2))


def neg(x: CReal) -> CReal:
    return CReal(lambda p: -x.approx(p))


def scal_pow2(x: CReal, z: int) -> CReal:
    """``x / 2**z``."""
    return CReal(lambda p: x.approx(p - z))


def of_uniform(u: LazyUniform) -> CReal:
    return CReal(lambda p: u.get_bits(p) if p > 0 else 0)


def of_bzu(b: int, z: int, u: LazyUniform) -> CReal:
    """``(-1)**b * (z + r)`` for the deviate ``r`` held by ``u``."""
    magnitude = add(of_int(z), of_uniform(u))
    return magnitude if b == 0 else neg(magnitude)


def cmp(x: CReal, y: CReal, start_p: int = 0, max_p: int = DEFAULT_MAX_P) -> int:
    """-1 if x < y, 1 if x > y; refines precision until the approximants separate.

    Equal (or extremely close) arguments raise :class:`Undecided` once
    the precision would exceed ``max_p``.
    """
    if start_p > max_p:
        raise ValueError("start_p must not exceed max_p")
    for p in range(start_p, max_p + 1):
        n1 = x.approx(p)
        n2 = y.approx(p)
        if n1 + 2 < n2:
            return -1
        if n2 + 2 < n1:
            return 1
    raise Undecided(f"no separation up to precision {max_p}")


def checker(sample: CReal, point: Dyadic, max_p: int = DEFAULT_MAX_P) -> int:
    """Compare a sampled real against ``point``: -1 below, 1 above."""
    return cmp(sample, point.to_creal(), 0, max_p)


def to_decimal(x: CReal, digits: int) -> str:
    """Render ``x`` with ``digits`` fractional digits, absolute error <= 10**-digits."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scale = 10**digits
    # p = ceil(digits * log2(10)) + 2, computed in integers
    p = (scale - 1).bit_length() + 2
    m = round_div(x.approx(p) * scale, 1 << p)
    sign = "-" if m < 0 else ""
    whole, frac = divmod(abs(m), scale)
    return f"{sign}{whole}.{frac:0{digits}d}"
