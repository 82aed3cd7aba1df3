from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from exactsample import creal
from exactsample.creal import CReal, Dyadic, caching, round_div, round_shift
from exactsample.entropy import BitSource, SeededSource, TapeSource
from exactsample.errors import Exhausted, Undecided
from exactsample.lazyreal import LazyUniform


class ZeroTail(BitSource):
    """Fixed prefix followed by zeros forever, so the deviate's value is exact."""

    def __init__(self, bits):
        self.bits = list(bits)
        self.i = 0

    def next_bit(self):
        b = self.bits[self.i] if self.i < len(self.bits) else 0
        self.i += 1
        return b


def exact_uniform(bits):
    u = LazyUniform(ZeroTail(bits))
    value = Fraction(int("".join(map(str, bits)) or "0", 2), 1 << len(bits))
    return u, value


def assert_approx_to(x: CReal, r: Fraction, p: int):
    a = x.approx(p)
    assert abs(a - r * Fraction(2) ** p) <= 1, (p, a, float(r))


# trees paired with their exact value
bitlists = st.lists(st.integers(0, 1), max_size=80)


def leaves():
    ints = st.integers(-(10**6), 10**6).map(lambda z: (creal.of_int(z), Fraction(z)))

    def uni(bits):
        u, v = exact_uniform(bits)
        return creal.of_uniform(u), v

    def bzu(args):
        b, z, bits = args
        u, v = exact_uniform(bits)
        return creal.of_bzu(b, z, u), (-1) ** b * (z + v)

    return st.one_of(
        ints,
        bitlists.map(uni),
        st.tuples(st.integers(0, 1), st.integers(0, 50), bitlists).map(bzu),
    )


def extend(children):
    def add(pair):
        (x, a), (y, b) = pair
        return creal.add(x, y), a + b

    def neg(pair):
        x, a = pair
        return creal.neg(x), -a

    def scal(args):
        (x, a), z = args
        return creal.scal_pow2(x, z), a / Fraction(2) ** z

    return st.one_of(
        st.tuples(children, children).map(add),
        children.map(neg),
        st.tuples(children, st.integers(-8, 8)).map(scal),
    )


trees = st.recursive(leaves(), extend, max_leaves=12)


@settings(max_examples=400, deadline=None)
@given(trees, st.integers(-8, 60))
def test_approx_contract_against_exact_value(tree, p):
    x, r = tree
    assert_approx_to(x, r, p)


@settings(max_examples=200, deadline=None)
@given(trees, st.integers(-8, 60))
def test_approx_contract_against_high_precision_reference(tree, p):
    x, _ = tree
    big = p + 64
    gap = abs(x.approx(p) * (1 << 64) - x.approx(big))
    assert gap <= (1 << 64) + 1


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**64 - 1), st.integers(-8, 60))
def test_cache_transparency(seed, p):
    def build():
        src = SeededSource(seed)
        u = LazyUniform(src)
        v = LazyUniform(src)
        t = creal.add(creal.of_bzu(1, 3, u), creal.scal_pow2(creal.of_uniform(v), -2))
        return creal.add(t, creal.neg(creal.of_int(7)))

    with caching(False):
        plain = build()
    cached = build()
    for q in (p, p + 5, p - 3, p):
        assert plain.approx(q) == cached.approx(q)


def test_rounding_helpers():
    assert [round_shift(a, 1) for a in (-3, -2, -1, 0, 1, 2, 3)] == [-2, -1, -1, 0, 1, 1, 2]
    assert round_shift(5, 0) == 5 and round_shift(5, -2) == 20
    assert [round_div(n, 4) for n in (-6, -2, 2, 6, 7)] == [-2, -1, 1, 2, 2]


def test_of_int():
    assert creal.of_int(3).approx(2) == 12
    assert all(creal.of_int(0).approx(p) == 0 for p in range(-10, 10))
    assert creal.of_int(-5).approx(3) == -40
    assert creal.of_int(5).approx(-1) == 3
    assert creal.of_int(-5).approx(-1) == -3


def test_add_exact_inputs():
    assert creal.add(creal.of_int(1), creal.of_int(2)).approx(0) == 3


@given(st.integers(0, 2**64 - 1), st.integers(-8, 60))
def test_add_identity_within_slack(seed, p):
    x = creal.of_bzu(0, 2, LazyUniform(SeededSource(seed)))
    assert abs(creal.add(x, creal.of_int(0)).approx(p) - x.approx(p)) <= 1


def test_add_doubles_deviate():
    u, r = exact_uniform([1, 1, 0, 1])
    x = creal.of_uniform(u)
    assert abs(creal.add(x, x).approx(1) - 2 * r * 2) <= 1


def test_neg():
    assert creal.neg(creal.of_int(7)).approx(1) == -14
    x = creal.of_uniform(LazyUniform(SeededSource(3)))
    for p in range(-4, 40):
        assert creal.neg(creal.neg(x)).approx(p) == x.approx(p)
        assert creal.neg(x).approx(p) + x.approx(p) == 0


def test_scal_pow2():
    assert creal.scal_pow2(creal.of_int(4), 2).approx(0) == 1
    assert creal.scal_pow2(creal.of_int(1), -3).approx(0) == 8
    x = creal.of_uniform(LazyUniform(SeededSource(4)))
    assert all(creal.scal_pow2(x, 0).approx(p) == x.approx(p) for p in range(-3, 30))


def test_of_uniform():
    x = creal.of_uniform(LazyUniform(TapeSource([1, 0, 1])))
    assert x.approx(3) == 5
    assert x.approx(0) == 0
    assert x.approx(-4) == 0


def test_of_uniform_propagates_exhaustion():
    with pytest.raises(Exhausted):
        creal.of_uniform(LazyUniform(TapeSource([1]))).approx(2)


def test_of_bzu():
    zero, _ = exact_uniform([])
    x = creal.of_bzu(0, 0, zero)
    assert all(abs(x.approx(p)) <= 1 for p in range(-4, 20))

    half, _ = exact_uniform([1])
    assert abs(creal.of_bzu(1, 2, half).approx(4) - (-40)) <= 1

    y = creal.of_bzu(0, 3, LazyUniform(SeededSource(8)))
    assert y.approx(0) in {2, 3, 4, 5}


def test_of_fraction_and_parse_decimal():
    for text, value in [("2.5", Fraction(5, 2)), ("-0.1", Fraction(-1, 10)), ("1e-3", Fraction(1, 1000))]:
        x = creal.parse_decimal(text)
        for p in range(-6, 40):
            assert abs(x.approx(p) - value * Fraction(2) ** p) <= Fraction(1, 2)
    with pytest.raises(ValueError):
        creal.parse_decimal("two")


def test_cmp_examples():
    assert creal.cmp(creal.of_int(0), creal.of_int(1), 0, 64) == -1
    assert creal.cmp(creal.of_int(5), creal.of_int(3), 0, 64) == 1
    x = creal.of_uniform(LazyUniform(SeededSource(5)))
    with pytest.raises(Undecided):
        creal.cmp(x, x, 0, 16)


def test_cmp_decides_by_precision_two():
    # 0 vs 1: approximants (0, 1), (0, 2), (0, 4) -> separated at p = 2
    assert creal.cmp(creal.of_int(0), creal.of_int(1), 0, 2) == -1
    with pytest.raises(Undecided):
        creal.cmp(creal.of_int(0), creal.of_int(1), 0, 1)


def test_cmp_bad_range():
    with pytest.raises(ValueError):
        creal.cmp(creal.of_int(0), creal.of_int(1), 5, 4)


@given(st.integers(-(2**20), 2**20), st.integers(0, 12), st.integers(-(2**20), 2**20), st.integers(0, 12))
def test_cmp_sound_on_dyadics(n1, e1, n2, e2):
    a, b = Dyadic(n1, e1), Dyadic(n2, e2)
    if a == b:
        with pytest.raises(Undecided):
            creal.cmp(a.to_creal(), b.to_creal(), 0, 40)
        return
    expected = -1 if a.as_fraction() < b.as_fraction() else 1
    assert creal.cmp(a.to_creal(), b.to_creal(), 0, 64) == expected


def test_checker():
    half = Dyadic(1, 1)
    assert creal.checker(creal.of_int(0), half) == -1
    assert creal.checker(creal.of_int(1), half) == 1
    with pytest.raises(Undecided):
        creal.checker(creal.scal_pow2(creal.of_int(1), 1), half, max_p=20)


def test_dyadic_value_equality():
    assert Dyadic(1, 1) == Dyadic(2, 2)
    assert Dyadic(3, -2) == Dyadic(12, 0)
    assert hash(Dyadic(1, 1)) == hash(Dyadic(4, 3))
    assert str(Dyadic(1, 1)) == "1/2^1"


def test_to_decimal():
    assert creal.to_decimal(creal.of_int(3), 2) == "3.00"
    assert creal.to_decimal(creal.neg(creal.of_int(1)), 1) == "-1.0"
    assert creal.to_decimal(creal.scal_pow2(creal.of_int(1), 1), 3) == "0.500"
    with pytest.raises(ValueError):
        creal.to_decimal(creal.of_int(1), 0)


@given(trees, st.integers(1, 12))
@settings(deadline=None)
def test_to_decimal_error_bound(tree, digits):
    x, r = tree
    rendered = Fraction(creal.to_decimal(x, digits))
    assert abs(rendered - r) <= Fraction(1, 10**digits)


def test_operators():
    x = creal.of_int(5) - creal.of_int(2)
    assert x.approx(0) == 3
    assert (-x).approx(0) == -3
    assert "3.0" in repr(x)
