from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import digits_brute, long_division, value_of
from radixcast import (
    CycleCapExceeded,
    FractionPolicy,
    Numeral,
    frac_to_digits,
    from_rational,
    int_to_digits,
    parse,
    to_rational,
    weighted_sum,
)
from radixcast.exact import _split_digits, decimal_text, digits_of
from radixcast.steps import check_step

QUARTET = [2, 8, 10, 16]
EXACT = FractionPolicy.exact()


def rationals(max_num=10**6, max_den=10**6):
    return st.builds(
        lambda n, d, neg: Fraction(-n if neg else n, d),
        st.integers(0, max_num),
        st.integers(1, max_den),
        st.booleans(),
    )


class TestToRational:
    @pytest.mark.parametrize(
        "text, value",
        [
            ("10011010_2", Fraction(154)),
            ("232_8", Fraction(154)),
            ("0.(3)_10", Fraction(1, 3)),
            ("427.5_10", Fraction(855, 2)),
            ("9A_16", Fraction(154)),
            ("-0.0(0011)_2", Fraction(-1, 10)),
        ],
    )
    def test_examples(self, text, value):
        assert to_rational(parse(text)) == value

    def test_worked_octal_and_hex_examples(self):
        # no decimal value is printed for these; check against direct summation
        for text in ("6327.4051_8", "B52.AC3_16", "1101.101_2"):
            n = parse(text)
            assert to_rational(n) == value_of(n.int_digits, n.frac_digits, (), n.radix)
        assert to_rational(parse("1101.101_2")) == Fraction(109, 8)

    @pytest.mark.parametrize("radix", QUARTET)
    def test_single_digit_linearity(self, radix):
        for index in range(-6, 7):
            for d in range(radix):
                if index >= 0:
                    n = Numeral.build(radix, [d] + [0] * index)
                else:
                    n = Numeral.build(radix, [0], [0] * (-index - 1) + [d])
                assert to_rational(n) == d * Fraction(radix) ** index

    def test_long_repetend(self):
        n = Numeral.build(7, [3], [1, 2], list(range(1, 7)) * 100 + [5])
        assert to_rational(n) == value_of(n.int_digits, n.frac_digits, n.repetend, 7)

    def test_weighted_sum_matches(self):
        n = parse("-10.1(011)_2")
        value, steps = weighted_sum(n)
        assert value == to_rational(n)
        assert all(check_step(s) for s in steps)
        # canonical form is 10.(101), so only two weighted positions
        assert [s.crossed_out for s in steps[:-1]] == [False, True]


class TestIntToDigits:
    def test_worked_binary(self):
        digits, steps = int_to_digits(154, 2)
        assert digits == (1, 0, 0, 1, 1, 0, 1, 0)
        assert [s.remainder for s in steps] == [0, 1, 0, 1, 1, 0, 0, 1]
        assert all(check_step(s) for s in steps)

    def test_zero(self):
        digits, steps = int_to_digits(0, 16)
        assert digits == (0,)
        assert len(steps) == 1

    def test_worked_hex(self):
        assert int_to_digits(154, 16)[0] == (9, 10)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            int_to_digits(-1, 2)

    @given(st.integers(0, 10**40), st.integers(2, 36))
    def test_matches_brute_force(self, v, r):
        assert list(int_to_digits(v, r)[0]) == digits_brute(v, r)
        assert list(int_to_digits(v, r, trace=False)[0]) == digits_brute(v, r)

    @pytest.mark.parametrize("radix", [3, 10, 36])
    def test_split_is_bit_identical(self, radix):
        v = 7**9000 + 12345
        fast = digits_of(v, radix)
        assert fast == int_to_digits(v, radix)[0]
        assert list(fast) == _split_digits(v, radix, len(fast))

    def test_decimal_text_beyond_str_limit(self):
        v = 10**6000 + 7
        assert decimal_text(v) == "1" + "0" * 5999 + "7"


class TestFracToDigits:
    def test_half(self):
        fd = frac_to_digits(Fraction(1, 2), 2, EXACT)
        assert fd[:3] == ((1,), (), False)

    def test_tenth_binary(self):
        fd = frac_to_digits(Fraction(1, 10), 2, EXACT)
        assert fd[:3] == ((0,), (0, 0, 1, 1), False)

    def test_worked_binary_fraction(self):
        fd = frac_to_digits(Fraction(5, 8), 2, EXACT)
        assert fd[:3] == ((1, 0, 1), (), False)
        assert to_rational(Numeral.build(2, [0], fd.digits)) == Fraction(5, 8)

    def test_steps_replay(self):
        fd = frac_to_digits(Fraction(1, 10), 2, EXACT)
        assert [s.digit for s in fd.steps] == list(fd.digits + fd.repetend)
        assert all(check_step(s) for s in fd.steps)
        assert fd.steps[0].fraction_in == Fraction(1, 10)

    def test_truncate(self):
        fd = frac_to_digits(Fraction(1, 3), 10, FractionPolicy.truncate(4))
        assert fd[:3] == ((3, 3, 3, 3), (), True)
        fd = frac_to_digits(Fraction(1, 4), 10, FractionPolicy.truncate(4))
        assert fd[:3] == ((2, 5, 0, 0), (), False)
        fd = frac_to_digits(Fraction(2, 3), 10, FractionPolicy.truncate(2))
        assert fd.digits == (6, 6)  # no rounding

    def test_cycle_cap(self):
        with pytest.raises(CycleCapExceeded) as info:
            frac_to_digits(Fraction(1, 7919), 10, FractionPolicy.exact(cycle_cap=100))
        assert info.value.cap == 100
        assert list(info.value.digits) == long_division(1, 7919, 10)[1][:100]
        # a period that just fits the cap is fine, whichever search is used
        fd = frac_to_digits(Fraction(1, 7), 10, FractionPolicy.exact(cycle_cap=6))
        assert fd.repetend == (1, 4, 2, 8, 5, 7)
        # huge denominators with short expansions stay cheap
        for f in (Fraction(1, 3 * 2**40), Fraction(5, 7 * 11 * 13 * 2**25)):
            fd = frac_to_digits(f, 10, FractionPolicy.exact(cycle_cap=100))
            assert to_rational(Numeral.build(10, [0], fd.digits, fd.repetend)) == f

    def test_cap_boundary(self):
        # 1/7 needs exactly 6 digits; 5 must fail on both search paths
        for f in (Fraction(1, 7), Fraction(1, 7 * 2**30)):
            n = len(long_division(f.numerator, f.denominator, 10)[0]) + 6
            frac_to_digits(f, 10, FractionPolicy.exact(cycle_cap=n))
            with pytest.raises(CycleCapExceeded):
                frac_to_digits(f, 10, FractionPolicy.exact(cycle_cap=n - 1))

    @pytest.mark.parametrize("bad", [Fraction(1), Fraction(-1, 2), Fraction(3, 2)])
    def test_domain(self, bad):
        with pytest.raises(ValueError):
            frac_to_digits(bad, 10)

    @pytest.mark.parametrize("radix", QUARTET)
    def test_oracle_small_denominators(self, radix):
        for d in range(1, 200):
            for n in range(d):
                if gcd(n, d) == 1:
                    pre, rep = long_division(n, d, radix)
                    fd = frac_to_digits(Fraction(n, d), radix, EXACT, trace=False)
                    assert (list(fd.digits), list(fd.repetend)) == (pre, rep), (n, d)

    @pytest.mark.parametrize("radix", QUARTET)
    def test_terminating_criterion(self, radix):
        for d in range(1, 10**4):
            rest = d
            for p in (2, 3, 5, 7):
                if radix % p == 0:
                    while rest % p == 0:
                        rest //= p
            policy = FractionPolicy.exact(cycle_cap=10**4)
            fd = frac_to_digits(Fraction(1, d) if d > 1 else Fraction(0), radix, policy, trace=False)
            assert (not fd.repetend) == (rest == 1), d

    @given(rationals(max_den=5000), st.sampled_from(QUARTET), st.integers(1, 40))
    def test_truncation_is_prefix(self, v, r, k):
        f = abs(v) - int(abs(v))
        exact = frac_to_digits(f, r, EXACT, trace=False)
        unrolled = list(exact.digits)
        while exact.repetend and len(unrolled) < k:
            unrolled += exact.repetend
        unrolled = (unrolled + [0] * k)[:k]
        cut = frac_to_digits(f, r, FractionPolicy.truncate(k), trace=False)
        assert list(cut.digits) == unrolled
        assert cut.truncated == (Fraction(int(f * r**k), r**k) != f)

    @given(rationals(max_den=3000), st.sampled_from(QUARTET))
    def test_traced_equals_untraced(self, v, r):
        f = abs(v) - int(abs(v))
        a = frac_to_digits(f, r, EXACT)
        b = frac_to_digits(f, r, EXACT, trace=False)
        assert a[:3] == b[:3]
        assert [s.digit for s in a.steps] == list(a.digits + a.repetend)


class TestFromRational:
    def test_worked_octal(self):
        assert str(from_rational(Fraction(154), 8)[0]) == "232_8"

    def test_derived_binary(self):
        n, steps = from_rational(Fraction(855, 2), 2)
        assert str(n) == "110101011.1_2"
        assert to_rational(n) == Fraction(855, 2)
        assert all(check_step(s) for s in steps)

    def test_negative_third(self):
        assert str(from_rational(Fraction(-1, 3), 10)[0]) == "-0.(3)_10"

    def test_truncated_canonical(self):
        n, _ = from_rational(Fraction(1, 4), 10, FractionPolicy.truncate(6))
        assert str(n) == "0.25_10"

    @settings(max_examples=60, deadline=None)
    @given(rationals(), st.sampled_from(QUARTET))
    def test_round_trip_full_range(self, v, r):
        # periods can reach the denominator, so lift the cap past it
        policy = FractionPolicy.exact(cycle_cap=10**6)
        n, _ = from_rational(v, r, policy, trace=False)
        assert to_rational(n) == v

    @given(rationals(max_den=10**4), st.integers(2, 36))
    def test_round_trip_any_radix(self, v, r):
        n, _ = from_rational(v, r, FractionPolicy.exact(cycle_cap=10**4), trace=False)
        assert to_rational(n) == v


class TestPolicy:
    def test_defaults(self):
        p = FractionPolicy()
        assert (p.mode, p.cycle_cap) == ("exact", 4096)

    @pytest.mark.parametrize(
        "kwargs",
        [dict(mode="truncate"), dict(mode="truncate", max_digits=0), dict(cycle_cap=0), dict(mode="round")],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            FractionPolicy(**kwargs)
