import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spindles.errors import RationalizationError
from spindles.linalg import RationalAngle

nums = st.integers(min_value=-720, max_value=720)
dens = st.integers(min_value=1, max_value=96)


class TestExactPredicates:
    @given(nums, dens)
    def test_predicates_match_fraction_arithmetic(self, num, den):
        angle = RationalAngle(num, den)
        f = Fraction(num, den)
        assert angle.sin_is_zero == (f.denominator == 1)
        assert angle.cos_is_one == (f % 2 == 0)
        assert angle.cos_is_minus_one == (f.denominator == 1 and f.numerator % 2 == 1)
        assert angle.is_half_integer == (f.denominator == 2)

    @given(nums, dens)
    def test_trig_values_match_math(self, num, den):
        angle = RationalAngle(num, den)
        assert angle.sin() == pytest.approx(math.sin(angle.radians), abs=1e-12)
        assert angle.cos() == pytest.approx(math.cos(angle.radians), abs=1e-12)

    @given(nums, dens)
    def test_lattice_values_are_exact(self, num, den):
        angle = RationalAngle(num, den)
        if angle.sin_is_zero:
            assert angle.sin() == 0.0
            assert abs(angle.cos()) == 1.0
        if angle.is_half_integer:
            assert angle.cos() == 0.0
            assert abs(angle.sin()) == 1.0

    def test_bulk_million_random_rationals(self):
        # Volume check of the exactness contract: predicates must agree
        # with integer arithmetic on 10**6 random rationals.
        rng = random.Random(987654321)
        for _ in range(1_000_000):
            num = rng.randint(-10_000, 10_000)
            den = rng.randint(1, 360)
            angle = RationalAngle(num, den)
            f = Fraction(num, den)
            assert angle.fraction == f
            assert angle.sin_is_zero == (f.denominator == 1)
            assert angle.cos_is_one == (f % 2 == 0)
            assert angle.cos_is_minus_one == (
                f.denominator == 1 and f.numerator % 2 == 1
            )
            assert angle.is_half_integer == (f.denominator == 2)


class TestArithmetic:
    @given(nums, dens, nums, dens)
    def test_add_sub_match_fractions(self, n1, d1, n2, d2):
        a, b = RationalAngle(n1, d1), RationalAngle(n2, d2)
        assert (a + b).fraction == a.fraction + b.fraction
        assert (a - b).fraction == a.fraction - b.fraction
        assert (-a).fraction == -a.fraction

    @given(nums, dens, st.integers(min_value=-24, max_value=24))
    def test_integer_scaling(self, num, den, k):
        a = RationalAngle(num, den)
        assert (a * k).fraction == a.fraction * k
        assert (k * a).fraction == a.fraction * k

    def test_division(self):
        assert (RationalAngle(1) / 2) == RationalAngle(1, 2)
        assert (RationalAngle(3, 4) / 3) == RationalAngle(1, 4)

    def test_normalization(self):
        assert RationalAngle(2, 4) == RationalAngle(1, 2)
        assert RationalAngle(-3, -6) == RationalAngle(1, 2)
        assert RationalAngle(0, 7) == RationalAngle(0)

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalAngle(1, 0)


class TestParseAndFormat:
    def test_parse_forms(self):
        assert RationalAngle.parse("3/4") == RationalAngle(3, 4)
        assert RationalAngle.parse("2") == RationalAngle(2)
        assert RationalAngle.parse(" -5/10 ") == RationalAngle(-1, 2)

    def test_parse_garbage(self):
        with pytest.raises(RationalizationError):
            RationalAngle.parse("x/y")
        with pytest.raises(RationalizationError):
            RationalAngle.parse("1/0")

    def test_str_roundtrip(self):
        a = RationalAngle(7, 6)
        assert str(a) == "7/6 pi"
        assert RationalAngle.parse(str(a).removesuffix(" pi")) == a

    def test_radians(self):
        assert RationalAngle(1, 2).radians == pytest.approx(math.pi / 2)
        assert RationalAngle(-3).radians == pytest.approx(-3 * math.pi)
