import random
from fractions import Fraction

import pytest

from harborth.dyadic import DyadicInterval
from harborth.errors import EntirelyNegative
from harborth.quadratic import SQRT3, QuadInt, QuadRat


class TestQuadInt:
    def test_difference_of_squares(self):
        assert QuadInt(1, 1) * QuadInt(1, -1) == QuadInt(-2)

    def test_fundamental_unit(self):
        assert QuadInt(2, 1) * QuadInt(2, -1) == QuadInt(1)

    def test_sqrt3_squared(self):
        assert SQRT3 * SQRT3 == QuadInt(3)

    def test_norm_values(self):
        assert QuadInt(2, 1).norm() == 1
        assert QuadInt(5).norm() == 25
        assert QuadInt(1, 1).norm() == -2

    def test_conj_involution(self):
        x = QuadInt(7, -4)
        assert x.conj().conj() == x
        assert (x * x.conj()).b == 0

    def test_norm_multiplicative(self):
        rng = random.Random(12)
        for _ in range(200):
            x = QuadInt(rng.randint(-50, 50), rng.randint(-50, 50))
            y = QuadInt(rng.randint(-50, 50), rng.randint(-50, 50))
            assert (x * y).norm() == x.norm() * y.norm()

    def test_divexact(self):
        p = QuadInt(5, 2) * QuadInt(-3, 7)
        assert p.divexact(QuadInt(-3, 7)) == QuadInt(5, 2)
        with pytest.raises(ValueError):
            QuadInt(1, 0).divexact(QuadInt(0, 1))


class TestQuadRat:
    def test_canonical_form(self):
        x = QuadRat(QuadInt(6, 9), -12)
        assert x.den == 4 and x.num == QuadInt(-2, -3)

    def test_division_by_conjugation(self):
        one = QuadRat(1)
        inv = one / QuadRat(SQRT3)
        assert inv * QuadRat(SQRT3) == one
        assert inv == QuadRat(QuadInt(0, 1), 3)

    def test_field_axioms_random(self):
        rng = random.Random(3)
        for _ in range(50):
            x = QuadRat(QuadInt(rng.randint(-9, 9), rng.randint(-9, 9)),
                        rng.randint(1, 9))
            y = QuadRat(QuadInt(rng.randint(-9, 9), rng.randint(-9, 9)),
                        rng.randint(1, 9))
            if y:
                assert (x / y) * y == x
            assert x * y - y * x == QuadRat(0)


def op_interval(op, p, q, prec=120):
    ip = DyadicInterval.from_fraction(p, prec)
    iq = DyadicInterval.from_fraction(q, prec)
    return op(ip, iq)


class TestDyadicInterval:
    def test_sqrt_exact(self):
        four = DyadicInterval.from_int(4)
        s = four.sqrt()
        assert s.contains(2)
        assert s.width() < Fraction(1, 2 ** 390)

    def test_sqrt_two_width(self):
        two = DyadicInterval.from_int(2, prec=200)
        s = two.sqrt()
        assert s.width() <= Fraction(1, 2 ** 190)
        assert s.contains(Fraction(14142135623730950488, 10 ** 19)) or \
            abs(s.midpoint() - Fraction(14142135623730950488, 10 ** 19)) < Fraction(1, 10 ** 18)

    def test_sqrt_entirely_negative(self):
        with pytest.raises(EntirelyNegative):
            DyadicInterval.from_endpoints(-3, -1).sqrt()

    def test_containment_random(self):
        rng = random.Random(7)
        for _ in range(300):
            p = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
            q = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
            assert op_interval(lambda a, b: a + b, p, q).contains(p + q)
            assert op_interval(lambda a, b: a - b, p, q).contains(p - q)
            assert op_interval(lambda a, b: a * b, p, q).contains(p * q)
            if q != 0:
                assert op_interval(lambda a, b: a / b, p, q).contains(p / q)
            if p >= 0:
                iv = DyadicInterval.from_fraction(p, 120).sqrt()
                assert iv.lo_fraction() ** 2 <= p <= iv.hi_fraction() ** 2

    def test_precision_doubling_narrows(self):
        p = Fraction(22, 7)
        wide = DyadicInterval.from_fraction(p, 60).sqrt()
        tight = DyadicInterval.from_fraction(p, 120).sqrt()
        assert wide.lo_fraction() <= tight.lo_fraction()
        assert tight.hi_fraction() <= wide.hi_fraction()

    def test_square_around_zero(self):
        iv = DyadicInterval.from_endpoints(Fraction(-1, 3), Fraction(1, 2))
        sq = iv.square()
        assert sq.lo_fraction() == 0
        assert sq.contains(Fraction(1, 9))

    def test_decimal(self):
        iv = DyadicInterval.from_fraction(Fraction(1, 8))
        assert iv.decimal(3) == "0.125"
        assert DyadicInterval.from_int(-2).decimal(2) == "-2.00"
