from fractions import Fraction

import pytest

from harborth import golden
from harborth.poly import poly_Q, poly_Z
from harborth.tower import (Tower, build_coordinates, defining_constraints,
                            to_center_frame)


@pytest.fixture(scope="module")
def qsqrt2():
    return Tower(poly_Z([-2, 0, 1], "T"), (1, 2))


class TestBaseRing:
    def test_modular_reduction(self, qsqrt2):
        T = qsqrt2.param()
        assert (T * T - 2).is_zero_element()

    def test_base_inverse(self, qsqrt2):
        T = qsqrt2.param()
        x = T + 3          # 3 + sqrt(2)
        assert (x * x.inverse() - 1).is_zero_element()

    def test_inverse_of_zero(self, qsqrt2):
        with pytest.raises(ZeroDivisionError):
            qsqrt2.zero().inverse()

    def test_param_interval(self, qsqrt2):
        iv = qsqrt2.param_interval(100)
        assert iv.contains(Fraction(2) ** Fraction(1, 2)) or \
            abs(float(iv.midpoint()) - 2 ** 0.5) < 1e-25

    def test_scalar_mixing(self, qsqrt2):
        T = qsqrt2.param()
        assert ((T * Fraction(1, 2)) * 2 - T).is_zero_element()
        assert (2 - T) + (T - 2) == qsqrt2.zero()


@pytest.fixture(scope="module")
def tower():
    tw = Tower(poly_Z([-2, 0, 1], "T"), (1, 2))
    tw.adjoin("fourth", tw.param())   # sqrt(sqrt(2)) = 2^(1/4)
    tw.adjoin("also2", tw.base(2))    # a second copy of sqrt(2)
    return tw


class TestAdjoined:

    def test_square_relation(self, tower):
        g = tower.gen("fourth")
        assert (g * g - tower.param()).is_zero_element()
        assert (g ** 4 - 2).is_zero_element()

    def test_inverse_with_radical(self, tower):
        g = tower.gen("fourth")
        x = g + 1
        assert (x * x.inverse() - 1).is_zero_element()

    def test_interval(self, tower):
        g = tower.gen("fourth")
        mid = float((g * g * g).interval(120).midpoint())
        assert abs(mid - 2 ** 0.75) < 1e-30

    def test_zero_test_formal(self, tower):
        g = tower.gen("fourth")
        zt = (g * g - tower.param()).zero_test()
        assert zt.verdict == "proved-zero" and "vanish" in zt.detail

    def test_zero_test_nonzero(self, tower):
        g = tower.gen("fourth")
        assert (g - 1).zero_test(80).verdict == "proved-nonzero"

    def test_zero_test_norm_descent(self, tower):
        # sqrt(2) entered twice: the generators agree at the embedded
        # point but differ formally, so only the conjugate-norm descent
        # can certify that their difference vanishes.
        h = tower.gen("also2")
        diff = h - tower.param()
        assert not diff.is_zero_element()
        zt = diff.zero_test(120)
        assert zt.verdict == "proved-zero" and "cofactors" in zt.detail

    def test_zero_test_detects_tiny_nonzero(self, tower):
        h = tower.gen("also2")
        x = h - tower.param() + Fraction(1, 10 ** 30)
        assert x.zero_test(200).verdict == "proved-nonzero"


@pytest.fixture(scope="module")
def coordinates():
    return build_coordinates(golden.minpoly("T"))


class TestCoordinates:
    def test_numeric_agreement(self, coordinates):
        tower, coords = coordinates
        for point in ("B", "D", "E", "F", "G", "H", "J"):
            for axis, value in zip("xy", coords[point]):
                want = golden.numeric_fraction(point, axis)
                iv = value.interval(120)
                got = iv.midpoint()
                assert abs(got - want) < Fraction(1, 10 ** 14), \
                    (point, axis, float(got), float(want))

    def test_center_frame_symmetry(self, coordinates):
        _, coords = coordinates
        kcoords = to_center_frame(coords)
        x_H = kcoords["H"][0]
        assert x_H.interval(200).mag_upper() < Fraction(1, 2 ** 150)

    def test_all_constraints_proved_zero(self, coordinates):
        _, coords = coordinates
        eqs = defining_constraints(to_center_frame(coords))
        assert len(eqs) == 14
        for label, residual in eqs:
            assert residual.zero_test().verdict == "proved-zero", label

    def test_unit_distance_is_not_formal_everywhere(self, coordinates):
        # the orthogonality constraint really needs the minimal polynomial:
        # it is not an identity in the parameter
        _, coords = coordinates
        eqs = dict(defining_constraints(to_center_frame(coords)))
        assert not eqs["orthogonality x_H = x_J"].is_zero_element()
