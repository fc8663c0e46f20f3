from fractions import Fraction

import pytest

from harborth import golden
from harborth.errors import MissingAnchor, NoIntersection, TangentDegenerate
from harborth.geometry import (build_config, circ_circ, extremal,
                               frame_transform, phi, solve_T)
from harborth.poly import poly_Z

T_NEAR = Fraction(golden.T_SOLVED)


def fmid(iv):
    return float(iv.midpoint())


class TestCircCirc:
    def test_unit_circles(self):
        p = circ_circ((0, 0), 1, (1, 0), 1, 1, 120)
        assert abs(fmid(p[0]) - 0.5) < 1e-30
        assert abs(fmid(p[1]) - 3 ** 0.5 / 2) < 1e-15

    def test_branch_mirror(self):
        up = circ_circ((0, 0), 1, (1, 0), 1, 1, 120)
        down = circ_circ((0, 0), 1, (1, 0), 1, -1, 120)
        assert abs(fmid(up[1]) + fmid(down[1])) < 1e-30

    def test_disjoint(self):
        with pytest.raises(NoIntersection):
            circ_circ((0, 0), 1, (3, 0), 1, 1)

    def test_nested(self):
        with pytest.raises(NoIntersection):
            circ_circ((0, 0), 4, (Fraction(1, 10), 0), Fraction(1, 100), 1)

    def test_tangent(self):
        with pytest.raises(TangentDegenerate):
            circ_circ((0, 0), 1, (2, 0), 1, 1)

    def test_bad_branch(self):
        with pytest.raises(ValueError):
            circ_circ((0, 0), 1, (1, 0), 1, 0)


class TestBuildConfig:
    def test_matches_published_numerics(self):
        cfg = build_config(T_NEAR, 300)
        for point in ("B", "D", "E", "F", "G", "H", "J"):
            for axis, iv in zip("xy", cfg.points[point]):
                want = golden.numeric_fraction(point, axis)
                # T_NEAR is itself only a 15-digit approximation
                assert abs(iv.midpoint() - want) < Fraction(1, 10 ** 12), \
                    (point, axis)

    def test_baseline(self):
        cfg = build_config(Fraction(1, 10), 120)
        assert fmid(cfg.points["A"][0]) == 0 == fmid(cfg.points["A"][1])
        assert fmid(cfg.points["C"][1]) == 0
        assert abs(fmid(cfg.points["B"][0]) - (1 - 0.01) ** 0.5) < 1e-15

    def test_unit_distances_numeric(self):
        cfg = build_config(Fraction(1, 10), 200)
        pairs = [("A", "F", 1), ("E", "F", 1), ("F", "G", 1), ("F", "J", 1),
                 ("G", "J", 1), ("D", "G", 4), ("D", "H", 4), ("G", "H", 4)]
        for p, q, r2 in pairs:
            (xp, yp), (xq, yq) = cfg.points[p], cfg.points[q]
            gap = (xp - xq).square() + (yp - yq).square() - r2
            assert gap.mag_upper() < Fraction(1, 2 ** 150), (p, q)

    def test_domain_guard(self):
        with pytest.raises(ValueError):
            build_config(Fraction(3, 2))
        with pytest.raises(ValueError):
            build_config(Fraction(-1, 10))


class TestPhi:
    def test_at_zero(self):
        r = phi(0, 200)
        assert r.phi.startswith("85.88496499926994")
        assert float(r.beta) == 60.0

    def test_right_angle_at_solution(self):
        r = phi(T_NEAR, 300)
        assert abs(float(r.phi) - 90) < 1e-12
        prod = r.m_alpha * r.m_beta
        assert abs(fmid(prod) - 1) < 1e-12

    def test_slope_sum_consistency(self):
        # phi = alpha + beta by construction of the report
        r = phi(Fraction(1, 20), 200)
        assert abs(float(r.phi) - float(r.alpha) - float(r.beta)) < 1e-15


class TestSolveT:
    def test_default_tolerance(self):
        iv = solve_T()
        assert iv.width() <= Fraction(1, 10 ** 16)
        assert iv.contains(Fraction("0.120725337054926")) or \
            abs(iv.midpoint() - Fraction("0.120725337054926")) \
            < Fraction(1, 10 ** 15)

    def test_tight(self):
        iv = solve_T(Fraction(1, 10 ** 40))
        assert iv.width() <= Fraction(1, 10 ** 40)
        assert str(iv.decimal(16)).startswith("0.12072533705492")


@pytest.fixture(scope="module")
def report():
    return extremal(200)


@pytest.fixture(scope="module")
def cfg():
    return build_config(T_NEAR, 300)


class TestExtremal:

    def test_endpoint_minpoly(self, report):
        assert report.b.minpoly == golden.extremal_quartic()

    def test_endpoint_nested_radical(self, report):
        # b = sqrt(7 - 3*sqrt(5)) / 4, built independently
        from harborth.algnum import AlgebraicNumber
        sqrt5 = AlgebraicNumber(poly_Z([-5, 0, 1]), (2, 3))
        other = (AlgebraicNumber.from_rational(7) - sqrt5 * 3).sqrt() / 4
        assert other == report.b

    def test_extreme_angles(self, report):
        assert abs(float(report.phi_at_0)
                   - float(golden.PHI_AT_ZERO)) < 1e-12
        assert abs(float(report.phi_at_b)
                   - float(golden.PHI_AT_MAX)) < 1e-12

    def test_residuals_small(self, report):
        for name, value in report.residuals.items():
            assert float(value) < 1e-14, name


class TestFrames:
    def test_center_frame(self, cfg):
        k = frame_transform(cfg, "K")
        assert k.points["H"][0].mag_upper() < Fraction(1, 10 ** 12)
        assert abs(k.points["A"][0].midpoint()
                   + cfg.points["J"][0].midpoint()) < Fraction(1, 2 ** 250)

    def test_mirror_is_involution(self, cfg):
        m = frame_transform(cfg, "J-mirror")
        back = frame_transform(m, "A")
        for p, (x, y) in back.points.items():
            assert (x - cfg.points[p][0]).mag_upper() < Fraction(1, 2 ** 250)

    def test_diagonal_frame(self, cfg):
        f = frame_transform(cfg, "F")
        assert f.points["F"][0].mag_upper() < Fraction(1, 2 ** 250)
        assert f.points["D"][1].mag_upper() < Fraction(1, 2 ** 250)
        assert f.points["D"][0].is_positive()

    def test_roundtrip_via_center(self, cfg):
        k = frame_transform(cfg, "K")
        back = frame_transform(k, "A")
        for p, (x, y) in back.points.items():
            assert (x - cfg.points[p][0]).mag_upper() < Fraction(1, 2 ** 250)

    def test_missing_anchor(self, cfg):
        f = frame_transform(cfg, "F")
        with pytest.raises(MissingAnchor):
            frame_transform(f, "K")
        with pytest.raises(MissingAnchor):
            frame_transform(cfg, "Z")

    def test_identity(self, cfg):
        assert frame_transform(cfg, "A") is cfg
