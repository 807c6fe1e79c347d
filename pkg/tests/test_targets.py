import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracroots.errors import DomainError, EvaluationError
from fracroots.targets import (
    EULER_MASCHERONI,
    ci_series,
    example3_system,
    hasse_zeta,
    make_target,
    parse_complex,
    parse_complex_vector,
    polynomial,
    si_series,
    zeta_functional,
    zeta_functional_target,
)

mp.mp.dps = 30


def ev(target, z):
    return complex(target.evaluate(np.array([z], dtype=np.complex128))[0])


finite_complex = st.complex_numbers(
    min_magnitude=1e-2, max_magnitude=30.0, allow_nan=False, allow_infinity=False
)


class TestCiSeries:
    def test_residual_at_first_root(self):
        # published run: |f_50(0.61650487)| = 8.14734e-7
        assert abs(ev(ci_series(50), 0.61650487 + 0j)) == pytest.approx(8.14734e-7, abs=1e-11)

    def test_residual_at_outer_root(self):
        # published run: |f_50(15.7703495)| = 9.53989e-9
        assert abs(ev(ci_series(50), 15.7703495 + 0j)) == pytest.approx(9.53989e-9, abs=1e-10)

    def test_against_high_precision_summation(self):
        ref = -mp.euler - mp.log(1)
        for m in range(1, 51):
            ref -= (-1) ** m * mp.mpf(1) ** (2 * m) / (2 * m * mp.factorial(2 * m))
        assert abs(ev(ci_series(50), 1 + 0j) - complex(ref)) < 1e-12

    def test_singularity_at_zero(self):
        with pytest.raises(EvaluationError):
            ev(ci_series(50), 0j)

    def test_truncation_metadata(self):
        t = ci_series(50)
        assert t.truncation_k == 50
        assert t.dimension == 1

    def test_rejects_bad_truncation(self):
        with pytest.raises(DomainError):
            ci_series(0)


class TestSiSeries:
    def test_residual_at_first_crossing(self):
        # published run: |f_50(1.92644561)| = 9.97696e-7
        assert abs(ev(si_series(50), 1.92644561 + 0j)) == pytest.approx(9.97696e-7, abs=1e-11)

    def test_residual_at_second_crossing(self):
        # published run: |f_50(4.89383571)| = 4.87621e-8
        assert abs(ev(si_series(50), 4.89383571 + 0j)) == pytest.approx(4.87621e-8, abs=1e-12)

    def test_value_at_origin(self):
        assert ev(si_series(50), 0j) == 0.5 * math.pi + 0j

    def test_against_high_precision_summation(self):
        x = mp.mpf("1.3")
        ref = mp.pi / 2
        for m in range(0, 51):
            ref -= (-1) ** m * x ** (2 * m + 1) / ((2 * m + 1) * mp.factorial(2 * m + 1))
        assert abs(ev(si_series(50), 1.3 + 0j) - complex(ref)) < 1e-12


class TestHasseZeta:
    def test_basel_value(self):
        assert abs(ev(hasse_zeta(50), 2 + 0j) - math.pi ** 2 / 6.0) < 1e-10

    def test_value_at_zero(self):
        assert abs(ev(hasse_zeta(50), 0j) + 0.5) < 1e-10

    def test_value_at_minus_one(self):
        assert abs(ev(hasse_zeta(50), -1 + 0j) + 1.0 / 12.0) < 1e-8

    def test_residual_at_first_nontrivial_zero(self):
        # published run: |f_50(0.49999963 + 14.13472531i)| = 3.22385e-7
        value = abs(ev(hasse_zeta(50), 0.49999963 + 14.13472531j))
        assert value == pytest.approx(3.22385e-7, abs=1e-10)

    def test_trivial_zero_residual(self):
        assert abs(ev(hasse_zeta(50), -2 + 0j)) < 1e-6

    def test_prefactor_pole_guard(self):
        with pytest.raises(EvaluationError):
            ev(hasse_zeta(50), 1 + 0j)
        with pytest.raises(EvaluationError):
            ev(hasse_zeta(50), complex(1.0, 2.0 * math.pi / math.log(2.0)))

    @settings(max_examples=40)
    @given(st.floats(min_value=-3.0, max_value=5.0))
    def test_real_input_gives_real_output(self, x):
        if abs(x - 1.0) < 1e-6:
            return
        assert ev(hasse_zeta(30), complex(x, 0.0)).imag == 0.0

    def test_truncation_monotonicity(self):
        probes = [2 + 0j, -0.5 + 0j, 0.5 + 3j, 3 + 1j]
        targets = {k: hasse_zeta(k) for k in (20, 30, 40, 50, 60)}
        for z in probes:
            gaps = [
                abs(ev(targets[k], z) - ev(targets[k + 10], z)) for k in (20, 30, 40, 50)
            ]
            assert all(b < a for a, b in zip(gaps, gaps[1:])), (z, gaps)

    def test_matches_reference_zeta_in_safe_region(self):
        for z in [2 + 0j, -0.5 + 0j, 3 - 2j, 0.5 + 14.1j]:
            ref = complex(mp.zeta(mp.mpc(z.real, z.imag)))
            assert abs(ev(hasse_zeta(50), z) - ref) < 1e-9


class TestZetaFunctional:
    def test_exact_zero_at_trivial_points(self):
        inner = hasse_zeta(60)
        for m in range(1, 6):
            assert zeta_functional(complex(-2 * m), inner) == 0j

    def test_minus_one(self):
        assert abs(zeta_functional(-1 + 0j, hasse_zeta(50)) + 1.0 / 12.0) < 1e-8

    def test_probe_magnitudes_near_minus_forty(self):
        inner = hasse_zeta(50)
        assert abs(zeta_functional(-40 + 0j, inner)) == 0.0
        for delta in (-1e-12, 1e-12):
            mag = abs(zeta_functional(complex(-40 + delta), inner))
            assert 2.4e3 <= mag <= 9.6e3

    def test_probe_magnitudes_near_minus_sixty(self):
        inner = hasse_zeta(50)
        assert abs(zeta_functional(-60 + 0j, inner)) == 0.0
        for delta in (-1e-12, 1e-12):
            mag = abs(zeta_functional(complex(-60 + delta), inner))
            assert 2.6e21 <= mag <= 1.1e22

    def test_use_region_enforced(self):
        with pytest.raises(DomainError):
            zeta_functional(0.5 + 3j, hasse_zeta(20))

    def test_overflow_guard(self):
        with pytest.raises(OverflowError):
            zeta_functional(-300 + 0.5j, hasse_zeta(20))

    def test_wrapper_target(self):
        t = zeta_functional_target(k=50)
        assert t.dimension == 1
        assert abs(ev(t, -1 + 0j) + 1.0 / 12.0) < 1e-8


class TestExample3System:
    def test_published_real_roots(self):
        f = example3_system()
        v = f.evaluate(np.array([-0.15442216 + 0j, 1.14021866 + 0j]))
        assert float(np.linalg.norm(v)) == pytest.approx(8.30511e-7, abs=1e-11)
        v = f.evaluate(np.array([1.34362303 + 0j, -4.29400761 + 0j]))
        assert float(np.linalg.norm(v)) == pytest.approx(4.60872e-7, abs=1e-11)

    def test_algebraic_cancellation_point(self):
        f = example3_system()
        v = f.evaluate(np.array([0.5 + 0j, math.pi + 0j]))
        assert v[1] == 0j

    def test_overflow_propagates(self):
        f = example3_system()
        with pytest.raises(OverflowError):
            f.evaluate(np.array([1000 + 0j, 1 + 0j]))


class TestPolynomial:
    def test_roots_of_unity(self):
        f = polynomial([1, 0, 1])
        assert ev(f, 1j) == 0j
        assert ev(f, 1 + 0j) == 2 + 0j

    def test_newton_cubic_root(self):
        # independent bisection oracle for the real root of x^3 - 2x - 5
        def cubic(x):
            return x ** 3 - 2.0 * x - 5.0

        lo, hi = 2.0, 3.0
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if cubic(mid) > 0:
                hi = mid
            else:
                lo = mid
        root = 0.5 * (lo + hi)
        assert abs(root - 2.0945514815) < 1e-9
        f = polynomial([1, 0, -2, -5])
        assert abs(ev(f, 2.0945514815 + 0j)) < 1e-8

    def test_leading_zero_rejected(self):
        with pytest.raises(DomainError):
            polynomial([0, 1, 1])

    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            polynomial([])


class TestConjugateSymmetry:
    @settings(max_examples=30)
    @given(finite_complex)
    def test_real_coefficient_targets(self, z):
        targets = [
            ci_series(30),
            si_series(30),
            hasse_zeta(30),
            polynomial([1, -2, 0.5]),
        ]
        for t in targets:
            if t.name == "ci" and z == 0:
                continue
            if t.name == "zeta-hasse" and abs(z - 1.0) < 0.05:
                continue
            try:
                left = ev(t, z.conjugate())
                right = ev(t, z).conjugate()
            except (EvaluationError, OverflowError):
                continue
            scale = max(abs(left), abs(right), 1.0)
            assert abs(left - right) <= 1e-12 * scale

    @settings(max_examples=20)
    @given(
        st.complex_numbers(min_magnitude=0.1, max_magnitude=5.0, allow_nan=False, allow_infinity=False)
    )
    def test_two_dimensional_system(self, z):
        f = example3_system()
        x = np.array([z, 0.3 - 0.2j])
        left = f.evaluate(np.conjugate(x))
        right = np.conjugate(f.evaluate(x))
        assert np.all(np.abs(left - right) <= 1e-12 * np.maximum(np.abs(right), 1.0))


class TestRegistry:
    def test_known_names(self):
        assert make_target("ci").name == "ci"
        assert make_target("si", k=20).truncation_k == 20
        assert make_target("zeta-hasse").name == "zeta-hasse"
        assert make_target("example3").dimension == 2
        assert make_target("poly", coeffs="1,0,1").name == "poly"

    def test_poly_needs_coefficients(self):
        with pytest.raises(DomainError):
            make_target("poly")

    def test_unknown_name(self):
        with pytest.raises(DomainError):
            make_target("riemann-siegel")


class TestComplexLiterals:
    @pytest.mark.parametrize(
        "text,value",
        [
            ("0.5+14.13i", 0.5 + 14.13j),
            ("-40", -40 + 0j),
            ("3i", 3j),
            ("1e-3-2.5e2i", 1e-3 - 250j),
            ("-0.86", -0.86 + 0j),
        ],
    )
    def test_parse(self, text, value):
        assert parse_complex(text) == value

    @pytest.mark.parametrize("text", ["1 + 2i", "abc", "", "1+2j+3i", "inf", "nan"])
    def test_parse_rejects(self, text):
        with pytest.raises(DomainError):
            parse_complex(text)

    def test_vector(self):
        v = parse_complex_vector("0.86,0.86")
        assert np.array_equal(v, np.array([0.86 + 0j, 0.86 + 0j]))

    def test_euler_gamma_constant(self):
        assert EULER_MASCHERONI == pytest.approx(float(mp.euler), abs=1e-16)
