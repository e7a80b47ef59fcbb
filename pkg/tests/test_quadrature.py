import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixcircle.errors import DomainError, RangeError, SchemaError
from fixcircle.quadrature import ONE, IntegralPhi, adaptive_simpson, integral_Phi

LINEAR2 = IntegralPhi("linear", slope=2.0)


def test_closed_forms():
    assert integral_Phi(ONE, 2.5) == 2.5
    assert integral_Phi(ONE, 0) == 0
    assert integral_Phi(LINEAR2, 3) == 9.0


def test_simpson_matches_closed_forms():
    assert integral_Phi(LINEAR2, 3, method="simpson") == pytest.approx(9.0, abs=1e-12)
    assert integral_Phi(ONE, 7, method="simpson") == pytest.approx(7.0, abs=1e-12)


def test_adaptive_simpson_transcendental():
    assert adaptive_simpson(math.sin, 0.0, math.pi, 1e-10) == pytest.approx(2.0, abs=1e-9)
    assert adaptive_simpson(math.exp, 1.0, 0.0, 1e-10) == pytest.approx(1 - math.e, abs=1e-9)


@settings(max_examples=200)
@given(st.floats(min_value=0.0, max_value=100.0), st.sampled_from([ONE, LINEAR2]))
def test_quadrature_within_ten_tolerances(s, phi):
    exact = integral_Phi(phi, s)
    assert abs(integral_Phi(phi, s, method="simpson") - exact) <= 10 * phi.quad_tol


@given(st.floats(min_value=0.0, max_value=50.0), st.floats(min_value=0.0, max_value=50.0))
def test_Phi_nondecreasing(a, b):
    lo, hi = sorted((a, b))
    assert integral_Phi(LINEAR2, lo) <= integral_Phi(LINEAR2, hi)


def test_sampled_phi():
    phi = IntegralPhi.sampled([(0.0, 1.0), (1.0, 3.0), (2.0, 3.0)])
    # trapezoid over [0,1] plus rectangle over [1,2]
    assert integral_Phi(phi, 2.0) == pytest.approx(5.0, abs=1e-9)
    assert integral_Phi(phi, 0.5) == pytest.approx(0.5 * (1.0 + 2.0) / 2, abs=1e-9)
    with pytest.raises(RangeError):
        integral_Phi(phi, 3.0)


def test_sampled_phi_validation():
    with pytest.raises(DomainError):
        IntegralPhi.sampled([(0.0, 1.0), (1.0, -1.0)])
    with pytest.raises(DomainError):
        IntegralPhi.sampled([(0.0, 0.0), (1.0, 0.0), (2.0, 1.0)])
    with pytest.raises(SchemaError):
        IntegralPhi.sampled([(0.5, 1.0), (1.0, 1.0)])


def test_parse():
    assert IntegralPhi.parse("one") == ONE
    assert IntegralPhi.parse("linear:2").slope == 2.0
    with pytest.raises(SchemaError):
        IntegralPhi.parse("cubic")
    with pytest.raises(DomainError):
        IntegralPhi.parse("linear:0")


def test_negative_upper_limit():
    with pytest.raises(DomainError):
        integral_Phi(ONE, -1.0)
