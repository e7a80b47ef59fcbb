import math
from fractions import Fraction

import pytest

from fixcircle.contractions import (
    MultivaluedMap,
    check,
    check_ciric_fc,
    check_fc,
    ciric_M,
    displacement,
    max_tau,
    search_witness,
    zero_displacement_iff_member,
)
from fixcircle.errors import DomainError, SchemaError
from fixcircle.metric import ComplexSpace, MatrixSpace
from fixcircle.quadrature import ONE, IntegralPhi
from fixcircle.wardowski import BUILTINS, LN

LN_4_3 = math.log(4 / 3)


def example2_fc_oracle(space):
    """min over displaced chain points of ln|x| - ln 3 (every chain displacement is 3)."""
    return min(math.log(abs(space.coordinate(x))) - math.log(3)
               for x in space.points if abs(space.coordinate(x)) >= 4)


def test_displacement_is_farthest_image(ex2):
    assert displacement(ex2.T, "4") == 3
    assert displacement(ex2.T, "0") == 0
    assert displacement(ex2.T, "c3") == 0


def test_displacement_example1(ex1):
    for n in (1, 2, 20):
        assert displacement(ex1.T, f"x{n}") == 2 + Fraction(1, n)


def test_zero_displacement_means_member(ex1, ex2):
    for inst in (ex1, ex2):
        for x in inst.space.points:
            zero, member = zero_displacement_iff_member(inst.T, x)
            if zero:
                assert member


def test_example2_fc_tau_max(ex2):
    v = max_tau(ex2.T, LN, "0", "fc")
    oracle = example2_fc_oracle(ex2.space)
    assert oracle == pytest.approx(LN_4_3, abs=1e-15)
    assert v.tau_max == pytest.approx(LN_4_3, abs=1e-12)
    assert v.holds and v.attained_at == "4"


def test_ciric_M_brute_force(ex2):
    space, T = ex2.space, ex2.T
    d = space.distance
    D = lambda x, ys: min(d(x, y) for y in ys)
    terms = [d("4", "0"), D("4", ["5", "6", "7"]), D("0", ["0"]),
             (D("4", ["0"]) + D("0", ["5", "6", "7"])) / 2]
    assert max(terms) == 4.5
    assert ciric_M(T, "4", "0") == pytest.approx(4.5, abs=1e-12)


def test_ciric_tau_max_example2(ex2):
    v = max_tau(ex2.T, LN, "0", "ciric-fc")
    assert v.tau_max == pytest.approx(math.log(1.5), abs=1e-12)
    assert check_ciric_fc(ex2.T, LN, LN_4_3, "0").holds


def test_integral_linear_tau_max(ex2):
    phi = IntegralPhi.parse("linear:2")
    # Phi(s) = s**2 so the slack is ln(|x|**2) - ln 9, smallest at |x| = 4
    v = max_tau(ex2.T, LN, "0", "integral-fc", phi)
    assert v.tau_max == pytest.approx(math.log(16 / 9), abs=1e-12)


def test_example1_tau_max_zero(ex1):
    for cls in ("fc", "ciric-fc"):
        v = max_tau(ex1.T, LN, "-1", cls)
        assert v.tau_max == 0
        assert not v.holds
        assert not check(ex1.T, LN, 0.1, "-1", cls).holds


def test_check_boundary(ex2):
    tau_max = max_tau(ex2.T, LN, "0").tau_max
    assert check_fc(ex2.T, LN, tau_max, "0").holds
    assert not check_fc(ex2.T, LN, tau_max + 1e-6, "0").holds
    bad = check_fc(ex2.T, LN, 1.0, "0")
    assert {v.point for v in bad.violations} >= {"4", "5"}
    assert all(v.reason == "inequality" for v in bad.violations)


def test_center_displaced_forces_minus_infinity():
    space = MatrixSpace(["a", "b"], [[0, 1], [1, 0]])
    T = MultivaluedMap(space, {"a": ["b"], "b": ["b"]})
    v = max_tau(T, LN, "a")
    assert v.tau_max == -math.inf
    assert v.violations[0].reason == "F-domain"


def test_identity_map_is_vacuous():
    space = MatrixSpace(["a", "b"], [[0, 1], [1, 0]])
    v = max_tau(MultivaluedMap.identity(space), LN, "a")
    assert v.vacuous and v.holds and v.tau_max == math.inf


def test_nonpositive_tau_rejected(ex2):
    with pytest.raises(DomainError):
        check_fc(ex2.T, LN, 0.0, "0")


def test_unknown_class(ex2):
    with pytest.raises(SchemaError):
        max_tau(ex2.T, LN, "0", "banach")


def test_map_must_be_total():
    space = MatrixSpace(["a", "b"], [[0, 1], [1, 0]])
    with pytest.raises(SchemaError):
        MultivaluedMap(space, {"a": ["a"]})
    with pytest.raises(SchemaError):
        MultivaluedMap(space, {"a": ["a"], "b": ["z"]})
    with pytest.raises(SchemaError):
        MultivaluedMap(space, {"a": ["a"], "b": []})


def test_phi_one_reduction_bit_exact(ex1, ex2):
    for inst, x0 in ((ex1, "-1"), (ex2, "0")):
        for plain, integral in (("fc", "integral-fc"), ("ciric-fc", "integral-ciric-fc")):
            a = max_tau(inst.T, LN, x0, plain)
            b = max_tau(inst.T, LN, x0, integral, ONE)
            assert a.tau_max == b.tau_max and a.holds == b.holds


def test_search_finds_example2_center(ex2):
    found = search_witness(ex2.T, BUILTINS, ["0", "1", "4"])
    assert found
    assert all(w.tau_max > 0 for w in found)
    assert [w.tau_max for w in found] == sorted((w.tau_max for w in found), reverse=True)
    assert any(w.x0 == "0" and w.cls == "fc" and w.F == "ln" for w in found)


def test_complex_images_outside_sample():
    space = ComplexSpace({"0": 0j, "1": 1 + 0j}, ambient={"5": 5 + 0j})
    T = MultivaluedMap(space, {"0": ["0"], "1": ["5"]})
    assert displacement(T, "1") == 4.0
