import math

import pytest

from fixcircle.circles import (
    compute_r,
    enumerate_fixed_circles,
    verify_fixed_circle,
    verify_fixed_disc,
    verify_theorem,
)
from fixcircle.contractions import MultivaluedMap, ciric_M, max_tau
from fixcircle.errors import ParameterError
from fixcircle.metric import MatrixSpace
from fixcircle.wardowski import LN

from conftest import all_subsets

LN_4_3 = math.log(4 / 3)


def test_r_example2(ex2):
    res = compute_r(ex2.T)
    assert res.r == 3.0
    assert set(res.attaining_points) == {str(n) for n in range(4, 13)}


def test_r_three_point(three_point):
    _, T = three_point
    res = compute_r(T)
    assert res.r == 2 and res.attaining_points == ("b",)


def test_r_vacuous():
    space = MatrixSpace(["a"], [[0]])
    res = compute_r(MultivaluedMap.identity(space))
    assert res.vacuous and res.r == math.inf


def test_fixed_circles_three_point(three_point):
    space, T = three_point
    found = {(v.circle.center, frozenset(v.circle.members)) for v in enumerate_fixed_circles(T)}
    expected = set()
    for x0 in space.points:
        for rho in {space.distance(x0, y) for y in space.points}:
            members = frozenset(y for y in space.points if space.distance(x0, y) == rho)
            if members <= {"a", "c"}:
                expected.add((x0, members))
    assert found == expected
    for subset in all_subsets(space.points):
        if "b" in subset:
            assert (("a", frozenset(subset)) not in found)


def test_example2_circle_radius_five_not_fixed(ex2):
    v = verify_fixed_circle(ex2.T, "0", 5)
    assert not v.vacuous and not v.fixed
    assert {x for x, ok in v.witnesses if not ok} == {"5"}


def test_empty_circle_is_vacuously_fixed(ex2):
    v = verify_fixed_circle(ex2.T, "0", 3.5)
    assert v.vacuous and v.fixed


def test_example2_theorem(ex2):
    t = verify_theorem(ex2.T, LN, LN_4_3 - 1e-10, "0", "fc")
    assert t.status == "theorem-certified"
    assert t.hypotheses_hold and t.conclusions_hold
    assert len(t.circle.circle.members) == 16
    assert t.disc.fixed and t.center_fixed
    assert any(c.disc for c in t.certified)


def test_example3_theorem(ex2):
    t = verify_theorem(ex2.T, LN, LN_4_3, "0", "ciric-fc")
    assert t.hypothesis_checks == {"contraction": True, "D(Tx,x0)=r": True}
    assert t.circle.fixed
    assert [c.disc for c in t.certified] == [False]


def test_example1_converse_failure(ex1):
    t = verify_theorem(ex1.T, LN, 0.1, "-1", "fc")
    assert t.status == "unconditioned"
    assert not t.hypotheses_hold
    c = verify_fixed_circle(ex1.T, "-1", 1)
    assert set(c.circle.members) == {"-2", "0"} and c.fixed
    assert verify_fixed_disc(ex1.T, "-1", 1).fixed


def test_complex_enumeration_needs_radii(ex2):
    with pytest.raises(ParameterError):
        enumerate_fixed_circles(ex2.T)
    found = enumerate_fixed_circles(ex2.T, [3.0])
    assert any(v.circle.center == "0" for v in found)


def test_ciric_disc_counterexample():
    # C(p0, 4) is empty, so the side hypothesis holds vacuously; p3 is moved.
    labels = ["p0", "p3", "p6"]
    space = MatrixSpace(labels, [[0, 3, 6], [3, 0, 4], [6, 4, 0]])
    T = MultivaluedMap(space, {"p0": ["p0"], "p3": ["p6"], "p6": ["p6"]})
    assert compute_r(T).r == 4
    # M(p3, p0) = (3 + 6) / 2 = 4.5 exceeds H(Tp3, {p3}) = 4
    assert ciric_M(T, "p3", "p0") == 4.5
    tau = max_tau(T, LN, "p0", "ciric-fc").tau_max
    assert tau == pytest.approx(math.log(9 / 8), abs=1e-12)
    t = verify_theorem(T, LN, tau, "p0", "ciric-fc")
    assert t.hypotheses_hold and t.conclusions_hold
    assert not t.disc.fixed
    assert all(not c.disc for c in t.certified)
