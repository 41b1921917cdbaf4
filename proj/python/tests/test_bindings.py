from fractions import Fraction as F
import math

import pytest

import hypmaj


def test_coefficients_and_roots():
    assert hypmaj.coefficients([3, 1, 2]) == [-6, 11, -6, 1]
    assert hypmaj.coefficients(["1/2", "1/2"]) == [F(1, 4), -1, 1]
    roots = hypmaj.real_roots([-6, 11, -6, 1])
    assert roots == pytest.approx([1, 2, 3], abs=1e-12)
    assert hypmaj.is_real_rooted([-2, 0, 1])
    assert not hypmaj.is_real_rooted([1, 0, 1])


def test_float_mode_is_inferred():
    c = hypmaj.coefficients([0.5, 1.5])
    assert all(isinstance(v, float) for v in c)


def test_majorization_certificates():
    cert = hypmaj.check_majorization([1, 1, 2], [0, 2, 2])
    assert cert["verdict"] == "Less"
    assert cert["slacks"] == ["0", "1"]
    assert hypmaj.check_majorization([0, 1], [0, 2])["verdict"] == "NotComparable_SumMismatch"
    assert hypmaj.hinge_oracle([1, 1], [0, 2])
    assert not hypmaj.hinge_oracle([0, 2], [1, 1])
    assert hypmaj.matching_distance([0, 4], [1, 3]) == 1


def test_witness_and_chain():
    assert hypmaj.witness([1, 3], [0, 4]) == [[F(3, 4), F(1, 4)], [F(1, 4), F(3, 4)]]
    chain = hypmaj.decompose([0, 2, 4], [1, 2, 3])
    assert len(chain["steps"]) == 8
    assert hypmaj.verify_chain(chain)
    assert hypmaj.apply_contraction([0, 4], 1, 2, 1) == [1, 3]


def test_operators():
    assert hypmaj.appell({"a": 1}, 2) == [-2, 0, 1]
    assert hypmaj.apply_operator({"alphas": [1]}, [0, 0, 1]) == [-1, 0, 1]
    assert hypmaj.shift_pencil([0, 0, 1], 1) == [-1, 0, 1]
    assert hypmaj.gaussian([0, 0, 0, 1], "1/2") == [0, -3, 0, 1]
    assert hypmaj.multiplier([-1, 0, 1], hypmaj.laguerre_ms(1, 0, 3), normalized=True) == [0, 0, 1]
    assert hypmaj.deform({"a": 1, "alphas": [2]}, ["1/2", "1/3"])["alphas"] == ["2/3"]


def test_pencil():
    s = hypmaj.pencil_at([-1, 1], 1.0)
    assert s["roots"] == pytest.approx([1 - math.sqrt(2), 1 + math.sqrt(2)])
    assert hypmaj.scan_monotonicity([0, 0], [-2, -1, 0, 1, 2])["violations"] == 0
    assert hypmaj.pencil_check([0, 4], [1, 3], 1.0)["verdict"] == "Less"


def test_harness():
    assert "main1" in hypmaj.suite_names()
    rep = hypmaj.run_suite("main1", trials=20, seed=5)
    assert rep["passed"] and rep["trials"] == 20
    assert hypmaj.run_hunt("pb1", trials=20, family="k")["failures"] == 0


def test_errors():
    with pytest.raises(hypmaj.HypmajError, match="NotMajorized"):
        hypmaj.decompose([1, 3], [0, 4])
    with pytest.raises(ValueError):
        hypmaj.coefficients([])
    with pytest.raises(hypmaj.HypmajError, match="Config"):
        hypmaj.run_suite("main1", trails=3)
