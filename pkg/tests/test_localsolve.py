import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagcubic.eisenstein import EisensteinInt, split_prime
from diagcubic.localsolve import (
    CurveSpec,
    certified_depth,
    everywhere_locally_solvable,
    make_place,
    q3_canonical_form,
    q3_family_solvable,
    solvable_generic_local,
    solvable_kq_torsor,
    solvable_lambda,
    solvable_Q3,
    solvable_Qp,
    torsor_curve,
)
from diagcubic.oracle import brute_local

coeff = st.integers(-40, 40).filter(bool)


def test_curve_spec_rejects_zero():
    with pytest.raises(ValueError):
        CurveSpec(1, 0, 2)


def test_qp_examples():
    assert solvable_Qp(CurveSpec(5, 9, -10), 5).solvable is True
    assert solvable_Qp(CurveSpec(1, 2, 5), 5).solvable is True
    v = solvable_Qp(CurveSpec(1, 7, 49), 7)
    assert v.solvable is False and v.place == "Q_7"


def test_q3_family_table():
    assert q3_family_solvable(0, 0, 0)
    assert not solvable_Q3(CurveSpec(1, 2, 5)).solvable
    assert solvable_Q3(CurveSpec(1, 1, 2)).solvable
    assert q3_canonical_form(8, 1, 1) == q3_canonical_form(1, 1, 1)


def test_kq_torsor_cases():
    v = solvable_kq_torsor(5, 1, 2)
    assert v.solvable is True and v.case == "coprime"
    q = split_prime(7)
    v = solvable_kq_torsor(7 * 2, 1, q)
    assert v.case.startswith("residue-symbol")


def test_lambda_matches_brute():
    for coeffs in [(1, 1, 2), (1, 2, 5), (1, 3, 9), (1, EisensteinInt(0, 1), 2)]:
        curve = CurveSpec(*coeffs)
        assert solvable_lambda(curve).solvable == brute_local(curve, EisensteinInt(1, -1)).solvable


def test_depth_grows_at_three():
    assert certified_depth(make_place(3)) > certified_depth(make_place(5))


@settings(max_examples=40)
@given(coeff, coeff, coeff, st.sampled_from([2, 3, 5, 7, 13]))
def test_fast_path_matches_enumeration(a, b, c, p):
    curve = CurveSpec(a, b, c)
    assert solvable_Qp(curve, p).solvable == solvable_generic_local(curve, p).solvable


def test_everywhere_local():
    ok, verdicts = everywhere_locally_solvable(CurveSpec(3, 4, 5))
    assert ok and all(v.solvable for v in verdicts)
    ok, _ = everywhere_locally_solvable(CurveSpec(1, 2, 5))
    assert not ok


def test_torsor_curve_shape():
    curve = torsor_curve(550, 2)
    assert curve.eisenstein() == (EisensteinInt(4), EisensteinInt(1), EisensteinInt(1100))


def test_verdict_to_dict():
    d = solvable_Qp(CurveSpec(1, 7, 49), 7).to_dict()
    assert set(d) == {"solvable", "place", "case", "certificate"}
