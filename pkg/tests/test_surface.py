import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagcubic.eisenstein import ZETA, EisensteinInt
from diagcubic.surface import (
    ALLOWED_PROFILES,
    birational_to_plane_over_Qp,
    combine_descent_point,
    cube_ratios,
    everywhere_local_surface,
    family_surface,
    normalize,
    rational_point_from_k_point,
    selmer_ratio_criterion,
    splitting_candidates,
    surface_point_search,
    theorem28_pipeline,
    theorem35_criteria,
)

coeff = st.integers(-200, 200).filter(bool)


def test_normalize_examples():
    assert normalize(8, 1, 1, 1).coefficients == (1, 1, 1, 1)
    assert normalize(1, 1, 9, 81).coefficients == (1, 1, 9, 3)


def test_split_form_round_trip():
    s = normalize(1, 2, 3, 5, form="split")
    assert s.split_coefficients == (1, 2, 3, 5)
    assert s.sum_coefficients == (1, 2, -3, -5)
    assert s.contains((1, 1, 1, 0))


@settings(max_examples=40)
@given(coeff, coeff, coeff, coeff)
def test_normalize_idempotent_and_profiled(a, b, c, d):
    s = normalize(a, b, c, d)
    assert normalize(*s.coefficients) == s
    for p, prof in s.valuation_profile.items():
        assert tuple(sorted(prof)) in ALLOWED_PROFILES


def test_normalize_rejects_zero():
    with pytest.raises(ValueError):
        normalize(0, 1, 1, 1)


def test_point_search_fermat():
    s = normalize(1, 1, 1, 1)
    pt = surface_point_search(s, 2)
    assert pt == (0, 0, 1, -1)
    assert surface_point_search(s, 2, threads=2) == pt


def test_point_search_maps_back():
    s = normalize(8, 1, 1, 1)
    pt = surface_point_search(s, 2)
    orig = s.to_original(pt)
    assert 8 * orig[0] ** 3 + orig[1] ** 3 + orig[2] ** 3 + orig[3] ** 3 == 0


def test_combine_descent_point():
    s = normalize(1, 1, 1, 1, form="split")
    assert combine_descent_point(s, 2, (1, 1, 1), (1, 1, 1)) == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        combine_descent_point(s, 2, (1, 2, 1), (1, 1, 1))


def test_rational_point_from_k_point():
    s = normalize(1, 1, 1, 1)
    pt = rational_point_from_k_point(s, (1, -1, ZETA, -ZETA))
    assert s.contains(pt) and any(pt)
    with pytest.raises(ValueError):
        rational_point_from_k_point(s, (1, 1, 1, EisensteinInt(0)))


def test_ratio_criterion():
    assert selmer_ratio_criterion((1, 2, 4, 1))
    assert cube_ratios((1, 2, 4, 1)) == ["a1a4/a2a3"]
    assert cube_ratios((1, 3, 5, 7)) == []
    assert not selmer_ratio_criterion((5, 9, 10, 12))


def test_birational_over_qp():
    assert birational_to_plane_over_Qp((1, 10, 55, 22), 2)
    assert not birational_to_plane_over_Qp((1, 10, 55, 22), 3)


def test_splitting_candidates_cover_classes():
    s = normalize(1, 10, 55, 22)
    assert len(splitting_candidates(s, 5)) == 3
    assert len(splitting_candidates(s, 3)) == 9


def test_local_obstruction_detected():
    ok, verdicts = everywhere_local_surface(normalize(1, 2, 4, 9 * 5))
    assert isinstance(ok, bool)
    if not ok:
        assert any(w is None for w in verdicts.values())


def test_criteria_report_serialises():
    rep = theorem35_criteria(normalize(21, 1, 2, 5))
    d = rep.to_dict()
    assert "3.5-ii" in rep.labels
    assert d["locally_solvable"] is True


def test_family_surface_shape():
    assert family_surface(2, 11, 5).coefficients == (1, 22, 55, 10)


def test_family_repeated_primes():
    rep = theorem28_pipeline(2, 2, 5)
    assert rep.surface_point is not None
    assert rep.surface.contains(rep.surface_point)


def test_family_with_search_finds_point():
    rep = theorem28_pipeline(2, 11, 5, search=20)
    assert rep.surface_point is not None
    assert rep.surface.contains(rep.surface_point)
    assert rep.to_dict()["A"] == 550
