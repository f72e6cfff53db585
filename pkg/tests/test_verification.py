import pytest
from hypothesis import HealthCheck, given, settings

from algebra.families import cover_ideal, cycle_edges
from algebra.ideal import MonomialIdeal, maximal_ideal
from helpers import ideals, path_ideal, stabind_ideal
from utils.verification import (
    bound_conformance,
    characterization,
    power_identities,
    sat_scaling,
    shift_invariance,
    system_oracle,
    verify_ideal,
)

slow_settings = settings(deadline=None, suppress_health_check=[HealthCheck.too_slow])


def test_verify_path_ideal():
    report = verify_ideal(path_ideal(), 3)
    assert report.ok
    assert [check.name for check in report.checks] == [
        "characterization",
        "power identities",
        "system oracle",
        "gcd shift",
        "bound conformance",
        "sat scaling",
    ]
    assert all(check.cases > 0 for check in report.checks)


def test_verify_triangle_cover_ideal_without_sat():
    report = verify_ideal(cover_ideal(3, cycle_edges(3)), 3, include_sat=False)
    assert report.ok
    assert "sat scaling" not in [check.name for check in report.checks]


def test_stabind_characterization_and_bounds():
    assert characterization(stabind_ideal(), 4).ok
    assert bound_conformance(stabind_ideal(), 6).ok


@pytest.mark.property_based
@given(ideals())
@settings(slow_settings, max_examples=200)
def test_characterization_conditions_agree(I):
    result = characterization(I, 4)
    assert result.ok, result.mismatches


@pytest.mark.property_based
@given(ideals())
@settings(slow_settings, max_examples=100)
def test_power_identities(I):
    result = power_identities(I, 4)
    assert result.ok, result.mismatches


@pytest.mark.property_based
@pytest.mark.slow
@given(ideals())
@settings(slow_settings, max_examples=50)
def test_systems_describe_powers_and_colons(I):
    result = system_oracle(I, 4)
    assert result.ok, result.mismatches


@pytest.mark.property_based
@given(ideals())
@settings(slow_settings, max_examples=200)
def test_gcd_shift_only_touches_singletons(I):
    result = shift_invariance(I, 4)
    assert result.ok, result.mismatches


@pytest.mark.property_based
@given(ideals())
@settings(slow_settings, max_examples=100)
def test_confirmed_copersistence_respects_sigma2(I):
    result = bound_conformance(I, 6)
    assert result.ok, result.mismatches


@pytest.mark.property_based
@pytest.mark.slow
@given(ideals(max_s=3, max_entry=2))
@settings(slow_settings, max_examples=20)
def test_some_scale_describes_the_saturation(I):
    result = sat_scaling(I, 4)
    assert result.ok and not result.unknown, result.mismatches + result.unknown


def test_exhausted_scale_cap_is_unknown_not_a_mismatch():
    result = sat_scaling(maximal_ideal(2), 3, cap=2)
    assert result.ok
    assert result.cases == 3
    assert result.unknown == ["n=3: no N in [1, 2] matches sat(I^3)"]


def test_high_degree_generator_needs_a_large_scale():
    report = verify_ideal(MonomialIdeal(2, [(70, 0), (0, 1)]), 1)
    assert report.ok
    assert all(not check.unknown for check in report.checks)
