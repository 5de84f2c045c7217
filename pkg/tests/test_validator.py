from dataclasses import replace

import numpy as np
import pytest

from randlp import (
    GeneratorParams,
    Inequality,
    UnsupportedDimensionError,
    build_objective,
    build_support,
    generate_sequential,
    objective_value,
    support_only_solution,
    validate_instance,
    verify_support_solution,
)

from conftest import make_params


@pytest.fixture(scope="module")
def demo_instance():
    inst, _ = generate_sequential(GeneratorParams(n=2, d=5, seed=42))
    return inst


def conditions(report):
    return [v.condition for v in report.violations]


@pytest.mark.parametrize("n", [1, 2, 3, 7])
def test_support_only_instances_validate(n):
    inst, _ = generate_sequential(GeneratorParams(n=n, d=0, seed=0))
    report = validate_instance(inst)
    assert report.ok
    assert report.violations == ()


def test_generated_instance_validates(demo_instance):
    report = validate_instance(demo_instance)
    assert report.ok, report.violations


def test_duplicate_random_row_flagged_alike(demo_instance):
    dup = demo_instance.random[0]
    bad = replace(demo_instance, random=demo_instance.random + (dup,))
    report = validate_instance(bad)
    assert not report.ok
    alike = [v for v in report.violations if v.condition.startswith("alike with")]
    assert len(alike) == 1
    # the duplicate sits at the end of the system and names its twin
    assert alike[0].constraint == bad.m - 1
    first_random = 2 * bad.n + 1
    assert f"constraint {first_random}" in alike[0].condition


def test_pulled_in_row_breaks_feasibility_or_band(demo_instance):
    q = demo_instance.random[0]
    norm = float(np.linalg.norm(q.a))
    theta = demo_instance.params.theta
    bad_row = Inequality(q.a, q.b - 2 * theta * norm)
    bad = replace(demo_instance, random=(bad_row,) + demo_instance.random[1:])
    report = validate_instance(bad)
    assert not report.ok
    conds = conditions(report)
    assert any(
        c in ("center feasibility a.h <= b", "distance > rho") for c in conds
    )


def test_sign_flipped_row_breaks_center_feasibility(demo_instance):
    q = demo_instance.random[2]
    flipped = Inequality(-q.a, -q.b)
    bad = replace(
        demo_instance,
        random=demo_instance.random[:2] + (flipped,) + demo_instance.random[3:],
    )
    report = validate_instance(bad)
    assert not report.ok
    assert "center feasibility a.h <= b" in conditions(report)


def test_tampered_support_row_is_exact_mismatch(demo_instance):
    rows = list(demo_instance.support)
    rows[0] = Inequality(rows[0].a, rows[0].b + 1e-12)
    bad = replace(demo_instance, support=tuple(rows))
    report = validate_instance(bad)
    assert not report.ok
    assert "bounding row mismatch" in conditions(report)


def test_tampered_objective_is_exact_mismatch(demo_instance):
    bad = replace(demo_instance, c=demo_instance.c * (1.0 + 1e-15))
    report = validate_instance(bad)
    assert not report.ok
    assert "objective row mismatch" in conditions(report)


def test_zero_norm_row_flagged(demo_instance):
    zero = Inequality(np.zeros(2), 5.0)
    bad = replace(demo_instance, random=demo_instance.random + (zero,))
    report = validate_instance(bad)
    assert not report.ok
    assert "nonzero coefficient norm" in conditions(report)


def test_wrong_support_count_is_structural(demo_instance):
    bad = replace(demo_instance, support=demo_instance.support[:-1])
    report = validate_instance(bad)
    assert not report.ok
    assert any(v.constraint == -1 for v in report.violations)
    assert "support row count" in conditions(report)


def test_nonimproving_row_flagged(demo_instance):
    # distance 80 is fine but the projection scores 14000 < 30000
    bad_row = Inequality([-1.0, 0.0], -20.0)
    bad = replace(demo_instance, random=demo_instance.random + (bad_row,))
    report = validate_instance(bad)
    assert not report.ok
    assert "objective improvement at projection" in conditions(report)


def test_distance_exactly_rho_is_too_close(demo_instance):
    # integer arithmetic: distance from (100,100) to x <= 150 is exactly 50
    bad_row = Inequality([1.0, 0.0], 150.0)
    bad = replace(demo_instance, random=demo_instance.random + (bad_row,))
    report = validate_instance(bad)
    assert not report.ok
    assert "distance > rho" in conditions(report)


def test_distance_exactly_theta_is_allowed(demo_instance):
    # x <= 200 sits exactly at distance theta; the band holds, only the
    # likeness to the matching bounding row trips
    edge_row = Inequality([1.0, 0.0], 200.0)
    bad = replace(demo_instance, random=demo_instance.random + (edge_row,))
    report = validate_instance(bad)
    conds = conditions(report)
    assert "distance > rho" not in conds
    assert "distance <= theta" not in conds
    assert any(c.startswith("alike with") for c in conds)


def test_distance_within_write_noise_is_allowed(demo_instance):
    # just past theta but inside the 1e-9 relative slack reserved for
    # serialization noise on the non-strict bound
    ang = 0.3
    a = np.array([np.cos(ang), np.sin(ang)])
    ah = float(a @ np.array([100.0, 100.0]))
    edge_row = Inequality(a, ah + 100.0 + 4e-8)
    ok = replace(demo_instance, random=demo_instance.random + (edge_row,))
    report = validate_instance(ok)
    assert "distance <= theta" not in conditions(report)

    far_row = Inequality(a, ah + 100.001)
    bad = replace(demo_instance, random=demo_instance.random + (far_row,))
    assert "distance <= theta" in conditions(validate_instance(bad))


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("alpha", [2.0, 200.0])
@pytest.mark.parametrize("frac", [2.0, 4.0])
def test_support_solution_oracle_agrees(n, alpha, frac):
    assert verify_support_solution(n, alpha, alpha / frac)


def test_support_solution_oracle_dimension_limit():
    with pytest.raises(UnsupportedDimensionError):
        verify_support_solution(4, 200.0, 100.0)
    with pytest.raises(ValueError):
        verify_support_solution(0, 200.0, 100.0)


def test_support_solution_matches_hand_enumeration_n2():
    # the 2-D bounding polygon has exactly these five corners
    corners = [
        np.array([0.0, 0.0]),
        np.array([200.0, 0.0]),
        np.array([200.0, 100.0]),
        np.array([100.0, 200.0]),
        np.array([0.0, 200.0]),
    ]
    support = build_support(2, 200.0)
    A = np.stack([q.a for q in support])
    b = np.array([q.b for q in support])
    for v in corners:
        assert np.all(A @ v <= b + 1e-9)
    c = build_objective(2, 100.0)
    scores = [objective_value(c, v) for v in corners]
    best = int(np.argmax(scores))
    assert np.array_equal(corners[best], support_only_solution(2, 200.0))
    assert scores[best] == 50000.0


def test_reports_are_cumulative(demo_instance):
    # several independent defects must all be reported in one pass
    zero = Inequality(np.zeros(2), 5.0)
    dup = demo_instance.random[1]
    bad = replace(demo_instance, random=demo_instance.random + (zero, dup))
    report = validate_instance(bad)
    conds = conditions(report)
    assert "nonzero coefficient norm" in conds
    assert any(c.startswith("alike with") for c in conds)
    assert len(report.violations) >= 2
