"""Numerical audits: grids, extrema, identity residuals, lemma windows."""

import math

import mpmath
import numpy as np
import pytest

from edgebounds import (
    DomainError,
    b_constant,
    dirichlet_instance,
    enumerate_characters,
    explicit_formula_window,
    extremum_h,
    extremum_logratio,
    identity_residual_techlem1,
    reB_window,
    run_audit,
    verify_p2_positivity,
)
from edgebounds.audits import AUDIT_IDS, AuditRecord, Interval


def test_audit_id_registry():
    assert AUDIT_IDS == (
        "trig", "p2", "hmax", "logratio", "techlem1", "techlem2",
        "chandee", "bconst", "lemma24", "lemma26", "aterms", "window",
    )
    with pytest.raises(DomainError):
        run_audit("nonesuch")


def test_interval_basics():
    iv = Interval(1.0, 2.0)
    assert iv.width() == 1.0
    assert iv.contains(1.5) and not iv.contains(2.5)
    with pytest.raises(DomainError):
        Interval(2.0, 1.0)


def test_audit_record_verdict_validation():
    with pytest.raises(DomainError):
        AuditRecord(
            id="x", params={}, lhs=0.0, rhs=0.0, window=0.0,
            residual=0.0, verdict="MAYBE",
        )


def test_trig_grid_exact_zero_margin():
    (rec,) = run_audit("trig")
    assert rec.verdict == "PASS"
    assert rec.lhs == 0.0 and rec.residual == 0.0
    assert rec.params["worst_k"] == 1
    assert rec.params["min_slack_k_ge_2"] == 1.0


def test_p2_grid_zero_margin_at_full_weight():
    recs = run_audit("p2")
    assert [r.params["x"] for r in recs] == [100.5, 132.25, 1009.3]
    for rec in recs:
        assert rec.verdict == "PASS"
        assert rec.lhs == 0.0
        assert rec.params["argmin_r"] == 1.0 and rec.params["argmin_theta"] == 0.0
    assert [r.params["k_cut"] for r in recs] == [6, 7, 9]


def test_p2_domain_rejections():
    with pytest.raises(DomainError):
        verify_p2_positivity(99.0)
    with pytest.raises(DomainError):
        verify_p2_positivity(1024.0)  # integral prime power not allowed


def test_h_extremum_frozen_report():
    (rec,) = run_audit("hmax")
    assert rec.verdict == "REPORT"
    assert rec.lhs == pytest.approx(0.2143593539448983, rel=1e-12)
    # analytic maximum 4(2-sqrt(3))/5 at t^2 = (5 sqrt(3) - 3)/2, sigma = 0
    assert rec.lhs == pytest.approx(4.0 * (2.0 - math.sqrt(3.0)) / 5.0, rel=1e-10)
    assert rec.params["sigma_star"] <= 1e-9
    assert rec.params["t_star"] ** 2 == pytest.approx(
        (5.0 * math.sqrt(3.0) - 3.0) / 2.0, rel=1e-7
    )
    assert rec.params["grid_max"] == pytest.approx(0.2143584375270094, rel=1e-9)
    assert rec.params["boundary_abs_max"] < 1e-5
    assert rec.lhs <= 0.2143594 + 1e-9


def test_logratio_extremum_frozen():
    (rec,) = run_audit("logratio")
    assert rec.verdict == "PASS"
    assert rec.lhs == pytest.approx(math.log(2.0 / 3.0), abs=1e-9)
    assert abs(rec.params["sigma_star"]) + abs(rec.params["t_star"]) <= 1e-6


def test_identity_residual_frozen_points():
    (rec,) = run_audit("techlem1")
    assert rec.verdict == "REPORT"
    assert rec.lhs == pytest.approx(0.08381590701201852, rel=1e-10)
    pts = {complex(p["kappa"]): p for p in rec.params["points"]}
    assert pts[0j]["residual"] == pytest.approx(7.0 / 6.0 - math.log(3.0), abs=1e-4)
    assert pts[0j]["residual"] == pytest.approx(0.06805437799855707, rel=1e-10)
    assert pts[1 + 0j]["residual"] == pytest.approx(0.07213177477483113, rel=1e-10)
    assert pts[50j]["residual"] == pytest.approx(0.0008950819224291529, rel=1e-9)


def test_techlem2_grid_frozen():
    (rec,) = run_audit("techlem2")
    assert rec.verdict == "PASS"
    assert rec.lhs == pytest.approx(0.48609046130040606, rel=1e-11)
    assert rec.lhs <= 1.0 + 1e-12
    assert rec.params["worst_x"] == pytest.approx(1.01)
    assert rec.params["worst_kappa_re"] == 0.0


def test_chandee_grid_frozen():
    (rec,) = run_audit("chandee")
    assert rec.verdict == "PASS"
    assert rec.lhs == pytest.approx(1.6666583339652874e-05, rel=1e-10)
    assert rec.params["argmin_re"] == 0.25 and rec.params["argmin_im"] == -50.0


def test_b_constant_audit():
    (rec,) = run_audit("bconst")
    assert rec.verdict == "PASS"
    want = 0.5 * math.log(4.0 * math.pi) - 1.0 - 0.5 * float(mpmath.euler)
    assert b_constant() == pytest.approx(want, rel=1e-14)
    assert rec.lhs == pytest.approx(-0.023095708966121065, rel=1e-13)
    assert rec.params["negative"] is True
    assert rec.params["two_abs_B"] == pytest.approx(0.04619141793224213, rel=1e-13)


def test_lemma24_verdict_pattern(table6):
    recs = run_audit("lemma24", tbl=table6)
    key = [(r.params["x"], r.params["variant"], r.verdict) for r in recs]
    assert key == [
        (100.0, "two_pi", "FAIL"),
        (100.0, "log_two_pi", "PASS"),
        (1000.0, "two_pi", "FAIL"),
        (1000.0, "log_two_pi", "PASS"),
        (10000.0, "two_pi", "PASS"),
        (10000.0, "log_two_pi", "PASS"),
        (1000000.0, "two_pi", "PASS"),
        (1000000.0, "log_two_pi", "PASS"),
    ]
    first = recs[0]
    assert first.lhs == pytest.approx(3.0451713875819264, rel=1e-13)
    assert first.residual == pytest.approx(-0.045614819904761905, rel=1e-12)
    assert first.window == pytest.approx(0.004619141793224213, rel=1e-13)


def test_lemma26_verdict_pattern(table6):
    recs = run_audit("lemma26", tbl=table6)
    key = [(r.params["x"], r.params["variant"], r.verdict) for r in recs]
    assert key == [
        (10000.0, "minus_gamma", "FAIL"),
        (10000.0, "plus_gamma", "PASS"),
        (1000000.0, "minus_gamma", "FAIL"),
        (1000000.0, "plus_gamma", "PASS"),
    ]
    plus4 = recs[1]
    assert plus4.residual == pytest.approx(-2.4170891532726557e-07, rel=1e-9)
    assert plus4.window == pytest.approx(5.445151081162462e-06, rel=1e-12)
    # the failing sign variant misses by about 2 log gamma-ish units, not noise
    assert recs[0].residual == pytest.approx(1.1544310880941502, rel=1e-12)


def test_a_terms_frozen_examples():
    upper, lower = run_audit("aterms")
    assert upper.verdict == "PASS" and lower.verdict == "PASS"
    assert upper.params["side"] == "upper" and upper.params["x"] == 132.25
    assert upper.lhs == pytest.approx(-0.005926066815544042, rel=1e-12)
    assert upper.rhs == 0.0128
    assert lower.params["side"] == "lower" and lower.params["d"] == 2
    assert lower.lhs == pytest.approx(-2.677099582436458e-05, rel=1e-11)
    assert lower.rhs == pytest.approx(-0.00041832466074890316, rel=1e-12)
    assert lower.lhs >= lower.rhs


def test_a_terms_validation():
    from edgebounds import a_terms_audit

    with pytest.raises(DomainError):
        a_terms_audit("sideways", 1, 1, (), 1e4)
    with pytest.raises(DomainError):
        a_terms_audit("upper", 1, 2, (), 1e4)
    with pytest.raises(DomainError):
        a_terms_audit("upper", 2, 0, (0.5,), 1e4)  # needs d - l entries
    with pytest.raises(DomainError):
        a_terms_audit("upper", 2, 0, (0.0, 1.0), 1e4)  # zero parameter listed
    with pytest.raises(DomainError):
        a_terms_audit("upper", 1, 1, (), 100.0)  # below the x floor


def test_window_records_frozen_small_moduli(table6):
    recs = run_audit("window", tbl=table6, q_max=8, x=1e5)
    assert len(recs) == 12
    assert all(r.verdict == "PASS" for r in recs)
    by_key = {(r.params["q"], r.params["char_index"]): r for r in recs}
    r3 = by_key[(3, 1)]
    assert r3.lhs == pytest.approx(-0.5031885471527644, rel=1e-13)
    assert r3.params["lo"] == pytest.approx(-0.5032292607898121, rel=1e-12)
    assert r3.params["hi"] == pytest.approx(-0.503161271393275, rel=1e-12)
    r4 = by_key[(4, 1)]
    assert r4.lhs == pytest.approx(-0.2415644752704905, rel=1e-13)
    assert r4.window == pytest.approx(4.6490710794613865e-05, rel=1e-11)
    r8 = by_key[(8, 3)]
    assert r8.params["lo"] <= 0.10500911500948218 <= r8.params["hi"]


def test_window_truth_is_log_abs_l1(table6):
    chars = {c.index: c for c in enumerate_characters(4)}
    inst = dirichlet_instance(chars[1])
    iv = explicit_formula_window(inst, table6, 1e5)
    assert iv.lo == pytest.approx(-0.24159498944669316, rel=1e-12)
    assert iv.hi == pytest.approx(-0.24150200802510394, rel=1e-12)
    assert iv.contains(math.log(math.pi / 4.0))


def test_reB_window_width_shrinks(table6):
    chars = {c.index: c for c in enumerate_characters(8)}
    inst = dirichlet_instance(chars[1])
    widths = []
    for x in (1e3, 1e4, 1e5, 1e6):
        iv = reB_window(inst, table6, x)
        widths.append(iv.width())
    assert widths == pytest.approx(
        [0.015319580998237575, 0.00468132964163577, 0.0014847386122077422,
         0.0004708426207254146],
        rel=1e-10,
    )
    assert all(a > b for a, b in zip(widths, widths[1:]))


def test_window_requires_x_floor(table6):
    chars = {c.index: c for c in enumerate_characters(4)}
    inst = dirichlet_instance(chars[1])
    with pytest.raises(DomainError):
        explicit_formula_window(inst, table6, 100.0)


def test_extremum_h_deterministic():
    a = extremum_h()
    b = extremum_h()
    assert a.lhs == b.lhs and a.params["t_star"] == b.params["t_star"]


def test_logratio_extremum_callable_directly():
    rec = extremum_logratio()
    assert rec.verdict == "PASS"
    assert rec.params["argmin_at_origin"] is True
