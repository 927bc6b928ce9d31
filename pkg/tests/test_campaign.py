import json

from pathdepth.campaign import (
    ClaimCheck,
    colon_trial_outcome,
    colon_trials,
    disjoint_trials,
    power_depth,
    run_campaign,
)
from pathdepth.graphs import path_power_ideal
from pathdepth.ring import contains


def test_small_campaign_passes():
    report = run_campaign(range(3, 9), t_max=3, seed=1, colon_trials=20, disjoint_trials=10,
                          lemma23_limit=1000)
    assert report.ok(), report.format_table()
    ids = {c.id for c in report.checks}
    assert {"thm2.4", "cor2.5", "prop2.6", "thm2.7", "prop2.8.1", "prop2.8.2", "prop2.8.3",
            "lemma2.3", "identity:colon-i", "lemma2.1.i", "lemma2.2", "chars", "oracle"} <= ids


def test_report_is_deterministic_and_sorted():
    kw = dict(claims=("thm2.4", "lemma2.1"), colon_trials=15)
    a = run_campaign(range(3, 8), seed=3, **kw).to_json()
    b = run_campaign(range(3, 8), seed=3, **kw).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    keys = [(c["id"], sorted(c["params"].items())) for c in a["checks"]]
    assert keys == sorted(keys)
    assert set(a) == {"config", "checks", "summary"}
    assert set(a["checks"][0]) == {"id", "params", "expected", "computed", "pass"}


def test_errors_are_recorded_not_raised():
    report = run_campaign(range(4, 7), claims=("thm2.4",), max_subsets=8)
    assert len(report.checks) == 3 and report.n_fail == 3
    assert all(str(c.computed).startswith("error:") for c in report.checks)


def test_claim_check_pass_flag():
    assert ClaimCheck("x", {}, 3, 3).passed
    assert not ClaimCheck("x", {}, 3, 4).passed


def test_power_depth_routes():
    I = path_power_ideal(4)
    assert power_depth(I, 2) == (1, "polarization")
    assert power_depth(I, 4) == (0, "socle")
    assert power_depth(path_power_ideal(3), 4) == (2, "polarization")


def test_colon_trials_keep_f_outside_ideal():
    for tr in colon_trials(seed=5, count=30):
        assert not contains(tr.ideal, tr.f)
        assert tr.ideal.num_vars <= 8
        member, conditional = colon_trial_outcome(tr)
        assert member and conditional in (True, None)


def test_disjoint_trials_fit_eight_variables():
    for tr in disjoint_trials(seed=5, count=30):
        assert tr.joint.num_vars == tr.left.num_vars + tr.right.num_vars <= 8
