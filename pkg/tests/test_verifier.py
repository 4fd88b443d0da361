import json

from eccmat.verify import (
    CHECKS,
    VerificationReport,
    resolve_check,
    run_check,
    verify_classification,
    verify_cone,
    verify_diam2_identity,
    verify_diam3,
    verify_diametral_pairs,
    verify_prop_s2,
    verify_prop_s3,
    verify_remark_families,
    verify_self_centered,
    verify_windmill,
)


def strip_elapsed(report):
    d = report.to_dict()
    d.pop("elapsed")
    return d


def test_small_sweeps_pass():
    assert verify_self_centered(n_max=5).passed
    assert verify_diametral_pairs(n_max=5).passed
    assert verify_diam3(n_max=5).passed
    assert verify_cone(n_max=5).passed
    assert verify_diam2_identity(n_max=5).passed


def test_grid_checks_pass():
    assert verify_prop_s2(r_max=4).passed
    assert verify_prop_s3(r_max=3).passed
    assert verify_windmill(m_max=3, k_max=3).passed
    assert verify_remark_families(bound=8).passed


def test_classification_report_notes_both_readings():
    r = verify_classification(n_max=5)
    assert r.passed
    notes = "\n".join(r.notes)
    assert "mismatch-theorem: 0" in notes
    assert "mismatch-corollary: 0" in notes


def test_instance_counts_match_census_scopes():
    r = verify_diam2_identity(n_max=5)
    assert r.instances == r.scope["census_size"] == 31  # 1+1+2+6+21
    r = verify_classification(n_max=4)
    assert r.instances == 10


def test_reports_are_deterministic():
    a = strip_elapsed(verify_self_centered(n_max=5))
    b = strip_elapsed(verify_self_centered(n_max=5))
    assert a == b


def test_parallel_matches_sequential():
    seq = strip_elapsed(verify_classification(n_max=5, jobs=1))
    par = strip_elapsed(verify_classification(n_max=5, jobs=2))
    assert seq == par


def test_report_serialization_and_failure_path():
    report = VerificationReport(
        check="demo",
        title="demo",
        scope={"n_max": 3},
        instances=2,
        counterexamples=[{"graph6": "Bw", "detail": "synthetic"}],
    )
    assert not report.passed
    data = json.loads(report.to_json())
    assert data["schema"] == "1"
    assert data["pass"] is False
    text = report.format_text()
    assert "FAIL" in text and "Bw" in text


def test_cone_block_shape_for_pentagon():
    from eccmat.graphs import Graph
    from eccmat.verify import _cone_block_matches

    c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert _cone_block_matches(c5)


def test_registry_and_aliases():
    assert resolve_check("self-centered") == "self-centered"
    assert resolve_check("lemma2.5") == "self-centered"
    assert resolve_check("lemma2.6") == "diam3"
    assert resolve_check("theorem2.7") == "cone"
    assert resolve_check("prop2.8") == "s2-types"
    assert resolve_check("prop2.9") == "s3-types"
    assert resolve_check("remark2.10") == "families"
    assert resolve_check("remark2.12") == "windmill"
    assert resolve_check("theorem2.11") == "classification"
    assert resolve_check("bogus") is None
    assert set(CHECKS) >= {"classification", "windmill", "families"}


def test_run_check_filters_kwargs():
    r = run_check("lemma2.5", n_max=4, jobs=1, r_max=99, bound=None)
    assert r.check == "self-centered"
    assert r.scope["n_max"] == 4
