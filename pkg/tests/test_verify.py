import json
from collections import Counter

import pytest

from seidelkit import verify


def test_every_suite_passes_at_small_order():
    results = verify.run_suites("all", max_order=4)
    assert [r.suite for r in results] == list(verify.SUITES)
    for r in results:
        assert r.ok
        assert not r.violations
        assert r.checks > 0
        assert r.lines


def test_finding_counts_at_order_six():
    results = verify.run_suites("all", max_order=6, jobs=2)
    assert all(r.ok for r in results)
    counts = Counter(f.claim_id for r in results for f in r.findings)
    assert counts == {
        "iss-family-delta-closure": 69,
        "core-partition": 94,
        "edge-iss-conditions-necessity": 9,
    }


def test_necessity_findings_sit_at_order_six():
    r = verify.run_suite("edge-iss", max_order=6)
    necessity = [f for f in r.findings if f.claim_id == "edge-iss-conditions-necessity"]
    assert len(necessity) == 9
    from seidelkit import from_graph6

    for f in necessity:
        assert from_graph6(f.graph6).n == 6
    assert any(f.graph6 == "EEzO" for f in necessity)
    # nothing smaller trips it
    r5 = verify.run_suite("edge-iss", max_order=5)
    assert not [
        f for f in r5.findings if f.claim_id == "edge-iss-conditions-necessity"
    ]


def test_runs_are_deterministic():
    a = verify.run_suite("invariants", max_order=5, jobs=1)
    b = verify.run_suite("invariants", max_order=5, jobs=1)
    c = verify.run_suite("invariants", max_order=5, jobs=3)
    assert a.lines == b.lines == c.lines
    assert a.checks == b.checks == c.checks
    x = verify.run_suite("iss", max_order=6, jobs=1)
    y = verify.run_suite("iss", max_order=6, jobs=4)
    assert [f.to_json() for f in x.findings] == [f.to_json() for f in y.findings]


def test_finding_json_uses_hyphenated_keys():
    f = verify.Finding("some-claim", "Bw", (1, 2), "details here")
    row = json.loads(f.to_json())
    assert list(row.keys()) == ["claim-id", "graph6", "witness-masks", "detail"]
    assert row["witness-masks"] == [1, 2]


def test_findings_are_sorted():
    r = verify.run_suite("iss", max_order=5)
    keys = [f.sort_key() for f in r.findings]
    assert keys == sorted(keys)


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        verify.run_suite("nonesuch", max_order=4)
    with pytest.raises(ValueError):
        verify.run_suites("nonesuch", max_order=4)


def test_single_suite_selection():
    results = verify.run_suites("classes", max_order=5)
    assert len(results) == 1
    assert results[0].suite == "classes"
