import json

from nichols_abe.closed_forms import cf_E
from nichols_abe.verify import ClosedFormReport, verify_all


def names(reports):
    return [r.name for r in reports]


def test_small_range_passes():
    reports = verify_all(n_max=4, degree_cap=6)
    assert reports and all(r.ok for r in reports)


def test_small_range_is_a_subset():
    small = set(names(verify_all(n_max=4, degree_cap=6)))
    large = set(names(verify_all(n_max=6, degree_cap=8)))
    assert small < large


def test_deterministic():
    first = [r.to_json() for r in verify_all(n_max=5, degree_cap=7)]
    second = [r.to_json() for r in verify_all(n_max=5, degree_cap=7)]
    assert json.dumps(first) == json.dumps(second)


def test_fault_injection_gives_exactly_one_failure():
    key = (2, 6, 5)
    reports = verify_all(n_max=6, degree_cap=8, perturb={key: cf_E(*key) + 1})
    failed = [r for r in reports if not r.ok]
    assert len(failed) == 1
    bad = failed[0].counterexample
    assert bad["input"] == {"k": 2, "s": 6, "n": 5}
    assert bad["closed_form"] == "3" and bad["computed"] == "2"


def test_report_json_shape():
    r = ClosedFormReport("x", "n<=1", "fail", {"input": {}, "closed_form": "1", "computed": "2"})
    assert r.to_json()["counterexample"]["computed"] == "2"
    assert "counterexample" not in ClosedFormReport("y", "n<=1").to_json()


def test_defaults_all_pass():
    failed = [r.to_json() for r in verify_all() if not r.ok]
    assert failed == []
