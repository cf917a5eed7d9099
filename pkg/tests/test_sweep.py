import json

from contractlab import Hypergraph, normalize
from contractlab.sweep import SCHEMA, SweepReport, check_instance, instance_key, run_sweep

REF = normalize(Hypergraph(["q1", "q2", "q3"], [["q2", "q3"], ["q1", "q2"]]))
NOT_COLOURABLE = normalize(Hypergraph(["q1", "q2"], [["q1"]]))


def test_record_for_reference_instance():
    r = check_instance(REF)
    assert r["key"] == "q1,q2,q3|q2,q3;q1,q2;q1,q2,q3"
    assert r["colourable"] and r["colouring"] == {"q1": ["q1", "q3"], "q2": ["q2"]}
    assert r["verdicts"] == {"p5": True, "p6": True, "c6": True}
    assert r["gadget_sizes"]["p5"] == {"vertices": 21, "edges": 50}
    assert r["cyclicity"] >= 6
    assert r["agreement"] and r["cyclicity_agreement"] and r["constructive_ok"]


def test_record_for_non_colourable_instance():
    r = check_instance(NOT_COLOURABLE)
    assert not r["colourable"] and r["colouring"] is None
    assert r["verdicts"] == {"p5": False, "p6": False, "c6": False}
    assert r["cyclicity"] == 5
    assert r["agreement"] and r["cyclicity_agreement"]


def test_budget_exceeded_is_not_a_verdict():
    r = check_instance(NOT_COLOURABLE, budget=0)
    assert set(r["verdicts"].values()) == {None} and r["cyclicity"] is None
    assert not r["agreement"]
    report = SweepReport([r])
    assert report.summary["budget_exceeded"] == 1 and not report.all_agree


def test_sweep_is_sorted_and_complete():
    report = run_sweep(2, 3)
    keys = [r["key"] for r in report.records]
    assert len(keys) == len(set(keys)) == 8 - 1
    assert report.all_agree and report.summary["disagreements"] == []
    data = json.loads(report.dumps())
    assert data["schema"] == SCHEMA and data["parameters"]["max_edges"] == 3


def test_sampling_is_seeded():
    a = run_sweep(3, 2, samples=5, seed=7)
    b = run_sweep(3, 2, samples=5, seed=7)
    assert [r["key"] for r in a.records] == [r["key"] for r in b.records]
    assert len(a.records) == 5


def test_parallel_report_matches_serial():
    serial = run_sweep(3, 1)
    parallel = run_sweep(3, 1, jobs=2)
    assert serial.to_json() == parallel.to_json()


def test_instance_key_distinguishes_order():
    h1 = Hypergraph(["q1", "q2"], [["q1"], ["q1", "q2"]])
    h2 = Hypergraph(["q1", "q2"], [["q2"], ["q1", "q2"]])
    assert instance_key(h1) != instance_key(h2)
