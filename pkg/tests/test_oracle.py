import json

import numpy as np
import pytest

from altperm import GroupParams, enumerate_group, identity, multiply, rank
from altperm.canonical import A0, generator_a
from altperm.core import power
from altperm.errors import CapExceeded, InvalidParams, UnknownSuite
from altperm.oracle import (
    FAIL,
    SKIPPED,
    VerificationReport,
    _all_elements,
    batch_rank,
    batch_right_multiply,
    bfs_lengths,
    check_covering,
    check_decomposition,
    check_fiber_fixed,
    check_genfun,
    check_group_order,
    check_length_oracle,
    check_presentation,
    generating_set,
    run_suite,
)


def test_batch_arithmetic_matches_scalar():
    p = GroupParams(6, 3)
    digits, colors = _all_elements(p)
    elements = list(enumerate_group(p))
    assert np.array_equal(batch_rank(digits, colors, 6), np.arange(p.order))
    for _, g in generating_set(p, "full") + generating_set(p, "alternating"):
        d, c = batch_right_multiply(digits, colors, g)
        ranks = batch_rank(d, c, 6)
        assert all(ranks[k] == rank(multiply(x, g)) for k, x in enumerate(elements))


def test_generating_sets():
    assert [name for name, _ in generating_set(GroupParams(6, 3), "alternating")] == ["a0", "a1", "a1'", "a2"]
    assert [name for name, _ in generating_set(GroupParams(2, 3), "alternating")] == ["a1", "a1'", "a2"]
    assert [name for name, _ in generating_set(GroupParams(6, 1), "alternating")] == ["a0"]
    with pytest.raises(InvalidParams):
        generating_set(GroupParams(4, 2), "alternating")


def test_bfs_distances():
    p1 = GroupParams(6, 1)
    table = bfs_lengths(p1)
    assert table.distance(identity(p1)) == 0
    assert table.distance(generator_a(p1, A0)) == 1
    assert table.distance(power(generator_a(p1, A0), 2)) == 2
    assert len(table) == 3


def test_bfs_worked_example(worked):
    assert bfs_lengths(worked.params).distance(worked) == 17


@pytest.mark.parametrize("params", [GroupParams(6, 2), GroupParams(6, 3), GroupParams(10, 2)], ids=str)
def test_full_bfs_is_total(params):
    table = bfs_lengths(params, "full")
    assert len(table) == params.order
    assert np.flatnonzero(table.array == 0).tolist() == [0]


def test_bfs_reaches_exactly_the_alternating_group():
    p = GroupParams(6, 3)
    table = bfs_lengths(p)
    assert len(table) == 648
    with pytest.raises(KeyError):
        table[rank(generator_a(p, A0)) + 1]


def test_cap_refuses():
    with pytest.raises(CapExceeded):
        bfs_lengths(GroupParams(6, 5), cap=1000)
    with pytest.raises(CapExceeded):
        check_group_order(GroupParams(6, 4), cap=100)


def test_presentation_report():
    report = check_presentation(GroupParams(6, 3))
    assert report.passed
    skipped = [c.check_id for c in report.checks if c.status == SKIPPED]
    assert skipped == ["A9 a1 ai=ai a1' (i>2)", "G4 si sj=sj si (j-i>1)"]
    report4 = check_presentation(GroupParams(10, 4))
    assert report4.passed
    assert not any(c.status == SKIPPED for c in report4.checks)


@pytest.mark.parametrize("params", [GroupParams(6, 2), GroupParams(6, 3), GroupParams(10, 2)], ids=str)
def test_order_suite(params):
    report = check_group_order(params)
    assert report.passed
    assert f"{params.alternating_order} vs" in report.checks[0].detail


def test_decomposition_suite():
    report = check_decomposition(GroupParams(6, 3))
    assert report.passed
    assert report.checks[-1].detail == "648 vs 648"


def test_covering_suite():
    report = check_covering(GroupParams(6, 3))
    assert report.passed
    partition = next(c for c in report.checks if c.check_id == "fibers partition A(r, n)")
    assert partition.detail == "162 cosets"
    closure = next(c for c in report.checks if "normal closure" in c.check_id)
    assert closure.status == "pass"


def test_degenerate_case_is_flagged():
    report = run_suite(GroupParams(2, 3), ["all"])
    assert report.passed
    assert any("degenerate r=2" in note for note in report.notes)


def test_other_suites():
    assert check_genfun(GroupParams(10, 2)).passed
    assert check_fiber_fixed(GroupParams(10, 2)).passed
    assert check_length_oracle(GroupParams(10, 3)).passed


def test_run_suite_selection():
    empty = run_suite(GroupParams(6, 2), [])
    assert empty.passed and empty.checks == []
    report = run_suite(GroupParams(6, 2), ["all"])
    assert report.passed
    assert {c.check_id.split(":")[0] for c in report.checks} == {
        "presentation", "order", "decomposition", "covering", "genfun"}
    with pytest.raises(UnknownSuite):
        run_suite(GroupParams(6, 2), ["presentation", "nope"])
    with pytest.raises(InvalidParams):
        run_suite(GroupParams(4, 2), ["order"])


def test_reports_are_deterministic_and_serializable():
    a = run_suite(GroupParams(6, 2), ["all"]).to_dict()
    b = run_suite(GroupParams(6, 2), ["all"]).to_dict()
    a.pop("elapsed"), b.pop("elapsed")
    assert a == b
    assert json.loads(json.dumps(a)) == a


def test_failure_rendering():
    report = VerificationReport("demo", GroupParams(6, 2))
    report.add("something holds", False, "1^2 2", "failed after 3 cases")
    report.skip("other", "not applicable")
    assert not report.passed
    assert report.failures()[0].status == FAIL
    text = report.render()
    assert "FAIL" in text and "[counterexample: 1^2 2]" in text and "SKIPPED" in text
