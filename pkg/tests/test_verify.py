"""The verification layer: verdicts, witnesses, reports, and the suite runner."""

import json

import pytest

from detfsing import Budget, UsageError
from detfsing.verify import (
    VerificationReport,
    default_grid,
    run_suite,
    validate_request,
    verify_compat,
    verify_dimension,
    verify_extension_decomposition,
    verify_f_regular,
    verify_fedder_purity,
    verify_gamma_decomposition,
    verify_local_membership,
    verify_pure_f_regularity,
    verify_reduction_identities,
    verify_row_decomposition,
    verify_split_and_compat,
    verify_sylvester,
    worst_verdict,
)


@pytest.mark.parametrize("m,n,t,dim", [(2, 2, 2, 3), (2, 3, 2, 4), (3, 3, 2, 5)])
def test_dimension_examples(m, n, t, dim):
    r = verify_dimension(m, n, t)
    assert r.verdict == "pass"
    assert r.witness["dim"] == dim


@pytest.mark.parametrize("m,n,t,p", [(2, 2, 2, 2), (2, 3, 2, 3), (3, 3, 2, 2)])
def test_split_examples(m, n, t, p):
    r = verify_split_and_compat(m, n, t, p)
    assert r.verdict == "pass"
    assert r.witness["split"] and r.witness["compatible_divisor"]


def test_compat_check():
    assert verify_compat(2, 2, 2, 2).verdict == "pass"


def test_rowdec_levels():
    r = verify_row_decomposition(3, 3, 2)
    assert r.verdict == "pass" and r.witness["level"] == "exact"
    r = verify_row_decomposition(4, 4, 3)
    assert r.verdict == "pass"
    assert r.witness["level"] in ("exact", "radical")


def test_rowdec_rejects_small():
    with pytest.raises(UsageError):
        verify_row_decomposition(2, 3, 2)


def test_gammadec_examples():
    for (r_, n) in ((2, 3), (2, 4), (3, 4)):
        assert verify_gamma_decomposition(r_, n).verdict == "pass"


def test_local_membership_examples():
    r = verify_local_membership(2, 3, 2, 2)
    assert r.verdict == "pass"
    assert all("multiplier" in e or "colon_generator" in e
               for e in r.witness["per_gamma"])


def test_sylvester_examples():
    assert verify_sylvester(2, 3, 2, 0).verdict == "pass"
    assert verify_sylvester(2, 3, 2, 1).verdict == "pass"
    r = verify_sylvester(3, 4, 3, 1)
    assert r.verdict == "pass" and r.witness["sign"] in (1, -1)


def test_extension_examples():
    assert verify_extension_decomposition(2, 2, 2).verdict == "pass"


def test_fedder_example():
    r = verify_fedder_purity(2, 2, 2, 2)
    assert r.verdict == "pass"
    assert r.witness["f_pure_presentation"] and r.witness["f_pure_divisor"]
    assert r.witness["f_regular_presentation"]["status"] == "confirmed"


def test_freg_check():
    r = verify_f_regular(2, 2, 2, 2)
    assert r.verdict == "pass"


def test_pure_freg_example():
    r = verify_pure_f_regularity(2, 2, 2, 2, e_max=2)
    assert r.verdict == "pass"
    assert set(r.witness["pool"]) >= {"1", "x[2,1]", "x[2,2]"}
    assert all(e is not None and e <= 2 for e in r.witness["confirmed"].values())


@pytest.mark.parametrize("m,t,s,block", [(2, 2, 1, "w"), (2, 2, 2, "z"),
                                         (3, 2, 2, "xprime")])
def test_reduction_examples(m, t, s, block):
    r = verify_reduction_identities(m, t, s, block)
    assert r.verdict == "pass"
    assert r.witness["presentation_identity"] and r.witness["divisor_identity"]


def test_budget_exhaustion_is_inconclusive():
    r = verify_fedder_purity(3, 3, 2, 3, budget=Budget(max_steps=50, max_seconds=60))
    assert r.verdict == "inconclusive"
    assert "budget_exhausted" in r.witness
    assert r.witness["counters"]["reductions"] >= 50


def test_report_json_roundtrip():
    r = verify_dimension(2, 2, 2)
    line = r.to_json()
    back = VerificationReport.from_json(line)
    assert back.as_obj() == r.as_obj()
    assert json.loads(line)["verdict"] == "pass"


def test_report_text_block():
    r = verify_dimension(2, 2, 2)
    block = r.text_block()
    assert "[PASS] dim" in block and "stats:" in block


def test_worst_verdict():
    mk = lambda v: VerificationReport("dim", {}, v, {})
    assert worst_verdict([mk("pass"), mk("pass")]) == "pass"
    assert worst_verdict([mk("pass"), mk("inconclusive")]) == "inconclusive"
    assert worst_verdict([mk("inconclusive"), mk("fail")]) == "fail"
    assert worst_verdict([]) == "pass"


def test_run_suite_empty():
    assert run_suite([]) == []


def test_run_suite_order_and_workers():
    grid = [
        {"check": "dim", "m": 2, "n": 2, "t": 2},
        {"check": "sylvester", "m": 2, "n": 3, "t": 2, "k": 0},
        {"check": "dim", "m": 2, "n": 3, "t": 2},
    ]
    seq = run_suite(grid)
    par = run_suite(grid, workers=3)
    assert [r.check_id for r in seq] == ["dim", "sylvester", "dim"]
    assert [r.as_obj()["params"] for r in par] == [r.as_obj()["params"] for r in seq]
    assert [r.verdict for r in par] == ["pass", "pass", "pass"]


def test_run_suite_malformed_aborts_before_running():
    grid = [
        {"check": "dim", "m": 2, "n": 2, "t": 2},
        {"check": "nope"},
    ]
    with pytest.raises(UsageError):
        run_suite(grid)
    with pytest.raises(UsageError):
        run_suite([{"check": "dim", "m": 2, "n": 2}])  # missing t
    with pytest.raises(UsageError):
        run_suite([{"check": "dim", "m": 2, "n": 2, "t": 2, "bogus": 1}])
    with pytest.raises(UsageError):
        run_suite([{"check": "split", "m": 2, "n": 2, "t": 2, "p": 4}])


def test_validate_request_entry():
    with pytest.raises(UsageError):
        validate_request({"check": "reduction", "m": 2, "t": 2, "s": 1,
                          "block": "w", "entry": [0, 1]})


def test_fail_verdict_carries_recheckable_witness(monkeypatch):
    # force a wrong expected dimension; the report must turn into a fail whose
    # witness still shows the honestly computed value
    from detfsing import determinantal

    real = determinantal.DeterminantalSpec.dimension_formula
    monkeypatch.setattr(determinantal.DeterminantalSpec, "dimension_formula",
                        lambda self: real(self) + 1)
    r = verify_dimension(2, 2, 2)
    assert r.verdict == "fail"
    assert r.witness["dim"] == 3 and r.witness["dim_formula"] == 4


def test_split_pass_implies_divisor_f_purity():
    # a splitting compatible with the divisor preimage is itself an escape
    # witness for the purity colon, so the two checks can never disagree
    for (m, n, t, p) in ((2, 2, 2, 2), (2, 3, 2, 3), (3, 3, 3, 2)):
        s = verify_split_and_compat(m, n, t, p)
        f = verify_fedder_purity(m, n, t, p)
        if s.verdict == "pass":
            assert f.witness["f_pure_divisor"] and f.witness["f_pure_presentation"]


def test_default_grid_is_well_formed():
    grid = default_grid()
    assert len(grid) > 50
    for req in grid:
        validate_request(req)
    dims = [g for g in grid if g["check"] == "dim"]
    assert len(dims) == 30  # every m, n <= 4 with t <= min(m, n)
