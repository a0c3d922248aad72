"""Tests for the verification suite: every check passes on the frozen
reference values, a corrupted value is caught and named, and the runner's
selection, profiles, and report shapes behave as documented."""

import pytest

from betaforge import PeriodicWord, verify
from betaforge import fixtures
from betaforge.verify import (
    CHECK_IDS,
    CheckResult,
    PROFILES,
    check_branch_families,
    check_counts_family,
    check_exceptional_rows,
    check_no_triple,
    check_orbit_identities,
    check_table,
    check_tail_bounds,
    check_two_point,
    family_word,
    render_records,
    render_text,
    run_all,
)


@pytest.fixture(scope="module")
def quick_results():
    return run_all("quick")


def test_quick_profile_all_pass(quick_results):
    assert [r.check_id for r in quick_results] == sorted(CHECK_IDS)
    failed = [r for r in quick_results if not r.passed]
    assert not failed, render_text(failed)


def test_run_all_is_deterministic(quick_results):
    again = run_all("quick")
    key = lambda rs: [(r.check_id, r.status, r.witness) for r in rs]
    assert key(again) == key(quick_results)


def test_fault_injection_names_the_row(monkeypatch):
    mutated = tuple(
        (word, ("1.277400",) + cells[1:] if word == "00(01)*" else cells)
        for word, cells in fixtures.TABLE_T1
    )
    assert mutated != fixtures.TABLE_T1
    monkeypatch.setattr(fixtures, "TABLE_T1", mutated)
    results = run_all("quick", check_ids=["T1", "T2"])
    by_id = {r.check_id: r for r in results}
    assert not by_id["T1"].passed
    assert by_id["T2"].passed
    witness = by_id["T1"].witness
    assert "T1" in witness and "row 00(01)*" in witness and "column" in witness
    assert sum(not r.passed for r in results) == 1


def test_unknown_table_rejected():
    with pytest.raises(ValueError, match="unknown table"):
        check_table("T9")


def test_unknown_profile_rejected():
    with pytest.raises(ValueError, match="profile"):
        run_all("exhaustive")


def test_unknown_check_ids_rejected():
    with pytest.raises(ValueError, match="nope"):
        run_all("quick", check_ids=["constants", "nope"])


def test_check_id_filter_runs_only_selected():
    results = run_all("quick", check_ids=["constants"])
    assert [r.check_id for r in results] == ["constants"]
    assert results[0].passed


def test_profiles_table():
    assert PROFILES["quick"] == (8, 8)
    assert PROFILES["full"] == (50, 50)


def test_checks_pass_at_small_bounds():
    assert check_counts_family(3).passed
    assert check_branch_families(3, 2).passed
    assert check_orbit_identities(4).passed


def test_single_checks_pass():
    assert check_two_point().passed
    assert check_no_triple().passed
    assert check_tail_bounds().passed
    assert check_exceptional_rows().passed


@pytest.mark.parametrize(
    "call",
    [
        lambda: check_counts_family(0),
        lambda: check_branch_families(1, 1),
        lambda: check_branch_families(2, 0),
        lambda: check_orbit_identities(2),
    ],
)
def test_bound_validation(call):
    with pytest.raises(ValueError):
        call()


def test_family_word_shapes():
    assert family_word("e1", 1) == PeriodicWord((0, 0, 1), (1, 0))
    assert str(family_word("e1", 3)) == "00001(10)*"
    assert str(family_word("e3", 2)) == "000111(10)*"
    assert str(family_word("e1-alt", 1, 2)) == "0010101(10)*"
    assert str(family_word("e3-alt", 2, 1)) == "00100111(10)*"


def test_family_word_validation():
    with pytest.raises(ValueError, match="unknown family"):
        family_word("e2", 1)
    with pytest.raises(ValueError, match="k >="):
        family_word("e3", 1)
    with pytest.raises(ValueError, match="j >="):
        family_word("e3-alt", 2)
    with pytest.raises(ValueError, match="no j"):
        family_word("e1", 1, 1)


def test_check_result_record_keys():
    r = CheckResult("demo", "pass", "all good", 0.0123)
    rec = r.record()
    assert rec == {
        "id": "demo",
        "status": "pass",
        "witness": "all good",
        "elapsed_ms": 12.3,
    }
    assert r.passed


def test_render_records_structure(quick_results):
    doc = render_records(quick_results, profile="quick")
    assert doc["profile"] == "quick"
    assert doc["passed"] == len(CHECK_IDS)
    assert doc["failed"] == 0 and doc["skipped"] == 0
    assert [rec["id"] for rec in doc["results"]] == sorted(CHECK_IDS)
    assert all(rec["status"] == "pass" for rec in doc["results"])


def test_render_records_without_profile(quick_results):
    doc = render_records(quick_results)
    assert "profile" not in doc


def test_render_text_summary_line(quick_results):
    text = render_text(quick_results)
    lines = text.splitlines()
    assert len(lines) == len(CHECK_IDS) + 1
    assert lines[-1] == f"{len(CHECK_IDS)} passed, 0 failed, 0 skipped"
    assert all(line.startswith("PASS") for line in lines[:-1])


def test_module_re_export():
    assert verify.run_all is run_all
