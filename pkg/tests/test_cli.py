"""End-to-end tests of the command-line interface, run in-process.

Exit code contract: 0 success, 1 verification failure, 2 usage error,
3 a resource limit cut the computation short.
"""

import json
from fractions import Fraction

import pytest

from betaforge import (
    define_field,
    eval_word,
    parse_word,
    q2_field,
    qf_field,
    to_decimal,
)
from betaforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# eval


def test_eval_zero(capsys):
    code, out, err = run(capsys, "eval", "(0)*")
    assert code == 0
    assert out == "0 / 0.000000\n"
    assert err == ""


def test_eval_plus_one(capsys):
    code, out, _ = run(capsys, "eval", "--plus-one", "(0)*")
    assert code == 0
    assert out == "1 / 1.000000\n"


def test_eval_digits_flag(capsys):
    code, out, _ = run(capsys, "eval", "--digits", "2", "(0)*")
    assert code == 0
    assert out == "0 / 0.00\n"


def test_eval_json_round_trip(capsys):
    code, out, _ = run(capsys, "eval", "--format", "json", "01(10)*")
    assert code == 0
    payload = json.loads(out)
    assert payload["word"] == "01(10)*"
    assert payload["plus_one"] is False
    assert payload["digits"] == 6

    rec = payload["field"]
    field = define_field(
        tuple(rec["min_poly"]),
        (Fraction(rec["interval"][0]), Fraction(rec["interval"][1])),
    )
    x = field.element(tuple(Fraction(c) for c in payload["coeffs"]))
    expected = eval_word(parse_word("01(10)*"), q2_field())
    assert x.coeffs == expected.coeffs
    assert payload["decimal"] == to_decimal(expected, 6)


# ---------------------------------------------------------------------------
# region


def test_region_text(capsys):
    code, out, _ = run(capsys, "region", "01(10)*")
    assert (code, out) == (0, "switch\n")
    code, out, _ = run(capsys, "region", "--plus-one", "(0)*")
    assert (code, out) == (0, "high\n")


def test_region_json(capsys):
    code, out, _ = run(capsys, "region", "--format", "json", "(0)*")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "word": "(0)*",
        "plus_one": False,
        "decimal": "0.000000",
        "region": "low",
    }


# ---------------------------------------------------------------------------
# orbit


def test_orbit_text_reaches_switch(capsys):
    code, out, _ = run(capsys, "orbit", "--plus-one", "00(01)*")
    assert code == 0
    parts = out.split()
    assert parts[-1] == "[SWITCH]"
    assert parts[1] == "→1" and parts[3] == "→1"
    # decimals are checked against exact values, not a verbatim rendering
    assert abs(float(parts[0]) - 1.1774010) < 2e-6
    assert abs(float(parts[2]) - 1.0141141) < 2e-6
    assert abs(float(parts[4]) - 0.7347883) < 2e-6
    assert len(parts) == 6


def test_orbit_csv(capsys):
    code, out, _ = run(capsys, "orbit", "--plus-one", "--format", "csv", "00(01)*")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "step,digit,decimal,region"
    assert len(lines) == 4
    first = lines[1].split(",")
    assert first[0] == "0" and first[1] == "1" and first[3] == "high"
    last = lines[-1].split(",")
    assert last[0] == "2" and last[1] == "" and last[3] == "switch"


def test_orbit_unique_tail(capsys):
    code, out, _ = run(capsys, "orbit", "(10)*")
    assert code == 0
    assert out.strip().endswith("[TAIL (10)*]")


def test_orbit_json_end_record(capsys):
    code, out, _ = run(capsys, "orbit", "--format", "json", "(10)*")
    assert code == 0
    payload = json.loads(out)
    assert payload["end"] == {"kind": "unique_tail", "tail": "(10)*"}
    assert payload["steps"][0]["step"] == 0
    assert payload["steps"][-1]["digit"] is None


def test_orbit_step_limit_exit_code(capsys):
    code, out, _ = run(capsys, "orbit", "--plus-one", "--max-steps", "2", "00(01)*")
    assert code == 3
    assert out.strip().endswith("[STEP LIMIT]")


def test_orbit_outside_domain_is_usage_error(capsys):
    code, _, err = run(capsys, "orbit", "--plus-one", "(1)*")
    assert code == 2
    assert err.startswith("betaforge: error:")


# ---------------------------------------------------------------------------
# count


def test_count_finite_three(capsys):
    code, out, _ = run(capsys, "count", "--field", "qf", "1(0000)^2 0(10)*")
    assert (code, out) == (0, "Finite(3)\n")


def test_count_json(capsys):
    code, out, _ = run(
        capsys, "count", "--format", "json", "--field", "qf", "1(0000)^2 0(10)*"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["cardinality"] == {"kind": "finite", "count": 3}
    assert payload["display"] == "Finite(3)"


def test_count_lower_bound_exit_code(capsys):
    code, out, _ = run(
        capsys, "count", "1(0)*",
        "--max-nodes", "16", "--max-steps", "250",
    )
    assert code == 3
    assert out.startswith("LowerBound(")


# ---------------------------------------------------------------------------
# enumerate


def test_enumerate_complete(capsys):
    code, out, err = run(capsys, "enumerate", "--field", "qf", "1(0000)^1 0(10)*")
    assert code == 0
    words = out.strip().splitlines()
    assert len(words) == 2
    assert words == sorted(words)
    assert err == ""
    x = eval_word(parse_word("1(0000)^1 0(10)*"), qf_field())
    assert all(eval_word(parse_word(w), qf_field()) == x for w in words)


def test_enumerate_incomplete(capsys):
    code, out, err = run(
        capsys, "enumerate", "--field", "qf", "1(0)*",
        "--max-count", "4", "--max-steps", "250", "--max-nodes", "64",
    )
    assert code == 3
    assert out.strip().splitlines() == [
        "010(1)*",
        "0110010(1)*",
        "01101(0)*",
        "1(0)*",
    ]
    assert "# incomplete" in err


# ---------------------------------------------------------------------------
# verify


def test_verify_single_check(capsys):
    code, out, _ = run(capsys, "verify", "constants")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("PASS")
    assert lines[-1] == "1 passed, 0 failed, 0 skipped"


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "constants", "T1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["profile"] == "quick"
    assert payload["passed"] == 2 and payload["failed"] == 0
    assert [rec["id"] for rec in payload["results"]] == ["T1", "constants"]


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "nonsense")
    assert code == 2
    assert "betaforge: error:" in err


def test_verify_unknown_profile(capsys):
    code, _, err = run(capsys, "verify", "--profile", "slow", "constants")
    assert code == 2  # rejected by the argument parser
    assert "usage" in err


# ---------------------------------------------------------------------------
# usage errors


def test_word_syntax_error(capsys):
    code, _, err = run(capsys, "eval", "01x")
    assert code == 2
    assert err.startswith("betaforge: error:")


@pytest.mark.parametrize(
    "spec", ["nope", "poly:1,2", "poly:0,1@1,2,3", "poly:a,1@1,2", "poly:-1,-1,-2,0,1@x,2"]
)
def test_bad_field_specs(capsys, spec):
    code, _, err = run(capsys, "eval", "--field", spec, "(0)*")
    assert code == 2
    assert "betaforge: error:" in err


def test_custom_poly_field(capsys):
    spec = "poly:-1,-1,-2,0,1@17/10,43/25"
    code, out, _ = run(capsys, "eval", "--field", spec, "--plus-one", "(0)*")
    assert (code, out) == (0, "1 / 1.000000\n")


def test_csv_rejected_outside_orbit(capsys):
    code, _, err = run(capsys, "count", "--format", "csv", "(0)*")
    assert code == 2
    assert "csv" in err


def test_digits_must_be_positive(capsys):
    code, _, err = run(capsys, "eval", "--digits", "0", "(0)*")
    assert code == 2
    assert "--digits" in err


def test_missing_subcommand(capsys):
    code, _, err = run(capsys)
    assert code == 2
    assert "usage" in err


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "eval" in out and "verify" in out


# ---------------------------------------------------------------------------
# environment limits


def test_env_limits_apply(capsys, monkeypatch):
    monkeypatch.setenv("BETAFORGE_LIMITS", "max_steps=2")
    code, out, _ = run(capsys, "orbit", "--plus-one", "00(01)*")
    assert code == 3
    assert out.strip().endswith("[STEP LIMIT]")


def test_flags_override_env_limits(capsys, monkeypatch):
    monkeypatch.setenv("BETAFORGE_LIMITS", "max_steps=2")
    code, out, _ = run(capsys, "orbit", "--plus-one", "--max-steps", "10", "00(01)*")
    assert code == 0
    assert out.strip().endswith("[SWITCH]")


@pytest.mark.parametrize("raw", ["max_steps=two", "bogus=3", "max_steps", "max_nodes=0"])
def test_malformed_env_limits(capsys, monkeypatch, raw):
    monkeypatch.setenv("BETAFORGE_LIMITS", raw)
    code, _, err = run(capsys, "orbit", "--plus-one", "00(01)*")
    assert code == 2
    assert "BETAFORGE_LIMITS" in err


def test_env_limits_ignored_for_unlimited_commands(capsys, monkeypatch):
    # eval does not consult the limits at all
    monkeypatch.setenv("BETAFORGE_LIMITS", "max_steps=1")
    code, out, _ = run(capsys, "eval", "(0)*")
    assert (code, out) == (0, "0 / 0.000000\n")
