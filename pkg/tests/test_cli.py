import json
import subprocess
import sys

import pytest

from reflexive_lab import (
    SearchSummary,
    VerificationReport,
    evaluate_candidate,
    hstar_closed_form,
    make_qvector,
    reflexive_family,
)
from reflexive_lab.cli import main

FLAGSHIP = "3,20,24,24,24,24"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestHstar:
    def test_flagship_text_output(self, capsys):
        code, out, _ = run_cli(capsys, "hstar", "--q", FLAGSHIP)
        assert code == 0
        assert out.splitlines() == [
            "[1,16,29,28,29,16,1]",
            "symmetric=true",
            "unimodal=false",
            "volume=120",
        ]

    def test_json_output(self, capsys):
        code, out, _ = run_cli(capsys, "hstar", "--q", "2,3", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload == {
            "q": [2, 3],
            "oracle": "closed",
            "hstar": [1, 4, 1],
            "symmetric": True,
            "unimodal": True,
            "volume": 6,
        }

    def test_oracle_routes_agree_with_library(self, capsys):
        expected = list(hstar_closed_form(make_qvector([2, 3, 6])).coefficients)
        for oracle in ("closed", "interpolation", "parallelepiped"):
            code, out, _ = run_cli(
                capsys, "hstar", "--q", "2,3,6", "--oracle", oracle, "--json"
            )
            assert code == 0
            assert json.loads(out)["hstar"] == expected

    def test_oracle_handles_non_reflexive(self, capsys):
        code, out, _ = run_cli(
            capsys, "hstar", "--q", "2,2", "--oracle", "parallelepiped", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["hstar"] == [1, 2, 2]
        assert payload["symmetric"] is False

    def test_closed_form_rejects_non_reflexive(self, capsys):
        code, _, err = run_cli(capsys, "hstar", "--q", "2,2")
        assert code == 1
        assert "error:" in err

    def test_error_is_json_under_json_flag(self, capsys):
        code, out, _ = run_cli(capsys, "hstar", "--q", "2,2", "--json")
        assert code == 1
        payload = json.loads(out)
        assert payload["code"] == "not_reflexive"
        assert "message" in payload

    def test_invalid_entries_rejected(self, capsys):
        for bad in ("a,b", "0,2", "", "1,,2"):
            code, _, err = run_cli(capsys, "hstar", "--q", bad)
            assert code == 1
            assert "error:" in err

    def test_caps_override_unlocks_large_input(self, capsys):
        big = ",".join(["1"] * 8)
        code, _, _ = run_cli(capsys, "hstar", "--q", big, "--oracle", "interpolation")
        assert code == 1
        code, out, _ = run_cli(
            capsys,
            "hstar",
            "--q",
            big,
            "--oracle",
            "interpolation",
            "--oracle-caps",
            "8:300",
            "--json",
        )
        assert code == 0
        assert json.loads(out)["hstar"] == [1] * 9


class TestCheck:
    def test_flagship_classification(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--q", FLAGSHIP)
        assert code == 0
        lines = out.splitlines()
        assert f"q={FLAGSHIP}" in lines
        assert "reflexive=true" in lines
        assert "necessary=true" in lines
        assert "idp=false" in lines
        assert "hstar=[1,16,29,28,29,16,1]" in lines
        assert "unimodal=false" in lines
        assert "counterexample=false" in lines
        assert "witness facet_j=2 b=7 height=2" in lines

    def test_oracle_confirmation_with_witness(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--q", "2,2,15,20,20", "--oracle")
        assert code == 0
        lines = out.splitlines()
        assert "witness facet_j=3 b=8 height=2" in lines
        assert "oracle_hstar=confirmed" in lines
        assert "oracle_idp=confirmed" in lines
        assert "oracle_witness dilate=2 point=-1,-1,-8,-10,-10" in lines

    def test_json_matches_library_record(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--q", FLAGSHIP, "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload == evaluate_candidate(make_qvector([3, 20, 24, 24, 24, 24])).to_json_dict()

    def test_oracle_skipped_beyond_caps(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--q", "30,31", "--oracle", "--json")
        assert code == 0
        oracle = json.loads(out)["oracle"]
        assert oracle["idp"] == "skipped"

    def test_counterexample_exit_code(self, capsys, monkeypatch):
        real = evaluate_candidate(make_qvector([2, 3]))
        import dataclasses

        fake = dataclasses.replace(real, counterexample=True)
        monkeypatch.setattr("reflexive_lab.cli.evaluate_candidate", lambda q, caps: fake)
        code, out, _ = run_cli(capsys, "check", "--q", "2,3")
        assert code == 2
        assert "counterexample=true" in out.splitlines()


class TestEnumerate:
    def test_finite_support(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--r", "2,5")
        assert code == 0
        assert out.splitlines() == ["2,2,5"]

    def test_finite_support_json(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--r", "2,5", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["kind"] == "finite"
        assert payload["solutions"] == [{"x": [2, 1], "q": [2, 2, 5]}]

    def test_unbounded_support_notes_cut(self, capsys):
        code, out, err = run_cli(capsys, "enumerate", "--r", "1,3", "--bound", "4")
        assert code == 0
        assert "unbounded" in err
        assert "1,1,3" in out.splitlines()

    def test_count_mode_matches_library(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--r", "1,3", "--count", "4")
        assert code == 0
        expected = [",".join(map(str, q.entries)) for q in reflexive_family((1, 3), 4)]
        assert out.splitlines() == expected
        assert out.splitlines()[0] == "1,1,3"

    def test_gcd_violation_rejected(self, capsys):
        code, _, err = run_cli(capsys, "enumerate", "--r", "2,4", "--count", "3")
        assert code == 1
        assert "error:" in err


class TestFreesum:
    def test_compose(self, capsys):
        code, out, _ = run_cli(capsys, "freesum", "compose", "--p", "1,1", "--q", "1,1,1")
        assert code == 0
        assert out.splitlines() == ["y=1,1,3,3,3", "s=3"]

    def test_compose_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "freesum", "compose", "--p", "1,1", "--q", "1,1,1", "--json"
        )
        assert code == 0
        assert json.loads(out) == {
            "p": [1, 1],
            "q": [1, 1, 1],
            "s": 3,
            "y": [1, 1, 3, 3, 3],
        }

    def test_decompose(self, capsys):
        code, out, _ = run_cli(capsys, "freesum", "decompose", "--q", "1,1,3")
        assert code == 0
        assert out.splitlines() == ["p=1,1 q=1 s=3", "splits=1"]

    def test_decompose_none(self, capsys):
        code, out, _ = run_cli(capsys, "freesum", "decompose", "--q", "2,2,5", "--json")
        assert code == 0
        assert json.loads(out)["splits"] == []

    def test_compose_rejects_non_reflexive(self, capsys):
        code, _, err = run_cli(capsys, "freesum", "compose", "--p", "2,2", "--q", "1")
        assert code == 1
        assert "error:" in err


class TestPayne:
    def test_smallest_member(self, capsys):
        code, out, _ = run_cli(capsys, "payne", "--s", "3", "--k", "2", "--r", "0")
        assert code == 0
        assert out.splitlines() == [
            "q=1,1,1,1,1,3",
            "hstar=[1,1,2,1,2,1,1]",
            "symmetric=true",
            "unimodal=false",
            "idp=false",
        ]

    def test_json_fields(self, capsys):
        code, out, _ = run_cli(
            capsys, "payne", "--s", "4", "--k", "3", "--r", "1", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["q"] == [1] * 11 + [4, 4]
        assert payload["symmetric"] is True
        assert payload["idp"] is False
        assert sum(payload["hstar"]) == 1 + 11 + 8

    def test_constraint_violations_rejected(self, capsys):
        for s, k, r in ((3, 1, 0), (2, 4, 0), (3, 2, 1), (4, 3, -1)):
            code, _, err = run_cli(
                capsys, "payne", "--s", str(s), "--k", str(k), "--r", str(r)
            )
            assert code == 1
            assert "error:" in err


class TestSearch:
    def test_stdout_stream(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--n-min", "2", "--n-max", "2", "--max-entry", "3")
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert len(lines) == 7
        assert "summary" in lines[-1]
        assert [tuple(r["q"]) for r in lines[:-1]] == [
            (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3),
        ]

    def test_output_file_and_summary_line(self, capsys, tmp_path):
        out_path = tmp_path / "run.jsonl"
        code, out, _ = run_cli(
            capsys, "search", "--n-max", "2", "--max-entry", "3",
            "--output", str(out_path),
        )
        assert code == 0
        stdout_summary = json.loads(out)
        assert "summary" in stdout_summary
        file_lines = out_path.read_text().splitlines()
        assert json.loads(file_lines[-1]) == stdout_summary

    def test_filter_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, "search", "--n-min", "2", "--n-max", "2", "--max-entry", "3",
            "--filter", "reflexive",
        )
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        qs = {tuple(r["q"]) for r in records if "summary" not in r}
        assert qs == {(1, 1), (1, 2), (2, 3)}

    def test_fixed_support_flag(self, capsys):
        code, out, _ = run_cli(capsys, "search", "--r", "2,5")
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert [2, 2, 5] in [r.get("q") for r in records]

    def test_threads_env_default(self, capsys, monkeypatch):
        seen = {}

        def fake_run(spec):
            seen["spec"] = spec
            return SearchSummary(counts={}, counterexamples=(), records_written=0)

        monkeypatch.setenv("REFLEXIVE_LAB_THREADS", "3")
        monkeypatch.setattr("reflexive_lab.cli.run_search", fake_run)
        code, _, _ = run_cli(capsys, "search", "--n-max", "1", "--max-entry", "1")
        assert code == 0
        assert seen["spec"].threads == 3

    def test_counterexample_exit_code(self, capsys, monkeypatch):
        fake = SearchSummary(
            counts={}, counterexamples=((2, 3),), records_written=1
        )
        monkeypatch.setattr("reflexive_lab.cli.run_search", lambda spec: fake)
        code, _, _ = run_cli(capsys, "search", "--n-max", "1", "--max-entry", "1")
        assert code == 2


class TestVerify:
    def test_two_support_small(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "two-support",
            "--max-part", "6", "--m-max", "3", "--x-max", "3",
        )
        assert code == 0
        lines = out.splitlines()
        assert "discrepancies=0" in lines
        assert "ok=true" in lines

    def test_family_unimodality_small(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "theorem12", "--r-max", "3", "--m-max", "3", "--json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        assert payload["checked"] == 6

    def test_discrepancy_exit_code(self, capsys, monkeypatch):
        fake = VerificationReport("fake", 1, ((1, 2, 1, 1, True, False),))
        monkeypatch.setattr(
            "reflexive_lab.cli.verify_two_support_classification",
            lambda *a: fake,
        )
        code, out, _ = run_cli(capsys, "verify", "two-support")
        assert code == 3
        assert "ok=false" in out.splitlines()


class TestErrorHandling:
    def test_unknown_subcommand(self, capsys):
        code, _, err = run_cli(capsys, "frobnicate")
        assert code == 1
        assert "error:" in err

    def test_missing_required_flag(self, capsys):
        code, _, err = run_cli(capsys, "hstar")
        assert code == 1
        assert "error:" in err

    def test_bad_caps_syntax(self, capsys):
        for bad in ("abc", "7", "7:x", ":"):
            code, _, err = run_cli(
                capsys, "hstar", "--q", "2,3", "--oracle-caps", bad
            )
            assert code == 1
            assert "error:" in err

    def test_bad_filter_name(self, capsys):
        code, _, err = run_cli(capsys, "search", "--filter", "bogus")
        assert code == 1
        assert "error:" in err

    def test_usage_error_is_json_under_json_flag(self, capsys):
        code, out, _ = run_cli(capsys, "hstar", "--json")
        assert code == 1
        payload = json.loads(out)
        assert payload["code"] == "usage_error"

    def test_oracle_too_large_is_domain_error(self, capsys):
        code, out, _ = run_cli(
            capsys, "hstar", "--q", ",".join(["2"] * 9), "--oracle", "parallelepiped",
            "--json",
        )
        assert code == 1
        assert json.loads(out)["code"] == "oracle_too_large"


class TestModuleEntryPoint:
    def test_python_dash_m(self):
        proc = subprocess.run(
            [sys.executable, "-m", "reflexive_lab", "hstar", "--q", "2,3"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.splitlines()[0] == "[1,4,1]"

    def test_console_script_exit_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "reflexive_lab", "hstar", "--q", "2,2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 1
