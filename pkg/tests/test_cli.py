"""Command-line interface: output formats, exit codes, byte stability."""

import json
from pathlib import Path

import pytest

from wahlkit.cli import atlas_record, main

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpand:
    def test_smallest_singularity(self, capsys):
        code, out, _ = run(capsys, "expand", "2", "1")
        assert code == 0
        assert "T-string: [4]" in out
        assert "discrepancies: -1/2" in out
        assert "|det| = 4 = p^2" in out

    def test_p5_q2(self, capsys):
        code, out, _ = run(capsys, "expand", "5", "2")
        assert code == 0
        assert "T-string: [3, 5, 2]" in out
        assert "-3/5, -4/5, -2/5" in out

    def test_json_record(self, capsys):
        code, out, _ = run(capsys, "expand", "5", "2", "--json")
        assert code == 0
        rec = json.loads(out)
        assert rec == {
            "p": 5,
            "q": 2,
            "ell": 3,
            "b": [3, 5, 2],
            "discrepancies": ["-3/5", "-4/5", "-2/5"],
            "det": 25,
            "checksum_ok": True,
        }

    def test_non_coprime_is_a_usage_error(self, capsys):
        code, out, err = run(capsys, "expand", "4", "2")
        assert code == 2
        assert "coprime" in err
        assert out == ""

    def test_q_out_of_range(self, capsys):
        code, _, err = run(capsys, "expand", "3", "3")
        assert code == 2
        assert err


class TestAtlas:
    def test_counts(self, capsys):
        code, out, _ = run(capsys, "atlas", "--max-len", "5")
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 2**5 - 1

    def test_sorted_and_byte_stable(self, capsys):
        _, first, _ = run(capsys, "atlas", "--max-len", "4")
        _, second, _ = run(capsys, "atlas", "--max-len", "4")
        assert first == second
        records = [json.loads(x) for x in first.strip().split("\n")]
        keys = [(r["ell"], r["b"]) for r in records]
        assert keys == sorted(keys)

    def test_records_validate(self, capsys):
        _, out, _ = run(capsys, "atlas", "--max-len", "4")
        for line in out.strip().split("\n"):
            rec = json.loads(line)
            assert rec == atlas_record(tuple(rec["b"]))
            assert rec["det"] == rec["p"] ** 2

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "atlas.jsonl"
        code, out, _ = run(capsys, "atlas", "--max-len", "3", "--out", str(target))
        assert code == 0
        assert "wrote 7 records" in out
        assert len(target.read_text().strip().split("\n")) == 7

    def test_max_len_out_of_range(self, capsys):
        assert run(capsys, "atlas", "--max-len", "0")[0] == 2
        assert run(capsys, "atlas", "--max-len", "17")[0] == 2


class TestBlowdown:
    def test_contracts_the_double_point_fixture(self, capsys):
        code, out, _ = run(capsys, "blowdown", str(FIXTURES / "intersection_blowup.json"))
        assert code == 0
        assert "status: CONTRACTED_TO_POINT after 3 steps" in out

    def test_stuck_fixture(self, capsys):
        code, out, _ = run(capsys, "blowdown", str(FIXTURES / "single_minus_two.json"))
        assert code == 0
        assert "status: STUCK after 0 steps" in out

    def test_violation_fixture(self, capsys):
        code, out, _ = run(capsys, "blowdown", str(FIXTURES / "interior_hit.json"))
        assert code == 0
        assert "status: SW_VIOLATION" in out
        assert "violation at" in out

    def test_json_trace(self, capsys):
        code, out, _ = run(
            capsys, "blowdown", str(FIXTURES / "interior_hit.json"), "--json"
        )
        assert code == 0
        records = [json.loads(x) for x in out.strip().split("\n")]
        assert records[-1]["status"] == "SW_VIOLATION"
        assert records[0]["step"] == 1

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "blowdown", "/nonexistent/nowhere.json")
        assert code == 2
        assert "cannot read" in err

    def test_malformed_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, err = run(capsys, "blowdown", str(bad))
        assert code == 2
        assert "line 1" in err

    def test_invalid_config(self, capsys, tmp_path):
        bad = tmp_path / "bad_config.json"
        bad.write_text(json.dumps({"vertices": [], "edges": [[1, 2, 1]]}))
        code, _, err = run(capsys, "blowdown", str(bad))
        assert code == 2
        assert "invalid configuration" in err


class TestVerify:
    def test_all_checks_pass(self, capsys):
        code, out, _ = run(capsys, "verify")
        assert code == 0
        assert "14/14 checks passed" in out

    def test_filter(self, capsys):
        code, out, _ = run(capsys, "verify", "--filter", "bounds")
        assert code == 0
        assert "bounds.headline" in out
        assert "tstring" not in out

    def test_filter_without_matches(self, capsys):
        code, _, err = run(capsys, "verify", "--filter", "nosuchcheck")
        assert code == 2
        assert "no checks match" in err

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "verify", "--json", "--filter", "discrepancy")
        assert code == 0
        rows = [json.loads(x) for x in out.strip().split("\n")]
        assert all(r["ok"] for r in rows)
        assert {r["check"] for r in rows} == {
            "discrepancy.kawamata",
            "discrepancy.determinant",
        }

    def test_seed_changes_nothing(self, capsys):
        a = run(capsys, "verify", "--filter", "random", "--seed", "1")
        b = run(capsys, "verify", "--filter", "random", "--seed", "99")
        assert a[0] == b[0] == 0


class TestParser:
    def test_no_subcommand_is_a_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2
