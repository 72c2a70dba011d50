"""CLI surface: subcommands, formats, exit codes, determinism."""

import json

import pytest

from hybridseq.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line]


class TestTerm:
    def test_family_range_with_hybrid(self, capsys):
        code, out, _ = run_cli(capsys, "term", "--family", "fibonacci",
                               "--from", "0", "--to", "5", "--hybrid")
        assert code == 0
        rows = json_lines(out)
        assert len(rows) == 6
        first = rows[0]
        assert (first["re"], first["i"], first["eps"], first["h"]) == (
            "0/1", "1/1", "1/1", "2/1")
        assert first["character"] == "-5/1"
        assert [r["w"] for r in rows] == ["0/1", "1/1", "1/1", "2/1", "3/1", "5/1"]

    def test_explicit_params_single_index(self, capsys):
        code, out, _ = run_cli(capsys, "term", "--a", "2", "--b", "3", "--c", "1",
                               "--w0", "0", "--w1", "1", "--n", "6")
        assert code == 0
        assert json_lines(out) == [{"n": 6, "w": "126/1"}]

    def test_zero_coefficient_rejected(self, capsys):
        code, _, err = run_cli(capsys, "term", "--a", "1", "--b", "1", "--c", "0",
                               "--w0", "0", "--w1", "1", "--n", "3")
        assert code == 2
        assert "nonzero" in err

    def test_degenerate_discriminant_rejected(self, capsys):
        code, _, err = run_cli(capsys, "term", "--a", "2", "--b", "2", "--c", "-1",
                               "--w0", "0", "--w1", "1", "--n", "3")
        assert code == 2
        assert "delta_sq" in err

    def test_unknown_family(self, capsys):
        code, _, err = run_cli(capsys, "term", "--family", "nope", "--n", "1")
        assert code == 2
        assert "unknown family" in err

    def test_family_and_explicit_params_conflict(self, capsys):
        code, _, err = run_cli(capsys, "term", "--family", "fibonacci",
                               "--a", "1", "--n", "1")
        assert code == 2

    def test_missing_params(self, capsys):
        code, _, err = run_cli(capsys, "term", "--a", "1", "--n", "1")
        assert code == 2

    def test_binet_cross_check(self, capsys):
        code, out, _ = run_cli(capsys, "term", "--family", "pell",
                               "--from", "0", "--to", "6", "--binet")
        assert code == 0
        assert [r["binet"] for r in json_lines(out)] == [r["w"] for r in json_lines(out)]

    def test_binet_negative_range_rejected(self, capsys):
        code, _, err = run_cli(capsys, "term", "--family", "pell",
                               "--from", "-3", "--to", "2", "--binet")
        assert code == 2
        assert "nonnegative" in err

    def test_negative_range_without_binet(self, capsys):
        code, out, _ = run_cli(capsys, "term", "--family", "fibonacci",
                               "--from", "-3", "--to", "0")
        assert code == 0
        assert [r["w"] for r in json_lines(out)] == ["2/1", "-1/1", "1/1", "0/1"]

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(capsys, "term", "--family", "fibonacci",
                               "--from", "0", "--to", "2", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "n,w"

    def test_bad_fraction_argument(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run_cli(capsys, "term", "--a", "x/y", "--b", "1", "--c", "1",
                    "--w0", "0", "--w1", "1", "--n", "1")
        assert exc.value.code == 2

    def test_output_file(self, capsys, tmp_path):
        out_path = tmp_path / "terms.jsonl"
        code, out, _ = run_cli(capsys, "term", "--family", "fibonacci",
                               "--n", "10", "--out", str(out_path))
        assert code == 0 and out == ""
        assert json_lines(out_path.read_text()) == [{"n": 10, "w": "55/1"}]


class TestHybrid:
    def test_k_pell_with_free_param(self, capsys):
        code, out, _ = run_cli(capsys, "hybrid", "--family", "k-pell",
                               "--param", "k=3", "--from", "0", "--to", "1")
        assert code == 0
        rows = json_lines(out)
        assert rows[0] == {"n": 0, "re": "0/1", "i": "1/1", "eps": "2/1",
                           "h": "7/1", "character": "-52/1"}

    def test_missing_free_param(self, capsys):
        code, _, err = run_cli(capsys, "hybrid", "--family", "k-pell", "--n", "1")
        assert code == 2
        assert "missing" in err

    def test_round_trip_exact_fractions(self, capsys):
        from hybridseq.hybrid import Hybrid
        code, out, _ = run_cli(capsys, "hybrid", "--a", "5/2", "--b", "1",
                               "--c", "3/2", "--w0", "1", "--w1", "1",
                               "--from", "0", "--to", "4")
        assert code == 0
        from hybridseq.hybrid_sequences import HybridSeq
        from hybridseq.sequences import SeqParams
        hs = HybridSeq(SeqParams("5/2", 1, "3/2", 1, 1))
        for rec in json_lines(out):
            assert Hybrid.from_json_dict(rec) == hs.term(rec["n"])

    def test_binet_flag(self, capsys):
        code, out, _ = run_cli(capsys, "hybrid", "--family", "jacobsthal",
                               "--from", "0", "--to", "3", "--binet")
        assert code == 0
        assert all(rec["binet_checked"] for rec in json_lines(out))


class TestFamilies:
    def test_listing(self, capsys):
        code, out, _ = run_cli(capsys, "families")
        assert code == 0
        rows = json_lines(out)
        assert len(rows) == 12
        by_name = {r["name"]: r for r in rows}
        assert by_name["pell-lucas"]["tuple"] == "(2,2;2,2,1)"
        assert by_name["jacobsthal"]["tuple"] == "(0,1;1,1,2)"

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "families", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "name,tuple,free_params,description"
        assert len(out.splitlines()) == 13


class TestVerify:
    def _config(self, tmp_path, doc):
        path = tmp_path / "config.json"
        path.write_text(json.dumps(doc))
        return str(path)

    def test_small_config_exits_zero(self, capsys, tmp_path):
        cfg = self._config(tmp_path, {
            "identities": ["binet", "cassini_matrix", "summation"],
            "grid": {"a": ["1", "2"], "b": ["1"], "c": ["1"],
                     "w_pairs": [["0", "1"], ["2", "b"]]},
            "ranges": {"binet": {"n_min": 0, "n_max": 10},
                       "cassini_matrix": {"n_min": 1, "n_max": 3},
                       "summation": {"n_min": 1, "n_max": 5}},
        })
        out_dir = tmp_path / "reports"
        code, out, _ = run_cli(capsys, "verify", "--config", cfg,
                               "--out", str(out_dir))
        assert code == 0
        assert "verify: OK" in out
        assert (out_dir / "reports.jsonl").exists()
        assert (out_dir / "summary.csv").exists()

    def test_undeclared_summation_error_exits_one(self, capsys, tmp_path):
        cfg = self._config(tmp_path, {
            "identities": ["summation"],
            "families": [{"name": "jacobsthal"}],
            "ranges": {"summation": {"n_min": 1, "n_max": 3}},
            "expected": [],
        })
        code, out, _ = run_cli(capsys, "verify", "--config", cfg,
                               "--out", str(tmp_path / "r"))
        assert code == 1
        assert "verify: FAILED" in out
        reports = [json.loads(line)
                   for line in (tmp_path / "r" / "reports.jsonl").read_text().splitlines()]
        assert reports[0]["errors"] == 3
        assert "denominator zero" in reports[0]["first_failure"]["error"]

    def test_declared_summation_error_exits_zero(self, capsys, tmp_path):
        cfg = self._config(tmp_path, {
            "identities": ["summation"],
            "families": [{"name": "jacobsthal"}],
            "ranges": {"summation": {"n_min": 1, "n_max": 3}},
        })
        code, out, _ = run_cli(capsys, "verify", "--config", cfg,
                               "--out", str(tmp_path / "r"))
        assert code == 0
        assert "xerror=3" in out

    def test_empty_identature_list_rejected(self, capsys, tmp_path):
        cfg = self._config(tmp_path, {"identities": []})
        code, _, err = run_cli(capsys, "verify", "--config", cfg,
                               "--out", str(tmp_path / "r"))
        assert code == 2
        assert "no identities" in err

    def test_bad_json_config(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, _, err = run_cli(capsys, "verify", "--config", str(path),
                               "--out", str(tmp_path / "r"))
        assert code == 2
        assert "not valid JSON" in err

    def test_deterministic_reports(self, capsys, tmp_path):
        cfg = self._config(tmp_path, {
            "identities": ["vajda"],
            "grid": {"a": ["2"], "b": ["3"], "c": ["1"], "w_pairs": [["0", "1"]]},
            "ranges": {"vajda": {"n_max": 3, "r_max": 2, "s_max": 2}},
        })
        blobs = []
        for name in ("r1", "r2"):
            code, _, _ = run_cli(capsys, "verify", "--config", cfg,
                                 "--out", str(tmp_path / name))
            assert code == 0
            blobs.append((tmp_path / name / "reports.jsonl").read_bytes())
        assert blobs[0] == blobs[1]
