"""Sweep driver: grid construction, expected declarations, report plumbing."""

import json
from fractions import Fraction

import pytest

from hybridseq.sequences import SeqParams
from hybridseq.sweep import (
    ConfigError,
    DEFAULT_EXPECTED,
    SweepConfig,
    build_grid,
    run_identity,
    run_sweep,
    standard_grid,
    write_reports_jsonl,
    write_summary_csv,
)


class TestGrid:
    def test_size_and_validity(self):
        grid = standard_grid()
        assert len(grid) == 396
        assert len({p.triple() for p in grid}) == 99
        assert len(grid) >= 40

    def test_degenerate_triple_excluded(self):
        assert all(p.triple() != (2, 2, -1) for p in standard_grid())

    def test_symbolic_w_pair_resolves_b(self):
        grid = build_grid(("2",), ("3",), ("1",), (("2", "b"),))
        assert len(grid) == 1
        assert (grid[0].w0, grid[0].w1) == (2, 3)

    def test_contains_negative_discriminants(self):
        assert any(p.delta_sq < 0 for p in standard_grid())

    def test_contains_enough_asymmetric_tuples(self):
        assert sum(1 for p in standard_grid() if p.a != p.b) >= 10

    def test_deterministic_order(self):
        assert standard_grid() == standard_grid()


class TestConfig:
    def test_empty_identities_rejected(self):
        with pytest.raises(ConfigError, match="no identities"):
            SweepConfig(identities=())

    def test_unknown_identity_rejected(self):
        with pytest.raises(ConfigError, match="unknown identity"):
            SweepConfig(identities=("fermat_last",))

    def test_unknown_predicate_rejected(self):
        with pytest.raises(ConfigError, match="unknown predicate"):
            SweepConfig(expected=({"identity": "vajda", "predicate": "sometimes",
                                   "outcome": "fail", "reason": "x"},))

    def test_bad_outcome_rejected(self):
        with pytest.raises(ConfigError, match="outcome"):
            SweepConfig(expected=({"identity": "vajda", "predicate": "always",
                                   "outcome": "crash", "reason": "x"},))

    def test_from_json_families(self):
        cfg = SweepConfig.from_json_dict({
            "identities": ["summation"],
            "families": [{"name": "fibonacci"},
                         {"name": "k-pell", "params": {"k": "3"}}],
        })
        assert [p.triple() for p in cfg.grid] == [(1, 1, 1), (2, 2, 3)]

    def test_from_json_bad_family(self):
        with pytest.raises(ConfigError):
            SweepConfig.from_json_dict({"families": [{"name": "nope"}]})

    def test_from_json_unknown_key(self):
        with pytest.raises(ConfigError, match="unknown config keys"):
            SweepConfig.from_json_dict({"identies": []})

    def test_range_override(self):
        cfg = SweepConfig(identities=("vajda",), ranges={"vajda": {"n_max": 2}})
        assert cfg.range_for("vajda")["n_max"] == 2
        assert cfg.range_for("vajda")["r_max"] == 4

    def test_empty_grid_rejected(self):
        with pytest.raises(ConfigError, match="empty"):
            SweepConfig(grid=())
        with pytest.raises(ConfigError, match="empty"):
            # every tuple of this axis product is degenerate (delta_sq = 0)
            SweepConfig.from_json_dict(
                {"grid": {"a": ["2"], "b": ["2"], "c": ["-1"]}})


class TestExpectedSemantics:
    def test_summation_error_not_declared_fails(self):
        cfg = SweepConfig(
            identities=("summation",),
            grid=(SeqParams(1, 1, 2, 0, 1),),
            ranges={"summation": {"n_min": 1, "n_max": 3}},
            expected=(),
        )
        result = run_sweep(cfg)
        assert result.exit_code == 1
        rep = result.reports[0]
        assert rep.errors == 3 and rep.expected_errors == 0
        assert "denominator zero" in rep.first_failure["error"]

    def test_summation_error_declared_passes(self):
        cfg = SweepConfig(
            identities=("summation",),
            grid=(SeqParams(1, 1, 2, 0, 1),),
            ranges={"summation": {"n_min": 1, "n_max": 3}},
        )
        result = run_sweep(cfg)
        assert result.exit_code == 0
        rep = result.reports[0]
        assert rep.expected_errors == 3 and rep.errors == 0
        assert rep.passed and not rep.clean
        assert "c^2 - ab - 2c + 1 = 0" in rep.first_expected["reason"]
        assert "denominator zero" in rep.first_expected["error"]

    def test_verbatim_failure_declared_is_visible(self):
        cfg = SweepConfig(
            identities=("generating_function",),
            grid=(SeqParams(2, 3, 1, 0, 1),),
        )
        result = run_sweep(cfg)
        assert result.exit_code == 0
        rep = result.reports[0]
        assert rep.expected_failures == 1 and rep.failures == 0
        assert rep.first_expected["reason"]

    def test_verbatim_failure_undeclared_exits_nonzero(self):
        cfg = SweepConfig(
            identities=("generating_function",),
            grid=(SeqParams(2, 3, 1, 0, 1),),
            expected=(),
        )
        result = run_sweep(cfg)
        assert result.exit_code == 1

    def test_abc_scope_dedupes_tuples(self):
        grid = tuple(SeqParams(2, 3, 1, w0, w1) for w0, w1 in ((0, 1), (1, 1), (5, -4)))
        cfg = SweepConfig(identities=("lemma_products",), grid=grid)
        reports = run_identity(cfg, "lemma_products")
        assert len(reports) == 1

    def test_default_declarations_cover_known_findings(self):
        names = {e["identity"] for e in DEFAULT_EXPECTED}
        assert names == {"generating_function", "binomial_sum_i", "binomial_sum_ii",
                         "fib_lucas_i", "fib_lucas_ii", "fib_lucas_iii", "summation"}


class TestReports:
    def test_jsonl_and_csv_round_trip(self, tmp_path):
        cfg = SweepConfig(
            identities=("summation", "cassini_matrix"),
            grid=(SeqParams(1, 1, 1, 0, 1), SeqParams(2, 3, 1, 0, 1)),
            ranges={"summation": {"n_min": 1, "n_max": 4},
                    "cassini_matrix": {"n_min": 1, "n_max": 3}},
        )
        result = run_sweep(cfg)
        jsonl = tmp_path / "reports.jsonl"
        csv_path = tmp_path / "summary.csv"
        write_reports_jsonl(jsonl, result)
        write_summary_csv(csv_path, result)

        lines = [json.loads(line) for line in jsonl.read_text().splitlines()]
        assert len(lines) == 4
        assert all(rec["passed"] for rec in lines)
        assert lines[0]["params"]["a"] == "1/1"

        header, *rows = csv_path.read_text().splitlines()
        assert header.startswith("identity,grid_size,checks,passes,failures")
        assert len(rows) == 2

    def test_deterministic_output(self, tmp_path):
        cfg = SweepConfig(identities=("vajda",),
                          grid=(SeqParams(2, 3, 1, 0, 1),),
                          ranges={"vajda": {"n_max": 3, "r_max": 2, "s_max": 2}})
        paths = []
        for name in ("one.jsonl", "two.jsonl"):
            path = tmp_path / name
            write_reports_jsonl(path, run_sweep(cfg))
            paths.append(path.read_bytes())
        assert paths[0] == paths[1]
