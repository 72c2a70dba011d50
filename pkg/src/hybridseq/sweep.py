"""Grid sweeps over the identity checkers, with declared-expected outcomes.

The standard grid is the product of a, b in {1, 2, 3, -1, 5/2}, c in
{1, 2, -1, 3/2} and initial pairs (0,1), (2,b), (1,1), (5,-4), filtered to
``delta_sq != 0`` (one triple, (2,2,-1), drops out).

A sweep runs every configured identity over its index ranges for every grid
tuple and aggregates one report per (identity, parameter tuple).  Outcomes
are classified pass / fail / error, and a config may *declare* certain
fail/error outcomes as expected (a predicate from a fixed vocabulary plus a
reason).  Declared outcomes still appear in the reports with their real
result; they only stop the sweep from exiting nonzero.  The shipped default
declarations pin precisely the closed-form displays that are provably valid
only on the a == b slice (see the checker docstrings), each next to a
corrected variant that must pass everywhere:

    generating_function          <-> generating_function_recurrence_form
    binomial_sum_i / _ii         <-> binomial_sum_i/_ii_componentwise
    fib_lucas_i / _ii            <-> fib_lucas_i/_ii_hatted
    fib_lucas_iii (mixed parity) <-> fib_lucas_iii_same_parity

plus the summation checker's denominator-zero error on tuples with
c^2 - ab - 2c + 1 = 0 (the Jacobsthal triple (1,1,2) and (-1,-1,2)).
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import identities as idn
from .hybrid_sequences import HybridSeq, family_lookup
from .scalars import Rational, rat, rat_str
from .sequences import SeqParams


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# the standard grid
# ---------------------------------------------------------------------------

GRID_A = ("1", "2", "3", "-1", "5/2")
GRID_B = GRID_A
GRID_C = ("1", "2", "-1", "3/2")
GRID_W_PAIRS = (("0", "1"), ("2", "b"), ("1", "1"), ("5", "-4"))


def _resolve_symbol(token: str, a: Rational, b: Rational, c: Rational) -> Rational:
    symbols = {"a": a, "b": b, "c": c}
    if token in symbols:
        return symbols[token]
    if token.startswith("-") and token[1:] in symbols:
        return -symbols[token[1:]]
    return rat(token)


def build_grid(a_values=GRID_A, b_values=GRID_B, c_values=GRID_C,
               w_pairs=GRID_W_PAIRS) -> list[SeqParams]:
    """All valid parameter tuples, deterministically ordered."""
    out = []
    for sa in a_values:
        for sb in b_values:
            for sc in c_values:
                a, b, c = rat(sa), rat(sb), rat(sc)
                if a * b * (a * b + 4 * c) == 0:
                    continue  # delta_sq = 0: closed forms undefined
                for w0s, w1s in w_pairs:
                    w0 = _resolve_symbol(str(w0s), a, b, c)
                    w1 = _resolve_symbol(str(w1s), a, b, c)
                    out.append(SeqParams(a, b, c, w0, w1))
    out.sort(key=lambda p: (p.a, p.b, p.c, p.w0, p.w1))
    return out


def standard_grid() -> list[SeqParams]:
    return build_grid()


# ---------------------------------------------------------------------------
# identity registry: scope, default index ranges, dispatch
# ---------------------------------------------------------------------------

# identities that depend only on (a, b, c) run once per distinct triple
ABC_SCOPE = frozenset({
    "hatted_scaling", "root_power", "u_v_closed_form",
    "lemma_products", "lemma_squares",
    "fib_lucas_i", "fib_lucas_ii", "fib_lucas_iii", "fib_lucas_iv",
    "fib_lucas_i_hatted", "fib_lucas_ii_hatted", "fib_lucas_iii_same_parity",
})

DEFAULT_RANGES: dict[str, dict[str, int]] = {
    "binet": {"n_min": 0, "n_max": 40},
    "hybrid_binet": {"n_min": 0, "n_max": 30},
    "negative_index": {"n_min": -20, "n_max": -1},
    "hatted_scaling": {"n_min": 0, "n_max": 40},
    "root_power": {"m_min": 1, "m_max": 20},
    "u_v_closed_form": {"n_min": 0, "n_max": 40},
    "four_term_recurrence": {"n_min": 4, "n_max": 40},
    "generating_function": {"degree": 60},
    "generating_function_recurrence_form": {"degree": 60},
    "lemma_products": {},
    "lemma_squares": {},
    "vajda": {"n_min": 0, "n_max": 12, "r_max": 4, "s_max": 4},
    "catalan": {"n_min": 0, "n_max": 12, "r_max": 3},
    "cassini_matrix": {"n_min": 1, "n_max": 10},
    "summation": {"n_min": 1, "n_max": 25},
    "binomial_sum_i": {"n_max": 15, "r_max": 4},
    "binomial_sum_ii": {"n_max": 15, "r_max": 4},
    "binomial_sum_i_componentwise": {"n_max": 15, "r_max": 4},
    "binomial_sum_ii_componentwise": {"n_max": 15, "r_max": 4},
    "fib_lucas_i": {"n_min": 1, "n_max": 20},
    "fib_lucas_ii": {"n_min": 1, "n_max": 20},
    "fib_lucas_iii": {"n_min": 1, "n_max": 20},
    "fib_lucas_iv": {"n_min": 1, "n_max": 20},
    "fib_lucas_i_hatted": {"n_min": 1, "n_max": 20},
    "fib_lucas_ii_hatted": {"n_min": 1, "n_max": 20},
    "fib_lucas_iii_same_parity": {"n_min": 1, "n_max": 20},
}

IDENTITY_ORDER = tuple(DEFAULT_RANGES)


def index_tuples(identity: str, rng: dict[str, int]) -> list[tuple[int, ...]]:
    lo, hi = rng.get("n_min", 0), rng.get("n_max", 0)
    if identity in ("binet", "hybrid_binet", "negative_index", "hatted_scaling",
                    "u_v_closed_form", "four_term_recurrence", "cassini_matrix",
                    "summation", "fib_lucas_i", "fib_lucas_ii", "fib_lucas_iv",
                    "fib_lucas_i_hatted", "fib_lucas_ii_hatted"):
        return [(n,) for n in range(lo, hi + 1)]
    if identity == "root_power":
        return [(m,) for m in range(rng["m_min"], rng["m_max"] + 1)]
    if identity in ("generating_function", "generating_function_recurrence_form"):
        return [(rng["degree"],)]
    if identity in ("lemma_products", "lemma_squares"):
        return [(0,), (1,)]
    if identity == "vajda":
        return [(n, r, s) for n in range(lo, hi + 1)
                for r in range(rng["r_max"] + 1) for s in range(rng["s_max"] + 1)]
    if identity == "catalan":
        return [(n, r) for n in range(lo, hi + 1) for r in range(rng["r_max"] + 1)]
    if identity in ("binomial_sum_i", "binomial_sum_ii",
                    "binomial_sum_i_componentwise", "binomial_sum_ii_componentwise"):
        return [(n, r) for n in range(rng.get("n_min", 0), rng["n_max"] + 1)
                for r in range(rng["r_max"] + 1)]
    if identity == "fib_lucas_iii":
        return [(n, m) for n in range(lo, hi + 1) for m in range(n)]
    if identity == "fib_lucas_iii_same_parity":
        return [(n, m) for n in range(lo, hi + 1) for m in range(n)
                if (n - m) % 2 == 0]
    raise ConfigError(f"unknown identity {identity!r}")


# checkers take either the hybrid sequence or its bare parameter set
_HS_CHECKS = {
    "hybrid_binet": idn.check_hybrid_binet,
    "four_term_recurrence": idn.check_four_term_recurrence,
    "generating_function": idn.check_generating_function,
    "generating_function_recurrence_form": idn.check_generating_function_recurrence_form,
    "vajda": idn.check_vajda,
    "catalan": idn.check_catalan,
    "cassini_matrix": idn.check_cassini_and_matrix,
    "summation": idn.check_summation,
    "binomial_sum_i": idn.check_binomial_sum_i,
    "binomial_sum_ii": idn.check_binomial_sum_ii,
    "binomial_sum_i_componentwise": idn.check_binomial_sum_i_componentwise,
    "binomial_sum_ii_componentwise": idn.check_binomial_sum_ii_componentwise,
}

_PARAM_CHECKS = {
    "binet": idn.check_binet,
    "negative_index": idn.check_negative_index,
    "hatted_scaling": idn.check_hatted_scaling,
    "root_power": idn.check_root_power,
    "u_v_closed_form": idn.check_u_v_closed_form,
    "lemma_products": idn.check_lemma_products,
    "lemma_squares": idn.check_lemma_squares,
    "fib_lucas_i": idn.check_fib_lucas_i,
    "fib_lucas_ii": idn.check_fib_lucas_ii,
    "fib_lucas_iii": idn.check_fib_lucas_iii,
    "fib_lucas_iv": idn.check_fib_lucas_iv,
    "fib_lucas_i_hatted": idn.check_fib_lucas_i_hatted,
    "fib_lucas_ii_hatted": idn.check_fib_lucas_ii_hatted,
    "fib_lucas_iii_same_parity": idn.check_fib_lucas_iii_same_parity,
}


def check_one(identity: str, hs: HybridSeq, idx: tuple[int, ...]) -> idn.IdentityReport:
    fn = _HS_CHECKS.get(identity)
    if fn is not None:
        return fn(hs, *idx)
    fn = _PARAM_CHECKS.get(identity)
    if fn is not None:
        return fn(hs.params, *idx)
    raise ConfigError(f"unknown identity {identity!r}")


# ---------------------------------------------------------------------------
# expected-outcome declarations
# ---------------------------------------------------------------------------

PREDICATES = {
    "always": lambda p, idx: True,
    "a_ne_b": lambda p, idx: p.a != p.b,
    "odd_n_and_a_ne_b": lambda p, idx: idx[0] % 2 == 1 and p.a != p.b,
    "pos_n_and_a_ne_b": lambda p, idx: idx[0] >= 1 and p.a != p.b,
    "mixed_parity_and_a_ne_b":
        lambda p, idx: (idx[0] - idx[1]) % 2 == 1 and p.a != p.b,
    "not_unit_symmetric": lambda p, idx: not (p.a == p.b and p.a * p.a == 1),
    "summation_denominator_zero":
        lambda p, idx: idn.summation_denominator(p) == 0,
}

DEFAULT_EXPECTED: tuple[dict, ...] = (
    {"identity": "generating_function", "predicate": "a_ne_b", "outcome": "fail",
     "reason": "compact two-term numerator requires K_2 = a K_1 + c K_0, which "
               "fails componentwise off the a = b slice; the recurrence-form "
               "numerator is exact everywhere"},
    {"identity": "binomial_sum_i", "predicate": "odd_n_and_a_ne_b", "outcome": "fail",
     "reason": "for odd n the summed terms carry the other parity's hybrid "
               "coefficient; the componentwise form is exact everywhere"},
    {"identity": "binomial_sum_ii", "predicate": "pos_n_and_a_ne_b", "outcome": "fail",
     "reason": "terms mix hybrid coefficients of both parities for n >= 1; "
               "the componentwise form is exact everywhere"},
    {"identity": "fib_lucas_i", "predicate": "a_ne_b", "outcome": "fail",
     "reason": "exact form is K_{u,n+1} + c K_{u,n-1} = K_{vhat,n}; the "
               "(a/b)^xi(n) K_{v,n} display collapses per-component factors"},
    {"identity": "fib_lucas_ii", "predicate": "not_unit_symmetric", "outcome": "fail",
     "reason": "exact form is (delta_sq/(ab)) K_{uhat,n}; the display is off "
               "by 1/(ab) and the hat unless a = b = +-1"},
    {"identity": "fib_lucas_iii", "predicate": "mixed_parity_and_a_ne_b",
     "outcome": "fail",
     "reason": "the product difference telescopes only when n = m (mod 2); "
               "see fib_lucas_iii_same_parity"},
    {"identity": "summation", "predicate": "summation_denominator_zero",
     "outcome": "error",
     "reason": "c^2 - ab - 2c + 1 = 0 makes the closed form undefined "
               "(Jacobsthal-type tuples)"},
)


@dataclass
class SweepConfig:
    identities: tuple[str, ...] = IDENTITY_ORDER
    grid: tuple[SeqParams, ...] | None = None
    ranges: dict = field(default_factory=dict)
    expected: tuple[dict, ...] = DEFAULT_EXPECTED

    def __post_init__(self):
        if not self.identities:
            raise ConfigError("config lists no identities to check")
        for name in self.identities:
            if name not in DEFAULT_RANGES:
                raise ConfigError(f"unknown identity {name!r}")
        if self.grid is None:
            self.grid = tuple(standard_grid())
        elif not self.grid:
            raise ConfigError("the parameter grid is empty")
        for entry in self.expected:
            if entry.get("predicate") not in PREDICATES:
                raise ConfigError(f"unknown predicate {entry.get('predicate')!r}")
            if entry.get("outcome") not in ("fail", "error"):
                raise ConfigError("expected outcome must be 'fail' or 'error'")
            if entry.get("identity") not in DEFAULT_RANGES:
                raise ConfigError(f"unknown identity {entry.get('identity')!r}")

    def range_for(self, identity: str) -> dict:
        rng = dict(DEFAULT_RANGES[identity])
        rng.update(self.ranges.get(identity, {}))
        return rng

    def expected_outcome(self, identity: str, params: SeqParams,
                         idx: tuple[int, ...]) -> dict | None:
        for entry in self.expected:
            if entry["identity"] == identity and PREDICATES[entry["predicate"]](params, idx):
                return entry
        return None

    @classmethod
    def from_json_dict(cls, doc: dict) -> "SweepConfig":
        if not isinstance(doc, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(doc) - {"identities", "grid", "families", "ranges", "expected"}
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        identities = tuple(doc.get("identities", IDENTITY_ORDER))
        grid_doc = doc.get("grid")
        params: list[SeqParams] = []
        try:
            if grid_doc is not None:
                params.extend(build_grid(
                    tuple(grid_doc.get("a", GRID_A)),
                    tuple(grid_doc.get("b", GRID_B)),
                    tuple(grid_doc.get("c", GRID_C)),
                    tuple(tuple(pair) for pair in grid_doc.get("w_pairs", GRID_W_PAIRS)),
                ))
            for fam in doc.get("families", ()):
                free = {k: rat(v) for k, v in fam.get("params", {}).items()}
                params.append(family_lookup(fam["name"], **free).params)
        except (ValueError, KeyError, TypeError) as exc:
            raise ConfigError(f"bad grid/family entry: {exc}") from exc
        if grid_doc is None and "families" not in doc:
            grid = None  # fall back to the standard grid
        elif params:
            grid = tuple(params)
        else:
            raise ConfigError("config grid/families resolve to an empty grid")
        expected = doc.get("expected")
        if expected is None:
            expected = DEFAULT_EXPECTED
        return cls(identities=identities, grid=grid,
                   ranges=doc.get("ranges", {}), expected=tuple(expected))


# ---------------------------------------------------------------------------
# running a sweep
# ---------------------------------------------------------------------------

def _params_dict(p: SeqParams) -> dict:
    return {k: rat_str(getattr(p, k)) for k in ("a", "b", "c", "w0", "w1")}


def _abc_representative(p: SeqParams) -> SeqParams:
    return SeqParams(p.a, p.b, p.c, Fraction(0), Fraction(1))


@dataclass
class AggregateReport:
    """One line of the JSONL output: an identity over one parameter tuple."""

    identity: str
    params: SeqParams
    ranges: dict
    checks: int = 0
    passes: int = 0
    failures: int = 0
    expected_failures: int = 0
    errors: int = 0
    expected_errors: int = 0
    xpasses: int = 0
    first_failure: dict | None = None
    first_expected: dict | None = None

    @property
    def passed(self) -> bool:
        """No unexpected failures or errors."""
        return self.failures == 0 and self.errors == 0

    @property
    def clean(self) -> bool:
        return self.passed and self.expected_failures == 0 and self.expected_errors == 0

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": _params_dict(self.params),
            "ranges": self.ranges,
            "checks": self.checks,
            "passes": self.passes,
            "failures": self.failures,
            "expected_failures": self.expected_failures,
            "errors": self.errors,
            "expected_errors": self.expected_errors,
            "xpasses": self.xpasses,
            "passed": self.passed,
            "clean": self.clean,
            "first_failure": self.first_failure,
            "first_expected": self.first_expected,
        }


def run_identity(config: SweepConfig, identity: str) -> list[AggregateReport]:
    rng = config.range_for(identity)
    idx_list = index_tuples(identity, rng)
    if identity in ABC_SCOPE:
        seen, tuples = set(), []
        for p in config.grid:
            key = p.triple()
            if key not in seen:
                seen.add(key)
                tuples.append(_abc_representative(p))
    else:
        tuples = list(config.grid)

    out = []
    for p in tuples:
        hs = HybridSeq(p)
        agg = AggregateReport(identity, p, rng)
        for idx in idx_list:
            agg.checks += 1
            expect = config.expected_outcome(identity, p, idx)
            try:
                rep = check_one(identity, hs, idx)
                outcome = "pass" if rep.passed else "fail"
            except idn.SummationDegenerateError as exc:
                rep, outcome = None, "error"
                error_note = str(exc)
            if outcome == "pass":
                if expect is not None:
                    agg.xpasses += 1
                agg.passes += 1
            elif outcome == "fail":
                detail = {"indices": list(idx),
                          "residual": str(rep.residual), "note": rep.note}
                if expect is not None and expect["outcome"] == "fail":
                    agg.expected_failures += 1
                    if agg.first_expected is None:
                        agg.first_expected = {**detail, "reason": expect["reason"]}
                else:
                    agg.failures += 1
                    if agg.first_failure is None:
                        agg.first_failure = detail
            else:
                detail = {"indices": list(idx), "error": error_note}
                if expect is not None and expect["outcome"] == "error":
                    agg.expected_errors += 1
                    if agg.first_expected is None:
                        agg.first_expected = {**detail, "reason": expect["reason"]}
                else:
                    agg.errors += 1
                    if agg.first_failure is None:
                        agg.first_failure = detail
        out.append(agg)
    return out


@dataclass
class SweepResult:
    reports: list[AggregateReport]
    exit_code: int

    def summary_rows(self) -> list[dict]:
        rows: dict[str, dict] = {}
        for rep in self.reports:
            row = rows.setdefault(rep.identity, {
                "identity": rep.identity, "grid_size": 0, "checks": 0,
                "passes": 0, "failures": 0, "expected_failures": 0,
                "errors": 0, "expected_errors": 0,
            })
            row["grid_size"] += 1
            for key in ("checks", "passes", "failures", "expected_failures",
                        "errors", "expected_errors"):
                row[key] += getattr(rep, key)
        return [rows[name] for name in sorted(rows)]


def run_sweep(config: SweepConfig) -> SweepResult:
    reports: list[AggregateReport] = []
    for identity in config.identities:
        reports.extend(run_identity(config, identity))
    bad = sum(r.failures + r.errors for r in reports)
    return SweepResult(reports, 0 if bad == 0 else 1)


def write_reports_jsonl(path: Path, result: SweepResult) -> None:
    with open(path, "w") as fh:
        for rep in result.reports:
            fh.write(json.dumps(rep.to_json_dict(), sort_keys=True) + "\n")


def write_summary_csv(path: Path, result: SweepResult) -> None:
    rows = result.summary_rows()
    fields = ["identity", "grid_size", "checks", "passes", "failures",
              "expected_failures", "errors", "expected_errors"]
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)
