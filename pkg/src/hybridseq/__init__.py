"""Exact arithmetic for bi-periodic Horadam hybrid numbers.

The package computes in exact rational arithmetic and in a formal quadratic
extension, so every identity check is an equality of canonical fractions --
there is no floating point anywhere except the convenience hybrid norm.
"""

from .scalars import (
    DegenerateSplitError,
    QuadExt,
    RadicandMismatchError,
    Rational,
    quad_inv,
    quad_mul,
    quad_pow,
    rat,
    rat_arith,
    rat_str,
)
from .hybrid import (
    Hybrid,
    hybrid_character,
    hybrid_conj,
    hybrid_mul,
    hybrid_norm_f64,
    lift_to_quadext,
)
from .sequences import (
    SeqKind,
    SeqParams,
    Sequence,
    parity,
    root_power_expansion_check,
    sequence,
    term_binet,
    term_recurrence,
    u_v_relation_check,
)
from .hybrid_sequences import (
    FAMILIES,
    FamilyError,
    HybridSeq,
    NamedFamily,
    RootHybrids,
    family_lookup,
    hybrid_character_seq,
    hybrid_term,
    hybrid_term_binet,
    root_hybrids,
)
from .identities import (
    IdentityReport,
    LemmaConstants,
    SummationDegenerateError,
    lemma_constants,
)
from .sweep import SweepConfig, run_sweep, standard_grid

__version__ = "0.1.0"

__all__ = [
    "DegenerateSplitError",
    "FAMILIES",
    "FamilyError",
    "Hybrid",
    "HybridSeq",
    "IdentityReport",
    "LemmaConstants",
    "NamedFamily",
    "QuadExt",
    "RadicandMismatchError",
    "Rational",
    "RootHybrids",
    "SeqKind",
    "SeqParams",
    "Sequence",
    "SummationDegenerateError",
    "SweepConfig",
    "family_lookup",
    "hybrid_character",
    "hybrid_character_seq",
    "hybrid_conj",
    "hybrid_mul",
    "hybrid_norm_f64",
    "hybrid_term",
    "hybrid_term_binet",
    "lemma_constants",
    "lift_to_quadext",
    "parity",
    "quad_inv",
    "quad_mul",
    "quad_pow",
    "rat",
    "rat_arith",
    "rat_str",
    "root_hybrids",
    "root_power_expansion_check",
    "run_sweep",
    "sequence",
    "standard_grid",
    "term_binet",
    "term_recurrence",
    "u_v_relation_check",
]
