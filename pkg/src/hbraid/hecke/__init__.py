"""Hecke-type algebras: H_n(q), H_{1,n}(q) and H_{g,n}(q)."""

from .hgn import (
    FailureReport,
    HgnElement,
    SigmaWord,
    parse_expr,
    parse_mixed,
    push_rule,
    sigma_reduce,
    specialize_q1,
    wreath_eval,
)
from .hn import hn_mul, hn_reduce
from .laurent import Laurent, parse_laurent
from .probe import ProbeReport, conjecture_probe

__all__ = [
    "FailureReport",
    "HgnElement",
    "Laurent",
    "ProbeReport",
    "SigmaWord",
    "conjecture_probe",
    "hn_mul",
    "hn_reduce",
    "parse_expr",
    "parse_laurent",
    "parse_mixed",
    "push_rule",
    "sigma_reduce",
    "specialize_q1",
    "wreath_eval",
]
