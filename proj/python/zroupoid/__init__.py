"""Finite implication zroupoids: identity checking, chains and enumeration."""

from ._core import (
    Algebra,
    EquivalenceViolation,
    NotAChain,
    SizeLimit,
    TermSyntaxError,
    ValidationError,
    ZroupoidError,
    build_chain,
    canonical_form,
    catalog,
    check,
    classify_chain,
    constant_zero_algebra,
    enumerate,
    isomorphism,
    join,
    leq,
    meet,
    normalize,
    order_report,
    run_lemmas,
)

__all__ = [
    "Algebra",
    "EquivalenceViolation",
    "NotAChain",
    "SizeLimit",
    "TermSyntaxError",
    "ValidationError",
    "ZroupoidError",
    "build_chain",
    "canonical_form",
    "catalog",
    "check",
    "classify_chain",
    "constant_zero_algebra",
    "enumerate",
    "isomorphism",
    "join",
    "leq",
    "meet",
    "normalize",
    "order_report",
    "run_lemmas",
]
