"""Redundancy, star graphs and special-presentation detection for cyclic presentations."""

from __future__ import annotations

from .freeword import Word, WordError, format_word, parse_word
from .kernels import BACKEND
from .presentation import (
    CyclicPresentation,
    PresentationError,
    RedundancyKind,
    RedundancyReport,
    Truncation,
    classify_redundancy,
    concise_refinement,
    find_period,
    make_presentation,
)
from .search import BudgetExceeded, EnumSpec, crossvalidate, enumerate_words, find_special
from .special import (
    SpecialCertificate,
    TheoremVerdict,
    certificate_json,
    check_2knu,
    check_3knu,
    group_property_flags,
    is_perfect_difference_set,
    is_special_direct,
    theorem_verdict,
)
from .stargraph import (
    LabeledMultigraph,
    are_isomorphic,
    difference_multisets,
    metrics,
    recognize,
    star_graph,
    structural_star_graph,
    to_dot,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "CyclicPresentation",
    "EnumSpec",
    "LabeledMultigraph",
    "PresentationError",
    "RedundancyKind",
    "RedundancyReport",
    "SpecialCertificate",
    "TheoremVerdict",
    "Truncation",
    "Word",
    "WordError",
    "are_isomorphic",
    "certificate_json",
    "check_2knu",
    "check_3knu",
    "classify_redundancy",
    "concise_refinement",
    "crossvalidate",
    "difference_multisets",
    "enumerate_words",
    "find_period",
    "find_special",
    "format_word",
    "group_property_flags",
    "is_perfect_difference_set",
    "is_special_direct",
    "make_presentation",
    "metrics",
    "parse_word",
    "recognize",
    "star_graph",
    "structural_star_graph",
    "theorem_verdict",
    "to_dot",
]
