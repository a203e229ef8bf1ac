"""Morphology pair discovery: edit-distance x mutual-information ranking."""

from ._core import (
    CalibrationError,
    ConfigError,
    UndefinedScoreError,
    edit_distance,
    extract_rules,
    generate_synthetic_corpus,
    longest_common_edges,
    ortho_similarity,
    parse_pair,
    precision_at_cutoffs,
    rank_text,
    tokenize,
)

__all__ = [
    "CalibrationError",
    "ConfigError",
    "UndefinedScoreError",
    "edit_distance",
    "extract_rules",
    "generate_synthetic_corpus",
    "longest_common_edges",
    "ortho_similarity",
    "parse_pair",
    "precision_at_cutoffs",
    "rank_text",
    "tokenize",
]
