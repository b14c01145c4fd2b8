"""Topological entropy of braids from Dynnikov coordinate orbits."""

from .analysis import ConvergenceFit, fit_envelope, reference_entropy
from .dynnikov import (
    LaminationCoords,
    apply_generator,
    apply_word,
    l0,
    reduced_intersection_count,
    scale,
)
from .entropy import (
    EntropyEstimate,
    OrbitTrace,
    estimate,
    estimate_cesaro,
    estimate_ratio,
    orbit,
    symmetry_check,
)
from .search import max_entropy_survey
from .words import BraidWord, Letter, canonical_form, free_reduce, is_alternating, parse_braid

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "ConvergenceFit",
    "EntropyEstimate",
    "LaminationCoords",
    "Letter",
    "OrbitTrace",
    "apply_generator",
    "apply_word",
    "canonical_form",
    "estimate",
    "estimate_cesaro",
    "estimate_ratio",
    "fit_envelope",
    "free_reduce",
    "is_alternating",
    "l0",
    "max_entropy_survey",
    "orbit",
    "parse_braid",
    "reduced_intersection_count",
    "reference_entropy",
    "scale",
    "symmetry_check",
]
