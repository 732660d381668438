"""Exact projective invariants, fingerprints and matching for point configurations in the projective plane."""

__version__ = "0.1.0"

from .cross_invariants import CIndex, CTable, all_c_values, c_value, canonical_cindex, generic_distinctness, relation_residuals
from .errors import (
    DegenerateDenominator,
    DegenerateInput,
    ParseError,
    ProjInvError,
    ResamplingExhausted,
    ThreeCollinear,
    TooFewPoints,
)
from .fingerprint import Fingerprint, GenericityReport, fingerprint, fingerprints_equal, genericity_report
from .five_point_signature import Signature, esym_signature, m_values, signature, signature_direct, signature_from_xy
from .generate import random_generic_config
from .matcher import MatchResult, brute_force_match, match_configs, verify_match
from .projective_maps import ProjMap, apply, compose, frame_map, invert, labeled_equivalent, transform
from .scalar_geometry import Configuration, ProjPoint, Rational, bracket, no_three_collinear
from .subset_distributions import SubsetSignature, demo_translation, is_translate, mu, translation2_sig, translation3_sig

__all__ = [
    "CIndex",
    "CTable",
    "Configuration",
    "DegenerateDenominator",
    "DegenerateInput",
    "Fingerprint",
    "GenericityReport",
    "MatchResult",
    "ParseError",
    "ProjInvError",
    "ProjMap",
    "ProjPoint",
    "Rational",
    "ResamplingExhausted",
    "Signature",
    "SubsetSignature",
    "ThreeCollinear",
    "TooFewPoints",
    "all_c_values",
    "apply",
    "bracket",
    "brute_force_match",
    "c_value",
    "canonical_cindex",
    "compose",
    "demo_translation",
    "esym_signature",
    "fingerprint",
    "fingerprints_equal",
    "frame_map",
    "generic_distinctness",
    "genericity_report",
    "invert",
    "is_translate",
    "labeled_equivalent",
    "m_values",
    "match_configs",
    "mu",
    "no_three_collinear",
    "random_generic_config",
    "relation_residuals",
    "signature",
    "signature_direct",
    "signature_from_xy",
    "transform",
    "translation2_sig",
    "translation3_sig",
    "verify_match",
]
